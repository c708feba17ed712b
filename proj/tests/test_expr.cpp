#include "uaw/expr.hpp"
#include "uaw/morphism.hpp"

#include "doctest.h"

#include <random>

using namespace uaw;

namespace {

RatFuncQ qp(int e) { return RatFuncQ::q_power(e); }

std::mt19937_64 rng_for(int salt) { return std::mt19937_64(20260816u + salt); }

int draw(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % n); }

RatFuncQ random_coeff(std::mt19937_64& rng, bool allow_fraction) {
  auto laurent = [&rng] {
    LaurentQ p;
    int nterms = 1 + draw(rng, 2);
    for (int t = 0; t < nterms; ++t) {
      int c = draw(rng, 9) - 4;
      if (c == 0) c = 2;
      p.add_term(draw(rng, 5) - 2, QRational(c, 1 + draw(rng, 3)));
    }
    if (p.is_zero()) p.add_term(0, 1);
    return p;
  };
  LaurentQ num = laurent();
  if (allow_fraction && draw(rng, 3) == 0) return RatFuncQ(num, laurent());
  return RatFuncQ(num);
}

DeltaElement random_element(std::mt19937_64& rng, int max_deg) {
  DeltaElement x;
  int n = 1 + draw(rng, 4);
  for (int t = 0; t < n; ++t) {
    PBWMonomial m;
    int d = draw(rng, max_deg + 1);
    int* slot[6] = {&m.i, &m.j, &m.k, &m.r, &m.s, &m.t};
    for (int b = 0; b < d; ++b) ++*slot[draw(rng, 6)];
    x.add_term(m, random_coeff(rng, true));
  }
  return x;
}

}  // namespace

TEST_CASE("grammar basics") {
  DeltaElement A = DeltaElement::A(), B = DeltaElement::B(), C = DeltaElement::C();

  CHECK(parse_element("A") == A);
  CHECK(parse_element("al") == DeltaElement::alpha());
  CHECK(parse_element("Om") == casimir());
  CHECK(parse_element("q") == DeltaElement(qp(1)));
  CHECK(parse_element("q^-3") == DeltaElement(qp(-3)));
  CHECK(parse_element("7") == DeltaElement(7));
  CHECK(parse_element("3/2") == DeltaElement(QRational(3, 2)));
  CHECK(parse_element("6/2") == DeltaElement(3));
  CHECK(parse_element("0*A").is_zero());

  // adjacency is product, and letter runs split into known symbols
  CHECK(parse_element("A B C") == A * B * C);
  CHECK(parse_element("q^2*A B C") == qp(2) * (A * B * C));
  CHECK(parse_element("BA") == B * A);
  CHECK(parse_element("ABga") == A * B * DeltaElement::gamma());
  CHECK(parse_element("A al") == A * DeltaElement::alpha());

  // precedence: ^ then product, then unary minus, then sums
  CHECK(parse_element("-q^2*A") == -(qp(2) * A));
  CHECK(parse_element("A - B*C") == A - B * C);
  CHECK(parse_element("A^2 B") == A * A * B);
  CHECK(parse_element("(A + B)^2") == (A + B) * (A + B));
  CHECK(parse_element("Om^2 * al") == casimir_power(2) * DeltaElement::alpha());
  CHECK(parse_element("(q^2)^3") == DeltaElement(qp(6)));
  CHECK(parse_element("2^3") == DeltaElement(8));
}

TEST_CASE("defining relation through the parser") {
  // q AB - q^-1 BA = (q - q^-1) ga - (q^2 - q^-2) C
  DeltaElement lhs = parse_element("q*A*B - q^-1*B*A");
  DeltaElement rhs = (qp(1) - qp(-1)) * DeltaElement::gamma() - (qp(2) - qp(-2)) * DeltaElement::C();
  CHECK(lhs == rhs);
}

TEST_CASE("syntax errors carry offsets") {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      (void)Expr::parse(text);
    } catch (const parse_error& e) {
      return e.offset;
    }
    return static_cast<std::size_t>(-1);
  };

  CHECK(offset_of("A +* B") == 3);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("(A") == 2);
  CHECK(offset_of("A^-1") == 2);   // negative exponent only on q
  CHECK(offset_of("Om^-1") == 3);
  CHECK(offset_of("A^x") == 2);
  CHECK(offset_of("A B )") == 4);
  CHECK(offset_of("x") == 0);      // unknown symbol
  CHECK(offset_of("Ab") == 1);     // 'A' then unknown 'b'
  CHECK(offset_of("A ? B") == 2);
  CHECK(offset_of("q^99999999") == 2);
  CHECK_THROWS_AS((void)Expr::parse("A +* B"), parse_error);
}

TEST_CASE("division is by scalars only") {
  CHECK(parse_element("A/2") == RatFuncQ(QRational(1, 2)) * DeltaElement::A());
  CHECK(parse_element("A/(q + q^-1)") == (qp(1) + qp(-1)).inverse() * DeltaElement::A());
  CHECK_THROWS_AS((void)parse_element("A/B"), eval_error);
  CHECK_THROWS_AS((void)parse_element("A/(q - q)"), eval_error);
  CHECK_THROWS_AS((void)parse_element("A/0"), eval_error);
}

TEST_CASE("multi-term scalar coefficients render with parens") {
  DeltaElement x = DeltaElement::A() - DeltaElement(RatFuncQ(LaurentQ::q_power(1) + LaurentQ(1)));
  CHECK(x.str() == "-(q + 1) + A");
  CHECK(parse_element(x.str()) == x);

  DeltaElement y = DeltaElement(RatFuncQ(LaurentQ(1) - LaurentQ::q_power(1))) + DeltaElement::B();
  CHECK(parse_element(y.str()) == y);
}

TEST_CASE("parse o render is the identity") {
  auto rng = rng_for(1);
  for (int it = 0; it < 60; ++it) {
    DeltaElement x = random_element(rng, 5);
    CAPTURE(x.str());
    CHECK(parse_element(x.str()) == x);
  }
  CHECK(parse_element(DeltaElement().str()).is_zero());
  CHECK(parse_element(casimir().str()) == casimir());

  // frozen rendering of the resolved overlap comes back unchanged
  Word cba{Letter::C, Letter::B, Letter::A};
  DeltaElement red = DeltaElement::normalize(RawElement(cba));
  CHECK(parse_element(red.str()) == red);

  // Omega-basis strings evaluate back through Om
  DeltaElement abc{PBWMonomial{1, 1, 1, 0, 0, 0}};
  OmegaElement om = to_omega_basis(abc);
  CHECK(parse_element(om.str()) == abc);
}
