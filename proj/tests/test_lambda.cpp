#include "uaw/lambda_rep.hpp"

#include <doctest.h>

#include <random>

#include "test_helpers.hpp"

using namespace uaw;
using namespace uaw::testing;
using D = DeltaElement;

namespace {

LaurentL la(int e, int c = 1) { return LaurentL::la_power(e, RatFuncQ(c)); }

LaurentMat2 random_mat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto entry = [&] {
    LaurentL x;
    x.add_term(exp(rng), QRational(coef(rng)));
    x.add_term(exp(rng), QRational(coef(rng)));
    return x;
  };
  return {entry(), entry(), entry(), entry()};
}

}  // namespace

TEST_CASE("named matrices and their determinants") {
  const LaurentMat2 I = LaurentMat2::identity();
  CHECK(mat_A().e11 == la(1));
  CHECK(mat_A().e12 == LaurentL(1) - la(-1));
  CHECK(mat_A().e21 == LaurentL());
  CHECK(mat_A().e22 == la(-1));
  CHECK(mat_p().str() == "[[0, -1], [1, 1]]");
  CHECK(mat_s().str() == "[[0, 1], [la, 0]]");

  CHECK(mat_A() * mat_B() * mat_C() == I);
  CHECK(mat_A().det() == LaurentL(1));
  CHECK(mat_B().det() == LaurentL(1));
  CHECK(mat_C().det() == LaurentL(1));
  CHECK(mat_p().det() == LaurentL(1));
  CHECK(mat_s().det() == -la(1));

  CHECK(mat_p().pow(3) == -I);
  CHECK(mat_s().pow(2) == LaurentMat2::scalar(la(1)));

  for (const LaurentMat2* m : {&mat_A(), &mat_B(), &mat_C()})
    CHECK(*m + m->inverse() == LaurentMat2::scalar(mu_lambda()));
}

TEST_CASE("multiplication table") {
  const LaurentMat2 &A = mat_A(), &B = mat_B(), &C = mat_C();
  const LaurentL& mu = mu_lambda();
  const LaurentMat2 I = LaurentMat2::identity();
  LaurentL mu2 = mu * mu;

  CHECK(A * A == mu * A - I);
  CHECK(A * B == mu * I - C);
  CHECK(A * C == mu * A + B + mu * C - mu2 * I);
  CHECK(B * A == mu * B + C + mu * A - mu2 * I);
  CHECK(B * B == mu * B - I);
  CHECK(B * C == mu * I - A);
  CHECK(C * A == mu * I - B);
  CHECK(C * B == mu * C + A + mu * B - mu2 * I);
  CHECK(C * C == mu * C - I);
}

TEST_CASE("inverses") {
  LaurentMat2 ainv = mat_A().inverse();
  CHECK(ainv.e11 == la(-1));
  CHECK(ainv.e12 == la(-1) - LaurentL(1));
  CHECK(ainv.e21 == LaurentL());
  CHECK(ainv.e22 == la(1));

  LaurentMat2 sinv = mat_s().inverse();
  CHECK(sinv.e11 == LaurentL());
  CHECK(sinv.e12 == la(-1));
  CHECK(sinv.e21 == LaurentL(1));
  CHECK(sinv.e22 == LaurentL());

  LaurentMat2 ones{LaurentL(1), LaurentL(1), LaurentL(1), LaurentL(1)};
  CHECK_THROWS_AS(ones.inverse(), non_unit_determinant);
  // nonzero but non-monomial determinant is not a unit either
  LaurentMat2 diag{LaurentL(1) + la(1), LaurentL(), LaurentL(), LaurentL(1)};
  CHECK_THROWS_AS(diag.inverse(), non_unit_determinant);
}

TEST_CASE("pi on generators") {
  LaurentMat2 pa = pi_map(D::A());
  RatFuncQ w = rq(1) - rq(-1);
  CHECK(pa.e11 == la(1) * LaurentL(rq(1)) + la(-1) * LaurentL(rq(-1)));
  CHECK(pa.e12 == LaurentL(w) - LaurentL::la_power(-1, w));
  CHECK(pa.e21 == LaurentL());
  CHECK(pa.e22 == la(-1) * LaurentL(rq(1)) + la(1) * LaurentL(rq(-1)));

  const LaurentMat2 nuI = LaurentMat2::scalar(nu_lambda());
  CHECK(pi_map(D::alpha()) == nuI);
  CHECK(pi_map(D::beta()) == nuI);
  CHECK(pi_map(D::gamma()) == nuI);
  CHECK(pi_map(D(1)) == LaurentMat2::identity());

  // the defining relation collapses to nu I
  RatFuncQ u = rq(1) + rq(-1);
  D rel = u * D::A() + w.inverse() * (rq(1) * (D::B() * D::C()) - rq(-1) * (D::C() * D::B()));
  CHECK(pi_map(rel) == nuI);
}

TEST_CASE("pi is an algebra homomorphism") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_element = [&] {
    D x;
    for (int t = 0; t < 3; ++t) {
      int e[6] = {};
      for (int n = pick(rng) % 4; n > 0; --n) ++e[pick(rng)];
      x.add_term({e[0], e[1], e[2], e[3], e[4], e[5]}, QRational(coef(rng)));
    }
    return x;
  };
  for (int iter = 0; iter < 25; ++iter) {
    D x = random_element();
    D y = random_element();
    CHECK(pi_map(x * y) == pi_map(x) * pi_map(y));
    CHECK(pi_map(x + y) == pi_map(x) + pi_map(y));
  }
  CHECK(is_central_lambda(pi_map(casimir())));
}

TEST_CASE("centrality in the matrix algebra") {
  CHECK(is_central_lambda(LaurentMat2::identity()));
  CHECK(is_central_lambda(LaurentMat2::scalar(la(3))));
  CHECK_FALSE(is_central_lambda(mat_p()));
  CHECK_FALSE(is_central_lambda(mat_A()));

  // non-scalar matrices commute with at most one of the three named ones
  std::mt19937_64 rng(53);
  auto commutes = [](const LaurentMat2& m, const LaurentMat2& x) { return m * x == x * m; };
  for (int iter = 0; iter < 20; ++iter) {
    LaurentMat2 m = random_mat(rng);
    if (is_central_lambda(m)) continue;
    int count = commutes(m, mat_A()) + commutes(m, mat_B()) + commutes(m, mat_C());
    CHECK(count <= 1);
  }
  // mat_A commutes with itself, so it must fail against the other two
  CHECK_FALSE(commutes(mat_A(), mat_B()));
  CHECK_FALSE(commutes(mat_A(), mat_C()));
}

TEST_CASE("conjugation action on the matrix side") {
  CHECK(psl2z_on_lambda("r", mat_A()) == mat_B());
  CHECK(psl2z_on_lambda("r", mat_B()) == mat_C());
  CHECK(psl2z_on_lambda("r", mat_C()) == mat_A());
  CHECK(psl2z_on_lambda("s", mat_A()) == mat_B());
  CHECK(psl2z_on_lambda("s", mat_B()) == mat_A());

  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 10; ++iter) {
    LaurentMat2 m = random_mat(rng);
    CHECK(psl2z_on_lambda("rrr", m) == m);
    CHECK(psl2z_on_lambda("ss", m) == m);
    CHECK(psl2z_on_lambda("rR", m) == m);
    CHECK(psl2z_on_lambda("rs", m) ==
          psl2z_on_lambda("r", psl2z_on_lambda("s", m)));
  }
}

TEST_CASE("faithfulness probe") {
  FaithfulnessReport rep = faithfulness_probe(6);
  CHECK(rep.ok());
  // lengths 1..6 of alternating words: 3 + 4 + 6 + 8 + 12 + 16
  CHECK(rep.words_checked == 49);

  FaithfulnessReport one = faithfulness_probe(1);
  CHECK(one.words_checked == 3);
  CHECK(one.ok());
}

TEST_CASE("commuting diagram between the two actions") {
  for (Letter l : {Letter::A, Letter::B, Letter::C, Letter::al, Letter::be, Letter::ga}) {
    CHECK(verify_commuting_diagram('r', D::generator(l)));
    CHECK(verify_commuting_diagram('s', D::generator(l)));
  }
  D x = D::A() * D::B() - rq(2) * D::C();
  CHECK(verify_commuting_diagram('r', x));
  CHECK(verify_commuting_diagram('s', x));
  CHECK(verify_commuting_diagram('s', casimir()));
}

TEST_CASE("laurent rendering in la") {
  CHECK(mu_lambda().str() == "la + la^-1");
  CHECK(LaurentL().str() == "0");
  LaurentL x = LaurentL(rq(1) + rq(-1)) * la(2) - LaurentL(1);
  CHECK(x.str() == "(q + q^-1)*la^2 - 1");
}
