#include "uaw/morphism.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace uaw {

namespace {
RatFuncQ qp(int e) { return RatFuncQ::q_power(e); }

// relation expression X + (q YZ - q^-1 ZY)/(q^2 - q^-2)
DeltaElement relation_expr(const DeltaElement& x, const DeltaElement& y, const DeltaElement& z) {
  RatFuncQ inv_t = (qp(2) - qp(-2)).inverse();
  return x + inv_t * (qp(1) * (y * z) - qp(-1) * (z * y));
}
}  // namespace

GeneratorImages GeneratorImages::validated(DeltaElement a, DeltaElement b, DeltaElement c,
                                           DeltaElement al, DeltaElement be, DeltaElement ga) {
  RatFuncQ inv_u = (qp(1) + qp(-1)).inverse();
  const DeltaElement rels[3] = {relation_expr(a, b, c), relation_expr(b, c, a),
                                relation_expr(c, a, b)};
  const DeltaElement* greek[3] = {&al, &be, &ga};
  for (int n = 0; n < 3; ++n) {
    if (!is_central(rels[n]))
      throw std::invalid_argument("generator images: relation image is not central");
    if (rels[n] != inv_u * *greek[n])
      throw std::invalid_argument("generator images: relation image does not match");
  }
  return GeneratorImages{std::move(a), std::move(b), std::move(c),
                         std::move(al), std::move(be), std::move(ga)};
}

const DeltaElement& GeneratorImages::of(Letter l) const {
  switch (l) {
    case Letter::A: return imgA;
    case Letter::B: return imgB;
    case Letter::C: return imgC;
    case Letter::al: return imgAlpha;
    case Letter::be: return imgBeta;
    default: return imgGamma;
  }
}

const GeneratorImages& GeneratorImages::identity() {
  using D = DeltaElement;
  static const GeneratorImages g = validated(D::A(), D::B(), D::C(), D::alpha(), D::beta(),
                                             D::gamma());
  return g;
}

const GeneratorImages& GeneratorImages::rho() {
  using D = DeltaElement;
  static const GeneratorImages g = validated(D::B(), D::C(), D::A(), D::beta(), D::gamma(),
                                             D::alpha());
  return g;
}

const GeneratorImages& GeneratorImages::sigma() {
  using D = DeltaElement;
  static const GeneratorImages g = [] {
    RatFuncQ inv_w = (qp(1) - qp(-1)).inverse();
    D c = D::C() + inv_w * commutator(D::A(), D::B());
    return validated(D::B(), D::A(), std::move(c), D::beta(), D::alpha(), D::gamma());
  }();
  return g;
}

const GeneratorImages& GeneratorImages::klein(Letter fixed) {
  using D = DeltaElement;
  auto flip = [](Letter fx) {
    // the two Latin generators other than fx are negated; the Greek one
    // attached to fx survives, the other two flip sign (each defining
    // relation carries an even number of sign changes exactly then)
    auto sgn = [fx](Letter l, const D& x) { return l == fx ? x : -x; };
    return validated(sgn(Letter::A, D::A()), sgn(Letter::B, D::B()), sgn(Letter::C, D::C()),
                     sgn(Letter::A, D::alpha()), sgn(Letter::B, D::beta()),
                     sgn(Letter::C, D::gamma()));
  };
  static const GeneratorImages ka = flip(Letter::A);
  static const GeneratorImages kb = flip(Letter::B);
  static const GeneratorImages kc = flip(Letter::C);
  switch (fixed) {
    case Letter::A: return ka;
    case Letter::B: return kb;
    case Letter::C: return kc;
    default: throw std::invalid_argument("klein flip fixes A, B or C");
  }
}

namespace {

// powers of one image, grown on demand
class PowCache {
 public:
  explicit PowCache(const DeltaElement& base) : pows_{DeltaElement(1), base} {}
  const DeltaElement& get(int e) {
    while (static_cast<int>(pows_.size()) <= e) pows_.push_back(pows_.back() * pows_[1]);
    return pows_[static_cast<size_t>(e)];
  }

 private:
  std::vector<DeltaElement> pows_;
};

}  // namespace

DeltaElement apply_endo(const GeneratorImages& images, const DeltaElement& x) {
  PowCache pa(images.imgA), pb(images.imgB), pc(images.imgC);
  PowCache pal(images.imgAlpha), pbe(images.imgBeta), pga(images.imgGamma);
  DeltaElement out;
  for (const auto& [m, c] : x.terms()) {
    DeltaElement term = pa.get(m.i) * pb.get(m.j) * pc.get(m.k) * pal.get(m.r) *
                        pbe.get(m.s) * pga.get(m.t);
    out += c * term;
  }
  return out;
}

DeltaElement rho(const DeltaElement& x) { return apply_endo(GeneratorImages::rho(), x); }
DeltaElement sigma(const DeltaElement& x) { return apply_endo(GeneratorImages::sigma(), x); }

DeltaElement psl2z_word(std::string_view word, const DeltaElement& x) {
  DeltaElement out = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case 'r': out = rho(out); break;
      case 'R': out = rho(rho(out)); break;
      case 's': out = sigma(out); break;
      default: throw std::invalid_argument("automorphism word letters are r, R, s");
    }
  }
  return out;
}

DeltaElement klein_flip(Letter fixed, const DeltaElement& x) {
  return apply_endo(GeneratorImages::klein(fixed), x);
}

DeltaElement specialize_aw(const DeltaElement& x, const RatFuncQ& a, const RatFuncQ& b,
                           const RatFuncQ& c) {
  DeltaElement out;
  for (const auto& [m, v] : x.terms()) {
    RatFuncQ f = v;
    for (int n = 0; n < m.r; ++n) f *= a;
    for (int n = 0; n < m.s; ++n) f *= b;
    for (int n = 0; n < m.t; ++n) f *= c;
    out.add_term({m.i, m.j, m.k, 0, 0, 0}, f);
  }
  return out;
}

std::string CommMonomial::str() const {
  std::string out;
  auto app = [&out](const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  app("Ab", i);
  app("Bb", j);
  app("Cb", k);
  return out.empty() ? "1" : out;
}

CommPoly::CommPoly(const RatFuncQ& c) {
  if (!c.is_zero()) terms_.emplace(CommMonomial{}, c);
}
CommPoly::CommPoly(const CommMonomial& m, const RatFuncQ& c) { add_term(m, c); }

bool CommPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

void CommPoly::add_term(const CommMonomial& m, const RatFuncQ& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}
CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}
CommPoly& CommPoly::operator*=(const CommPoly& o) {
  CommPoly prod;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      prod.add_term({m1.i + m2.i, m1.j + m2.j, m1.k + m2.k}, c1 * c2);
  *this = std::move(prod);
  return *this;
}
CommPoly CommPoly::operator-() const {
  CommPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

CommPoly CommPoly::pow(int n) const {
  assert(n >= 0);
  CommPoly acc(RatFuncQ(1));
  CommPoly base = *this;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    if (e > 1) base *= base;
  }
  return acc;
}

CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
CommPoly operator*(CommPoly a, const CommPoly& b) { return a *= b; }

namespace {
std::string poly_term_body(const RatFuncQ& c, const std::string& mono, bool unit) {
  std::string cs = c.str();
  if (c.is_laurent() && c.num().terms().size() > 1) cs = "(" + cs + ")";  // see term_body in delta.cpp
  if (unit) return cs;
  if (c.is_one()) return mono;
  return cs + "*" + mono;
}
}  // namespace

std::string CommPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = c.negative_leading();
    RatFuncQ body = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += poly_term_body(body, m.str(), m.degree() == 0);
  }
  return out;
}

namespace {

const CommPoly& barred_image(Letter l) {
  static const CommPoly ab{CommMonomial{1, 0, 0}};
  static const CommPoly bb{CommMonomial{0, 1, 0}};
  static const CommPoly cb{CommMonomial{0, 0, 1}};
  static const CommPoly al = [] {
    CommPoly x(CommMonomial{1, 0, 0}, qp(1) + qp(-1));
    x.add_term({0, 1, 1}, RatFuncQ(1));
    return x;
  }();
  static const CommPoly be = [] {
    CommPoly x(CommMonomial{0, 1, 0}, qp(1) + qp(-1));
    x.add_term({1, 0, 1}, RatFuncQ(1));
    return x;
  }();
  static const CommPoly ga = [] {
    CommPoly x(CommMonomial{0, 0, 1}, qp(1) + qp(-1));
    x.add_term({1, 1, 0}, RatFuncQ(1));
    return x;
  }();
  switch (l) {
    case Letter::A: return ab;
    case Letter::B: return bb;
    case Letter::C: return cb;
    case Letter::al: return al;
    case Letter::be: return be;
    default: return ga;
  }
}

}  // namespace

CommPoly abelianize(const DeltaElement& x) {
  CommPoly out;
  for (const auto& [m, c] : x.terms()) {
    CommPoly term(CommMonomial{m.i, m.j, m.k}, c);
    term *= barred_image(Letter::al).pow(m.r);
    term *= barred_image(Letter::be).pow(m.s);
    term *= barred_image(Letter::ga).pow(m.t);
    out += term;
  }
  return out;
}

bool in_subalgebra(const DeltaElement& x, GenPair pair) {
  CommPoly img = abelianize(x);
  for (const auto& [m, c] : img.terms()) {
    switch (pair) {
      case GenPair::AB: if (m.k != 0) return false; break;
      case GenPair::BC: if (m.i != 0) return false; break;
      case GenPair::AC: if (m.j != 0) return false; break;
    }
  }
  return true;
}

bool in_commutator_ideal(const DeltaElement& x) { return abelianize(x).is_zero(); }

bool in_commutator_ideal_plus_1(const DeltaElement& x) { return abelianize(x).is_constant(); }

bool triple_intersection_check(const DeltaElement& x) {
  bool in_all = in_subalgebra(x, GenPair::AB) && in_subalgebra(x, GenPair::BC) &&
                in_subalgebra(x, GenPair::AC);
  assert(in_all == in_commutator_ideal_plus_1(x));
  return in_all;
}

std::array<int, 3> s3_of_word(std::string_view word) {
  constexpr std::array<int, 3> id{0, 1, 2};
  constexpr std::array<int, 3> rho_perm{1, 2, 0};      // Ab -> Bb -> Cb -> Ab
  constexpr std::array<int, 3> rho_inv_perm{2, 0, 1};
  constexpr std::array<int, 3> sigma_perm{1, 0, 2};    // swap Ab, Bb
  auto compose = [](const std::array<int, 3>& f, const std::array<int, 3>& g) {
    // apply g first, then f
    return std::array<int, 3>{f[g[0]], f[g[1]], f[g[2]]};
  };
  // the word acts rightmost-first, so scanning left to right keeps composing
  // each new letter on the inside
  std::array<int, 3> acc = id;
  for (char ch : word) {
    switch (ch) {
      case 'r': acc = compose(acc, rho_perm); break;
      case 'R': acc = compose(acc, rho_inv_perm); break;
      case 's': acc = compose(acc, sigma_perm); break;
      default: throw std::invalid_argument("automorphism word letters are r, R, s");
    }
  }
  return acc;
}

bool is_in_p(std::string_view word) { return s3_of_word(word) == std::array<int, 3>{0, 1, 2}; }

}  // namespace uaw
