#include "uaw/lambda_rep.hpp"

#include <cassert>

namespace uaw {

namespace {
RatFuncQ qp(int e) { return RatFuncQ::q_power(e); }
}

LaurentL LaurentL::la_power(int e, const RatFuncQ& c) {
  LaurentL x;
  if (!c.is_zero()) x.terms_.emplace(e, c);
  return x;
}

RatFuncQ LaurentL::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RatFuncQ() : it->second;
}

void LaurentL::add_term(int e, const RatFuncQ& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentL& LaurentL::operator+=(const LaurentL& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}
LaurentL& LaurentL::operator-=(const LaurentL& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}
LaurentL& LaurentL::operator*=(const LaurentL& o) {
  LaurentL prod;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) prod.add_term(e1 + e2, c1 * c2);
  *this = std::move(prod);
  return *this;
}
LaurentL LaurentL::operator-() const {
  LaurentL r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentL operator+(LaurentL a, const LaurentL& b) { return a += b; }
LaurentL operator-(LaurentL a, const LaurentL& b) { return a -= b; }
LaurentL operator*(LaurentL a, const LaurentL& b) { return a *= b; }

std::string LaurentL::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c.negative_leading();
    RatFuncQ body = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    if (e == 1) mono = "la";
    else if (e != 0) mono = "la^" + std::to_string(e);
    if (mono.empty()) {
      std::string cs = body.str();
      if (body.is_laurent() && body.num().terms().size() > 1) cs = "(" + cs + ")";
      out += cs;
    } else if (body.is_one()) {
      out += mono;
    } else {
      std::string cs = body.str();
      if (body.is_laurent() && body.num().terms().size() > 1) cs = "(" + cs + ")";
      out += cs + "*" + mono;
    }
  }
  return out;
}

const LaurentL& mu_lambda() {
  static const LaurentL mu = LaurentL::la_power(1) + LaurentL::la_power(-1);
  return mu;
}

const LaurentL& nu_lambda() {
  static const LaurentL nu = [] {
    LaurentL x = (qp(2) + qp(-2)) * mu_lambda();
    return x + mu_lambda() * mu_lambda();
  }();
  return nu;
}

LaurentMat2 LaurentMat2::identity() { return scalar(LaurentL(1)); }

LaurentMat2 LaurentMat2::scalar(const LaurentL& c) { return {c, LaurentL(), LaurentL(), c}; }

LaurentL LaurentMat2::det() const { return e11 * e22 - e12 * e21; }

LaurentMat2 LaurentMat2::inverse() const {
  LaurentL d = det();
  if (!d.is_monomial()) throw non_unit_determinant();
  auto [e, c] = *d.terms().begin();
  LaurentL dinv = LaurentL::la_power(-e, c.inverse());
  return {dinv * e22, dinv * (-e12), dinv * (-e21), dinv * e11};
}

LaurentMat2 LaurentMat2::pow(int n) const {
  LaurentMat2 base = n < 0 ? inverse() : *this;
  LaurentMat2 acc = identity();
  for (int e = n < 0 ? -n : n; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    if (e > 1) base *= base;
  }
  return acc;
}

LaurentMat2& LaurentMat2::operator+=(const LaurentMat2& o) {
  e11 += o.e11; e12 += o.e12; e21 += o.e21; e22 += o.e22;
  return *this;
}
LaurentMat2& LaurentMat2::operator-=(const LaurentMat2& o) {
  e11 -= o.e11; e12 -= o.e12; e21 -= o.e21; e22 -= o.e22;
  return *this;
}
LaurentMat2& LaurentMat2::operator*=(const LaurentMat2& o) {
  LaurentMat2 prod{e11 * o.e11 + e12 * o.e21, e11 * o.e12 + e12 * o.e22,
                   e21 * o.e11 + e22 * o.e21, e21 * o.e12 + e22 * o.e22};
  *this = std::move(prod);
  return *this;
}
LaurentMat2 LaurentMat2::operator-() const { return {-e11, -e12, -e21, -e22}; }

LaurentMat2 operator+(LaurentMat2 a, const LaurentMat2& b) { return a += b; }
LaurentMat2 operator-(LaurentMat2 a, const LaurentMat2& b) { return a -= b; }
LaurentMat2 operator*(LaurentMat2 a, const LaurentMat2& b) { return a *= b; }
LaurentMat2 operator*(const LaurentL& c, LaurentMat2 m) {
  m.e11 = c * m.e11; m.e12 = c * m.e12; m.e21 = c * m.e21; m.e22 = c * m.e22;
  return m;
}

std::string LaurentMat2::str() const {
  return "[[" + e11.str() + ", " + e12.str() + "], [" + e21.str() + ", " + e22.str() + "]]";
}

namespace {
LaurentL la(int e, int num = 1) { return LaurentL::la_power(e, RatFuncQ(num)); }
}

const LaurentMat2& mat_A() {
  static const LaurentMat2 m{la(1), LaurentL(1) - la(-1), LaurentL(), la(-1)};
  return m;
}
const LaurentMat2& mat_B() {
  static const LaurentMat2 m{la(-1), LaurentL(), la(1) - LaurentL(1), la(1)};
  return m;
}
const LaurentMat2& mat_C() {
  static const LaurentMat2 m{LaurentL(1), LaurentL(1) - la(1), la(-1) - LaurentL(1),
                             la(1) + la(-1) - LaurentL(1)};
  return m;
}
const LaurentMat2& mat_p() {
  static const LaurentMat2 m{LaurentL(), LaurentL(-1), LaurentL(1), LaurentL(1)};
  return m;
}
const LaurentMat2& mat_s() {
  static const LaurentMat2 m{LaurentL(), LaurentL(1), la(1), LaurentL()};
  return m;
}

bool is_central_lambda(const LaurentMat2& m) {
  return m.e12.is_zero() && m.e21.is_zero() && m.e11 == m.e22;
}

namespace {

const LaurentMat2& pi_of(Letter l) {
  auto make = [](const LaurentMat2& m) {
    return LaurentL(qp(1)) * m + LaurentL(qp(-1)) * m.inverse();
  };
  static const LaurentMat2 pa = make(mat_A());
  static const LaurentMat2 pb = make(mat_B());
  static const LaurentMat2 pc = make(mat_C());
  static const LaurentMat2 greek = LaurentMat2::scalar(nu_lambda());
  switch (l) {
    case Letter::A: return pa;
    case Letter::B: return pb;
    case Letter::C: return pc;
    default: return greek;
  }
}

}  // namespace

LaurentMat2 pi_map(const DeltaElement& x) {
  LaurentMat2 out;  // zero
  for (const auto& [m, c] : x.terms()) {
    LaurentMat2 term = pi_of(Letter::A).pow(m.i) * pi_of(Letter::B).pow(m.j) *
                       pi_of(Letter::C).pow(m.k) * pi_of(Letter::al).pow(m.r + m.s + m.t);
    out += LaurentL(c) * term;
  }
  return out;
}

LaurentMat2 psl2z_on_lambda(std::string_view word, const LaurentMat2& m) {
  LaurentMat2 out = m;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const LaurentMat2* g = nullptr;
    switch (*it) {
      case 'r': g = &mat_p(); break;
      case 's': g = &mat_s(); break;
      case 'R': {
        static const LaurentMat2 pinv = mat_p().inverse();
        g = &pinv;
        break;
      }
      default: throw std::invalid_argument("automorphism word letters are r, R, s");
    }
    out = *g * out * g->inverse();
  }
  return out;
}

FaithfulnessReport faithfulness_probe(int max_len) {
  assert(max_len >= 1);
  static const LaurentMat2 pinv = mat_p().inverse();
  FaithfulnessReport rep;
  // token kinds: 's' on one side, 'p' / 'P' (= p^-1) on the other; adjacent
  // tokens must be of different kinds
  struct Item {
    std::string word;
    LaurentMat2 m;
    bool last_is_s;
  };
  std::vector<Item> frontier;
  frontier.push_back({"s", mat_s(), true});
  frontier.push_back({"p", mat_p(), false});
  frontier.push_back({"P", pinv, false});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Item> next;
    for (const Item& it : frontier) {
      ++rep.words_checked;
      if (is_central_lambda(it.m)) rep.central_words.push_back(it.word);
      if (len == max_len) continue;
      if (it.last_is_s) {
        next.push_back({it.word + "p", it.m * mat_p(), false});
        next.push_back({it.word + "P", it.m * pinv, false});
      } else {
        next.push_back({it.word + "s", it.m * mat_s(), true});
      }
    }
    frontier = std::move(next);
  }
  return rep;
}

bool verify_commuting_diagram(char gen, const DeltaElement& x) {
  DeltaElement gx;
  switch (gen) {
    case 'r': gx = rho(x); break;
    case 's': gx = sigma(x); break;
    default: throw std::invalid_argument("diagram generators are r and s");
  }
  return pi_map(gx) == psl2z_on_lambda(std::string_view(&gen, 1), pi_map(x));
}

}  // namespace uaw
