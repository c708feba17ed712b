#include "uaw/delta.hpp"

#include <cassert>
#include <deque>
#include <mutex>
#include <vector>

namespace uaw {

namespace {
RatFuncQ qp(int e) { return RatFuncQ::q_power(e); }
}

PBWMonomial PBWMonomial::from_word(const Word& w) {
  assert(is_irreducible(w));
  PBWMonomial m;
  for (Letter l : w) {
    switch (l) {
      case Letter::A: ++m.i; break;
      case Letter::B: ++m.j; break;
      case Letter::C: ++m.k; break;
      case Letter::al: ++m.r; break;
      case Letter::be: ++m.s; break;
      case Letter::ga: ++m.t; break;
    }
  }
  return m;
}

Word PBWMonomial::to_word() const {
  Word w;
  w.reserve(static_cast<size_t>(degree()));
  auto app = [&w](Letter l, int n) { w.insert(w.end(), static_cast<size_t>(n), l); };
  app(Letter::A, i);
  app(Letter::B, j);
  app(Letter::C, k);
  app(Letter::al, r);
  app(Letter::be, s);
  app(Letter::ga, t);
  return w;
}

namespace {
void append_factor(std::string& out, const char* name, int e) {
  if (e == 0) return;
  if (!out.empty()) out += ' ';
  out += name;
  if (e != 1) out += "^" + std::to_string(e);
}
}  // namespace

std::string PBWMonomial::str() const {
  std::string out;
  append_factor(out, "A", i);
  append_factor(out, "B", j);
  append_factor(out, "C", k);
  append_factor(out, "al", r);
  append_factor(out, "be", s);
  append_factor(out, "ga", t);
  return out.empty() ? "1" : out;
}

std::string OmegaMonomial::str() const {
  std::string out;
  append_factor(out, "A", i);
  append_factor(out, "B", j);
  append_factor(out, "C", k);
  append_factor(out, "Om", l);
  append_factor(out, "al", r);
  append_factor(out, "be", s);
  append_factor(out, "ga", t);
  return out.empty() ? "1" : out;
}

DeltaElement DeltaElement::normalize(const RawElement& e, Strategy st) {
  DeltaElement x;
  for (const auto& [w, c] : reduce(e, st)) x.terms_.emplace(PBWMonomial::from_word(w), c);
  return x;
}

DeltaElement DeltaElement::generator(Letter l) {
  return DeltaElement(PBWMonomial::from_word({l}));
}

RatFuncQ DeltaElement::coefficient_of(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFuncQ() : it->second;
}

std::optional<int> DeltaElement::filtration_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

void DeltaElement::add_term(const PBWMonomial& m, const RatFuncQ& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DeltaElement& DeltaElement::operator+=(const DeltaElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DeltaElement& DeltaElement::operator-=(const DeltaElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DeltaElement& DeltaElement::operator*=(const DeltaElement& o) {
  RawElement raw;
  for (const auto& [m1, c1] : terms_) {
    Word w1 = m1.to_word();
    for (const auto& [m2, c2] : o.terms_) {
      Word w = w1;
      Word w2 = m2.to_word();
      w.insert(w.end(), w2.begin(), w2.end());
      raw.add(w, c1 * c2);
    }
  }
  *this = normalize(raw);
  return *this;
}

DeltaElement DeltaElement::operator-() const {
  DeltaElement r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

DeltaElement DeltaElement::pow(int n) const {
  assert(n >= 0);
  DeltaElement acc(1);
  DeltaElement base = *this;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    if (e > 1) base *= base;
  }
  return acc;
}

DeltaElement operator+(DeltaElement a, const DeltaElement& b) { return a += b; }
DeltaElement operator-(DeltaElement a, const DeltaElement& b) { return a -= b; }
DeltaElement operator*(DeltaElement a, const DeltaElement& b) { return a *= b; }

DeltaElement operator*(const RatFuncQ& c, DeltaElement x) {
  if (c.is_zero()) return DeltaElement();
  DeltaElement r;
  for (const auto& [m, v] : x.terms()) r.add_term(m, v * c);
  return r;
}
DeltaElement operator*(DeltaElement x, const RatFuncQ& c) { return c * std::move(x); }

DeltaElement commutator(const DeltaElement& x, const DeltaElement& y) {
  return x * y - y * x;
}

const DeltaElement& casimir() {
  static const DeltaElement om = [] {
    DeltaElement x;
    x.add_term({1, 1, 1, 0, 0, 0}, qp(1));
    x.add_term({2, 0, 0, 0, 0, 0}, qp(2));
    x.add_term({0, 2, 0, 0, 0, 0}, qp(-2));
    x.add_term({0, 0, 2, 0, 0, 0}, qp(2));
    x.add_term({1, 0, 0, 1, 0, 0}, -qp(1));
    x.add_term({0, 1, 0, 0, 1, 0}, -qp(-1));
    x.add_term({0, 0, 1, 0, 0, 1}, -qp(1));
    return x;
  }();
  return om;
}

const DeltaElement& casimir_power(int l) {
  assert(l >= 0);
  static std::mutex mu;
  // deque: growth must not move elements out from under references handed out
  static std::deque<DeltaElement> cache{DeltaElement(1), casimir()};
  std::scoped_lock lock(mu);
  while (static_cast<int>(cache.size()) <= l) cache.push_back(cache.back() * casimir());
  return cache[static_cast<size_t>(l)];
}

std::array<DeltaElement, 6> casimir_variants() {
  using L = Letter;
  struct Spec {
    Word cyc;
    int ecyc;          // q-exponent on the word term
    int ea, eb, ec;    // exponents on A^2, B^2, C^2
    int fa, fb, fc;    // exponents on A al, B be, C ga (each negated)
  };
  // the six displayed forms: ABC, BCA, CAB, CBA, ACB, BAC
  const Spec specs[6] = {
      {{L::A, L::B, L::C}, 1, 2, -2, 2, 1, -1, 1},
      {{L::B, L::C, L::A}, 1, 2, 2, -2, 1, 1, -1},
      {{L::C, L::A, L::B}, 1, -2, 2, 2, -1, 1, 1},
      {{L::C, L::B, L::A}, -1, -2, 2, -2, -1, 1, -1},
      {{L::A, L::C, L::B}, -1, -2, -2, 2, -1, -1, 1},
      {{L::B, L::A, L::C}, -1, 2, -2, -2, 1, -1, -1},
  };
  std::array<DeltaElement, 6> out;
  for (int v = 0; v < 6; ++v) {
    const Spec& sp = specs[v];
    RawElement raw;
    raw.add(sp.cyc, qp(sp.ecyc));
    raw.add({L::A, L::A}, qp(sp.ea));
    raw.add({L::B, L::B}, qp(sp.eb));
    raw.add({L::C, L::C}, qp(sp.ec));
    raw.add({L::A, L::al}, -qp(sp.fa));
    raw.add({L::B, L::be}, -qp(sp.fb));
    raw.add({L::C, L::ga}, -qp(sp.fc));
    out[static_cast<size_t>(v)] = DeltaElement::normalize(raw);
  }
  return out;
}

bool is_central(const DeltaElement& x) {
  for (Letter l : {Letter::A, Letter::B, Letter::C})
    if (!commutator(x, DeltaElement::generator(l)).is_zero()) return false;
  return true;
}

OmegaElement::OmegaElement(const OmegaMonomial& m, const RatFuncQ& c) { add_term(m, c); }

void OmegaElement::add_term(const OmegaMonomial& m, const RatFuncQ& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

// Expansion of A^i B^j C^k Om^l in the PBW basis, memoized. The Greek part of
// a full Omega-monomial commutes through, so it is tacked on afterwards.
const DeltaElement& abc_omega_expansion(int i, int j, int k, int l) {
  static std::mutex mu;
  static std::map<std::array<int, 4>, DeltaElement> cache;
  std::scoped_lock lock(mu);
  auto [it, fresh] = cache.try_emplace({i, j, k, l});
  if (fresh) {
    DeltaElement abc(PBWMonomial{i, j, k, 0, 0, 0});
    it->second = abc * casimir_power(l);
  }
  return it->second;
}

DeltaElement expand_omega_monomial(const OmegaMonomial& m) {
  const DeltaElement& base = abc_omega_expansion(m.i, m.j, m.k, m.l);
  DeltaElement out;
  for (const auto& [b, c] : base.terms()) {
    PBWMonomial shifted = b;
    shifted.r += m.r;
    shifted.s += m.s;
    shifted.t += m.t;
    out.add_term(shifted, c);
  }
  return out;
}

}  // namespace

DeltaElement from_omega_basis(const OmegaElement& x) {
  DeltaElement out;
  for (const auto& [m, c] : x.terms()) {
    if (!m.well_formed())
      throw std::invalid_argument("Omega-basis monomial must have min(i,j,k) = 0");
    out += c * expand_omega_monomial(m);
  }
  return out;
}

OmegaElement to_omega_basis(const DeltaElement& x) {
  OmegaElement out;
  DeltaElement work = x;
  while (!work.is_zero()) {
    // strip the current leading PBW monomial with the unique Omega-monomial
    // whose expansion leads with it
    auto lead = std::prev(work.terms().end());
    const PBWMonomial& m = lead->first;
    int l = std::min(m.i, std::min(m.j, m.k));
    OmegaMonomial om{m.i - l, m.j - l, m.k - l, l, m.r, m.s, m.t};
    DeltaElement expansion = expand_omega_monomial(om);
    auto elead = std::prev(expansion.terms().end());
    assert(elead->first == m);  // triangularity of the filtration
    RatFuncQ f = lead->second / elead->second;
    out.add_term(om, f);
    work -= f * expansion;
  }
  return out;
}

PresentationReport verify_presentation_identities() {
  using D = DeltaElement;
  const D A = D::A(), B = D::B(), C = D::C();
  const D al = D::alpha(), be = D::beta(), ga = D::gamma();
  const RatFuncQ q3 = q_integer(3);
  const RatFuncQ t = qp(2) - qp(-2);  // q^2 - q^-2
  const RatFuncQ w = qp(1) - qp(-1);  // q - q^-1
  const RatFuncQ u = qp(1) + qp(-1);  // q + q^-1
  const RatFuncQ h = qp(2) + qp(-2);  // q^2 + q^-2

  PresentationReport rep;
  auto cube = [&](const D& X, const D& Y) {
    return X.pow(3) * Y - q3 * (X * X * Y * X) + q3 * (X * Y * X * X) - Y * X.pow(3);
  };
  rep.tridiagonal_ab = cube(A, B) == -(t * t) * (A * B - B * A);
  rep.tridiagonal_ba = cube(B, A) == -(t * t) * (B * A - A * B);
  rep.gamma_cubic = A * A * B * B - B * B * A * A + h * (B * A * B * A - A * B * A * B) ==
                    -(w * w) * ((A * B - B * A) * ga);
  rep.gamma_commutes_a = commutator(ga, A).is_zero();
  rep.gamma_commutes_b = commutator(ga, B).is_zero();

  rep.recover_c = C == u.inverse() * ga - t.inverse() * (qp(1) * (A * B) - qp(-1) * (B * A));
  RatFuncQ dnm = (w * t).inverse();
  rep.recover_alpha =
      al == dnm * (B * B * A - h * (B * A * B) + A * B * B + (t * t) * A + (w * w) * (B * ga));
  rep.recover_beta =
      be == dnm * (A * A * B - h * (A * B * A) + B * A * A + (t * t) * B + (w * w) * (A * ga));
  return rep;
}

namespace {

// one rendered term, sign already pulled off by the caller
std::string term_body(const RatFuncQ& c, const std::string& mono, bool unit) {
  std::string cs = c.str();
  // a multi-term coefficient needs parens even when it stands alone, or the
  // surrounding +/- signs would reassociate its terms on re-parse
  bool needs_parens = c.is_laurent() && c.num().terms().size() > 1;
  if (needs_parens) cs = "(" + cs + ")";
  if (unit) return cs;
  if (c.is_one()) return mono;
  return cs + "*" + mono;
}

}  // namespace

std::string DeltaElement::str() const {
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
    out += term_body(body, m.str(), m.is_unit());
  }
  return out;
}

std::string OmegaElement::str() const {
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
    out += term_body(body, m.str(), m.degree() == 0);
  }
  return out;
}

}  // namespace uaw
