#include "uaw/laurent.hpp"

#include <vector>

namespace uaw {

bool LaurentQ::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentQ::lo() const { return terms_.begin()->first; }
int LaurentQ::hi() const { return terms_.rbegin()->first; }

QRational LaurentQ::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QRational(0) : it->second;
}

QRational LaurentQ::leading() const { return terms_.rbegin()->second; }

void LaurentQ::add_term(int e, const QRational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) {
  *this = *this * o;
  return *this;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentQ LaurentQ::shifted(int k) const {
  LaurentQ r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

QRational LaurentQ::eval(const QRational& q0) const {
  if (q0 == 0) {
    if (!is_zero() && lo() < 0) throw pole_error("evaluation of negative q-powers at q = 0");
    return coeff(0);
  }
  // Horner over the exponent range, negative part via 1/q0.
  QRational acc = 0;
  if (is_zero()) return acc;
  QRational power = 1;
  int at = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0) continue;
    while (at < e) {
      power *= q0;
      ++at;
    }
    acc += c * power;
  }
  QRational inv = QRational(1) / q0;
  power = 1;
  at = 0;
  for (auto it = std::make_reverse_iterator(terms_.lower_bound(0)); it != terms_.rend(); ++it) {
    int e = it->first;  // negative, decreasing
    while (at > e) {
      power *= inv;
      --at;
    }
    acc += it->second * power;
  }
  return acc;
}

LaurentQ operator+(LaurentQ a, const LaurentQ& b) {
  a += b;
  return a;
}
LaurentQ operator-(LaurentQ a, const LaurentQ& b) {
  a -= b;
  return a;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentQ operator*(LaurentQ a, const QRational& c) {
  if (c == 0) return LaurentQ();
  LaurentQ r;
  for (const auto& [e, v] : a.terms()) r.add_term(e, v * c);
  return r;
}
LaurentQ operator*(const QRational& c, LaurentQ a) { return std::move(a) * c; }

namespace {

// dense coefficient vector of the q^0-shifted polynomial
std::vector<QRational> to_dense(const LaurentQ& x) {
  std::vector<QRational> v(static_cast<size_t>(x.hi() - x.lo()) + 1);
  for (const auto& [e, c] : x.terms()) v[static_cast<size_t>(e - x.lo())] = c;
  return v;
}

LaurentQ from_dense(const std::vector<QRational>& v, int shift) {
  LaurentQ x;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) x.add_term(static_cast<int>(i) + shift, v[i]);
  return x;
}

size_t dense_deg(const std::vector<QRational>& v) {
  size_t d = v.size();
  while (d > 0 && v[d - 1] == 0) --d;
  return d;  // number of meaningful entries; 0 means zero polynomial
}

// a <- a mod b, returns quotient; ordinary polynomials over Q
std::vector<QRational> divmod(std::vector<QRational>& a, const std::vector<QRational>& b) {
  size_t db = dense_deg(b);
  size_t da = dense_deg(a);
  std::vector<QRational> quo(da >= db ? da - db + 1 : 0);
  const QRational& lead = b[db - 1];
  while ((da = dense_deg(a)) >= db && da > 0) {
    QRational f = a[da - 1] / lead;
    size_t off = da - db;
    quo[off] = f;
    for (size_t i = 0; i < db; ++i) a[off + i] -= f * b[i];
    a[da - 1] = 0;  // kill round-off-free leading entry explicitly
  }
  return quo;
}

}  // namespace

std::optional<LaurentQ> laurent_divide(const LaurentQ& a, const LaurentQ& b) {
  if (b.is_zero()) throw division_by_zero("laurent_divide by zero");
  if (a.is_zero()) return LaurentQ();
  std::vector<QRational> av = to_dense(a);
  std::vector<QRational> bv = to_dense(b);
  if (dense_deg(av) < dense_deg(bv)) return std::nullopt;
  std::vector<QRational> quo = divmod(av, bv);
  if (dense_deg(av) != 0) return std::nullopt;  // nonzero remainder
  return from_dense(quo, a.lo() - b.lo());
}

LaurentNormalization laurent_normalize(const LaurentQ& x) {
  LaurentNormalization out;
  out.shift = x.lo();
  // content = gcd(numerators)/lcm(denominators), sign from the leading coefficient
  BigInt g = 0, l = 1;
  for (const auto& [e, c] : x.terms()) {
    g = gcd(g, numerator(c));
    l = lcm(l, denominator(c));
  }
  QRational content{g, l};
  if (x.leading() < 0) content = -content;
  out.scale = content;
  QRational inv = QRational(1) / content;
  LaurentQ n;
  for (const auto& [e, c] : x.terms()) n.add_term(e - out.shift, c * inv);
  out.normal = n;
  return out;
}

LaurentQ laurent_gcd(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() && b.is_zero()) return LaurentQ();
  if (a.is_zero()) return laurent_normalize(b).normal;
  if (b.is_zero()) return laurent_normalize(a).normal;
  std::vector<QRational> u = to_dense(a);
  std::vector<QRational> v = to_dense(b);
  while (dense_deg(v) != 0) {
    divmod(u, v);
    std::swap(u, v);
  }
  return laurent_normalize(from_dense(u, 0)).normal;
}

std::string LaurentQ::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    QRational mag = c < 0 ? QRational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string qpart;
    if (e == 1)
      qpart = "q";
    else if (e != 0)
      qpart = "q^" + std::to_string(e);
    if (qpart.empty())
      out += rat_str(mag);
    else if (mag == 1)
      out += qpart;
    else
      out += rat_str(mag) + "*" + qpart;
  }
  return out;
}

}  // namespace uaw
