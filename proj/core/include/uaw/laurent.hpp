#pragma once

#include "uaw/rational.hpp"

#include <map>
#include <optional>

namespace uaw {

// Laurent polynomial in q over the rationals. Zero coefficients are never
// stored, so default operator== is exact equality of values.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(int c) { add_term(0, c); }
  LaurentQ(const QRational& c) { add_term(0, c); }

  // c * q^e
  static LaurentQ q_power(int e, const QRational& c = 1) {
    LaurentQ x;
    x.add_term(e, c);
    return x;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  // single term c*q^e?
  bool is_monomial() const { return terms_.size() == 1; }

  int lo() const;  // lowest exponent; pre: !is_zero()
  int hi() const;  // highest exponent; pre: !is_zero()
  const std::map<int, QRational>& terms() const { return terms_; }
  QRational coeff(int e) const;
  QRational leading() const;  // coefficient at hi(); pre: !is_zero()

  void add_term(int e, const QRational& c);

  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const LaurentQ& o);
  LaurentQ operator-() const;
  LaurentQ shifted(int k) const;  // multiply by q^k

  friend bool operator==(const LaurentQ&, const LaurentQ&) = default;

  // Evaluate at q = q0. Throws pole_error if q0 = 0 while negative powers occur.
  QRational eval(const QRational& q0) const;

  // "q^2 - q^-2", "3/2*q + 1", "0"; exponents descending.
  std::string str() const;

 private:
  std::map<int, QRational> terms_;
};

LaurentQ operator+(LaurentQ a, const LaurentQ& b);
LaurentQ operator-(LaurentQ a, const LaurentQ& b);
LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
LaurentQ operator*(LaurentQ a, const QRational& c);
LaurentQ operator*(const QRational& c, LaurentQ a);

// Exact quotient a/b as a Laurent polynomial, or nullopt when b does not
// divide a. Pre: b nonzero (throws division_by_zero otherwise).
std::optional<LaurentQ> laurent_divide(const LaurentQ& a, const LaurentQ& b);

// x written as scale * q^shift * normal, where normal has integer coefficients
// with content 1, lowest exponent 0 and positive leading coefficient.
struct LaurentNormalization {
  LaurentQ normal;
  QRational scale;
  int shift = 0;
};
LaurentNormalization laurent_normalize(const LaurentQ& x);  // pre: !x.is_zero()

// gcd up to units, returned in the normal form above. gcd(x, 0) = normal(x),
// gcd(0, 0) = 0.
LaurentQ laurent_gcd(const LaurentQ& a, const LaurentQ& b);

}  // namespace uaw
