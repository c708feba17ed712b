#pragma once

#include "uaw/laurent.hpp"

namespace uaw {

// Element of Q(q) in canonical form: common polynomial factors of num/den are
// cancelled and den is primitive (integer coefficients, content 1) with lowest
// exponent 0 and positive leading coefficient. den == 1 exactly when the value
// is a Laurent polynomial. Equality is therefore plain member equality.
class RatFuncQ {
 public:
  RatFuncQ() : den_(1) {}
  RatFuncQ(int c) : num_(c), den_(1) {}
  RatFuncQ(const QRational& c) : num_(c), den_(1) {}
  RatFuncQ(const LaurentQ& n) : num_(n), den_(1) {}
  RatFuncQ(const LaurentQ& n, const LaurentQ& d);  // throws division_by_zero if d = 0

  static RatFuncQ q_power(int e, const QRational& c = 1) { return RatFuncQ(LaurentQ::q_power(e, c)); }

  const LaurentQ& num() const { return num_; }
  const LaurentQ& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  QRational constant_value() const { return num_.coeff(0); }  // pre: is_constant()

  RatFuncQ& operator+=(const RatFuncQ& o);
  RatFuncQ& operator-=(const RatFuncQ& o);
  RatFuncQ& operator*=(const RatFuncQ& o);
  RatFuncQ& operator/=(const RatFuncQ& o);  // throws division_by_zero
  RatFuncQ operator-() const;
  RatFuncQ inverse() const;  // throws division_by_zero

  friend bool operator==(const RatFuncQ&, const RatFuncQ&) = default;

  // Leading (highest q-exponent) numerator coefficient is negative. Lets the
  // renderer pull a minus sign out front.
  bool negative_leading() const { return !num_.is_zero() && num_.leading() < 0; }

  // Pre: q0 != 0 and den(q0) != 0; throws pole_error otherwise.
  QRational specialize(const QRational& q0) const;

  // "q + q^-1", "(q^2 - q^-2)/(q + 1)", "0"
  std::string str() const;

 private:
  LaurentQ num_;
  LaurentQ den_;
};

RatFuncQ operator+(RatFuncQ a, const RatFuncQ& b);
RatFuncQ operator-(RatFuncQ a, const RatFuncQ& b);
RatFuncQ operator*(RatFuncQ a, const RatFuncQ& b);
RatFuncQ operator/(RatFuncQ a, const RatFuncQ& b);

// [n]_q = (q^n - q^-n)/(q - q^-1), computed as that exact quotient.
RatFuncQ q_integer(int n);

}  // namespace uaw
