#include "uaw/ratfunc.hpp"

namespace uaw {

RatFuncQ::RatFuncQ(const LaurentQ& n, const LaurentQ& d) {
  if (d.is_zero()) throw division_by_zero("rational function with zero denominator");
  if (n.is_zero()) {
    den_ = LaurentQ(1);
    return;
  }
  LaurentQ nn = n, dd = d;
  if (!dd.is_monomial()) {  // units cancel without a gcd pass
    LaurentQ g = laurent_gcd(nn, dd);
    if (!g.is_one()) {
      nn = *laurent_divide(nn, g);
      dd = *laurent_divide(dd, g);
    }
  }
  LaurentNormalization norm = laurent_normalize(dd);
  QRational inv = QRational(1) / norm.scale;
  num_ = (nn * inv).shifted(-norm.shift);
  den_ = norm.normal;
}

RatFuncQ& RatFuncQ::operator+=(const RatFuncQ& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  *this = RatFuncQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFuncQ& RatFuncQ::operator-=(const RatFuncQ& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ -= o.num_;
    return *this;
  }
  *this = RatFuncQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFuncQ& RatFuncQ::operator*=(const RatFuncQ& o) {
  if (num_.is_zero() || o.num_.is_zero()) {
    *this = RatFuncQ();
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // cross-cancel before multiplying to keep degrees down
  LaurentQ a = num_, b = den_, c = o.num_, d = o.den_;
  LaurentQ g1 = laurent_gcd(a, d);
  if (!g1.is_one()) {
    a = *laurent_divide(a, g1);
    d = *laurent_divide(d, g1);
  }
  LaurentQ g2 = laurent_gcd(c, b);
  if (!g2.is_one()) {
    c = *laurent_divide(c, g2);
    b = *laurent_divide(b, g2);
  }
  *this = RatFuncQ(a * c, b * d);
  return *this;
}

RatFuncQ& RatFuncQ::operator/=(const RatFuncQ& o) { return *this *= o.inverse(); }

RatFuncQ RatFuncQ::operator-() const {
  RatFuncQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFuncQ RatFuncQ::inverse() const {
  if (is_zero()) throw division_by_zero("inverse of zero rational function");
  return RatFuncQ(den_, num_);
}

QRational RatFuncQ::specialize(const QRational& q0) const {
  if (q0 == 0) throw pole_error("specialization requires q0 != 0");
  QRational d = den_.eval(q0);
  if (d == 0) throw pole_error("denominator vanishes at q0 = " + rat_str(q0));
  return num_.eval(q0) / d;
}

std::string RatFuncQ::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFuncQ operator+(RatFuncQ a, const RatFuncQ& b) {
  a += b;
  return a;
}
RatFuncQ operator-(RatFuncQ a, const RatFuncQ& b) {
  a -= b;
  return a;
}
RatFuncQ operator*(RatFuncQ a, const RatFuncQ& b) {
  a *= b;
  return a;
}
RatFuncQ operator/(RatFuncQ a, const RatFuncQ& b) {
  a /= b;
  return a;
}

RatFuncQ q_integer(int n) {
  if (n == 0) return RatFuncQ();
  LaurentQ num = LaurentQ::q_power(n) - LaurentQ::q_power(-n);
  LaurentQ den = LaurentQ::q_power(1) - LaurentQ::q_power(-1);
  return RatFuncQ(num, den);
}

}  // namespace uaw
