#pragma once

#include "uaw/delta.hpp"

#include <utility>
#include <vector>

namespace uaw {

// Dense square matrix over Q(q). Indices are 0-based.
class MatN {
 public:
  MatN() = default;
  explicit MatN(int n) : n_(n), entries_(static_cast<size_t>(n) * static_cast<size_t>(n)) {}
  static MatN identity(int n);

  int dim() const { return n_; }
  RatFuncQ& at(int r, int c) { return entries_[static_cast<size_t>(r) * n_ + c]; }
  const RatFuncQ& at(int r, int c) const { return entries_[static_cast<size_t>(r) * n_ + c]; }
  bool is_zero() const;

  MatN& operator+=(const MatN& o);
  MatN& operator-=(const MatN& o);
  MatN& operator*=(const MatN& o);
  MatN operator-() const;

  friend bool operator==(const MatN&, const MatN&) = default;
  std::string str() const;

 private:
  void require_same_dim(const MatN& o) const;

  int n_ = 0;
  std::vector<RatFuncQ> entries_;
};

MatN operator+(MatN a, const MatN& b);
MatN operator-(MatN a, const MatN& b);
MatN operator*(MatN a, const MatN& b);
MatN operator*(const RatFuncQ& c, MatN m);

// ---- relations checked generically, in any ring with Q(q) scalars ----

template <class R>
R bracket(const R& u, const R& v) {
  return u * v - v * u;
}

// [u,v]_e = e uv - e^-1 vu
template <class R>
R bracket_eps(const R& u, const R& v, const RatFuncQ& e) {
  return e * (u * v) - e.inverse() * (v * u);
}

// Both q-Dolan-Grady style relations:
// x^3 y - [3]_q x^2 y x + [3]_q x y x^2 - y x^3 = -(q^2-q^-2)^2 (xy - yx)
// and the same with x, y swapped.
template <class R>
bool check_tridiagonal(const R& x, const R& y) {
  const RatFuncQ q3 = q_integer(3);
  const RatFuncQ t = RatFuncQ::q_power(2) - RatFuncQ::q_power(-2);
  auto rel = [&](const R& u, const R& v) {
    R lhs = u * u * u * v - q3 * (u * u * v * u) + q3 * (u * v * u * u) - v * u * u * u;
    R rhs = (-(t * t)) * (u * v - v * u);
    return lhs == rhs;
  };
  return rel(x, y) && rel(y, x);
}

template <class R>
R xi1(const R& x, const R& y) {
  return x * y - y * x;
}

template <class R>
R xi2(const R& x, const R& y) {
  const RatFuncQ h = RatFuncQ::q_power(2) + RatFuncQ::q_power(-2);
  return x * x * y * y - y * y * x * x + h * (y * x * y * x - x * y * x * y);
}

// The two-part identity behind the commutation proof: [xi1, xi2] equals its
// degree-6 expansion, and [3]_q [xi1, xi2] equals the sum of the two
// five-fold nested q-brackets. Holds in every algebra.
template <class R>
bool nested_bracket_check(const R& x, const R& y) {
  const RatFuncQ q3 = q_integer(3);
  const RatFuncQ h = RatFuncQ::q_power(2) + RatFuncQ::q_power(-2);
  const RatFuncQ qq = RatFuncQ::q_power(1);
  const RatFuncQ qi = RatFuncQ::q_power(-1);

  R comm = bracket(xi1(x, y), xi2(x, y));

  R expansion = x * y * x * x * y * y - x * x * y * y * x * y + y * x * y * y * x * x -
                y * y * x * x * y * x + x * x * y * y * y * x - x * y * y * y * x * x +
                y * y * x * x * x * y - y * x * x * x * y * y -
                h * (x * y * x * y * y * x - x * y * y * x * y * x + y * x * y * x * x * y -
                     y * x * x * y * x * y);

  R g = bracket(x, y);
  g = bracket_eps(x, g, qq);
  g = bracket_eps(x, g, qi);
  g = bracket_eps(y, g, qq);
  g = bracket_eps(y, g, qi);
  R k = bracket(y, x);
  k = bracket_eps(y, k, qq);
  k = bracket_eps(y, k, qi);
  k = bracket_eps(x, k, qq);
  k = bracket_eps(x, k, qi);
  R nested = g + k;

  return comm == expansion && q3 * comm == nested;
}

// ---- the 4-dimensional module and the kernel witness ----

// The pair (X, Y) of 4x4 matrices with diagonal th_0, th_1, th_1, th_2
// (th_i = q^{2i} + q^{-2i}); X carries 1s below, Y carries
// vt = (q^4-q^-4)(q^2-q^-2)(q-q^-1)^2 and q and 1 above.
std::pair<MatN, MatN> vidar_module();

// The (4,3) entry (1-based) of xi1 X xi2 - xi2 X xi1 on that module; equals
// -q^2, witnessing that the matrix is nonzero.
RatFuncQ xi_commutator_entry();

// Images of xi1, xi2 under X -> A, Y -> B, in normal form.
DeltaElement xi1_delta();
DeltaElement xi2_delta();

// [xi1, xi2] vanishes in the algebra (q^6 != 1 over Q(q)).
bool xi_commute_in_delta();

// xi1 z xi2 - xi2 z xi1 maps to zero for z in {A, B} even though the module
// evaluation is nonzero: a nonzero kernel element for X -> A, Y -> B.
bool xi_kernel_vanishes();

}  // namespace uaw
