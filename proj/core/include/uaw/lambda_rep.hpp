#pragma once

#include "uaw/morphism.hpp"

namespace uaw {

// Laurent polynomial in la with coefficients in Q(q). Same shape as LaurentQ
// one level up: sorted exponent map, no stored zeros.
class LaurentL {
 public:
  LaurentL() = default;
  LaurentL(int c) : LaurentL(RatFuncQ(c)) {}
  LaurentL(const RatFuncQ& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
  }
  static LaurentL la_power(int e, const RatFuncQ& c = RatFuncQ(1));

  const std::map<int, RatFuncQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // exactly one term (the invertible elements of the ring)
  bool is_monomial() const { return terms_.size() == 1; }
  RatFuncQ coeff(int e) const;
  void add_term(int e, const RatFuncQ& c);

  LaurentL& operator+=(const LaurentL& o);
  LaurentL& operator-=(const LaurentL& o);
  LaurentL& operator*=(const LaurentL& o);
  LaurentL operator-() const;

  friend bool operator==(const LaurentL&, const LaurentL&) = default;
  std::string str() const;  // descending in la, e.g. "la - (q + q^-1) + la^-1"

 private:
  std::map<int, RatFuncQ> terms_;
};

LaurentL operator+(LaurentL a, const LaurentL& b);
LaurentL operator-(LaurentL a, const LaurentL& b);
LaurentL operator*(LaurentL a, const LaurentL& b);

// mu = la + la^-1 and nu = (q^2 + q^-2) mu + mu^2
const LaurentL& mu_lambda();
const LaurentL& nu_lambda();

struct non_unit_determinant : std::domain_error {
  non_unit_determinant() : std::domain_error("matrix determinant is not a unit") {}
};

// 2x2 matrix over the la-Laurent ring.
struct LaurentMat2 {
  LaurentL e11, e12, e21, e22;

  static LaurentMat2 identity();
  static LaurentMat2 scalar(const LaurentL& c);

  LaurentL det() const;
  LaurentL trace() const { return e11 + e22; }
  // Exact inverse; requires det to be a unit c*la^k. Throws
  // non_unit_determinant otherwise.
  LaurentMat2 inverse() const;
  LaurentMat2 pow(int n) const;  // negative n goes through inverse()

  LaurentMat2& operator+=(const LaurentMat2& o);
  LaurentMat2& operator-=(const LaurentMat2& o);
  LaurentMat2& operator*=(const LaurentMat2& o);
  LaurentMat2 operator-() const;

  friend bool operator==(const LaurentMat2&, const LaurentMat2&) = default;
  std::string str() const;  // "[[.., ..], [.., ..]]"
};

LaurentMat2 operator+(LaurentMat2 a, const LaurentMat2& b);
LaurentMat2 operator-(LaurentMat2 a, const LaurentMat2& b);
LaurentMat2 operator*(LaurentMat2 a, const LaurentMat2& b);
LaurentMat2 operator*(const LaurentL& c, LaurentMat2 m);

// The five named matrices. mat_A * mat_B * mat_C = I, each Latin one
// satisfies X + X^-1 = mu I; det p = 1, det s = -la, p^3 = -I, s^2 = la I.
const LaurentMat2& mat_A();
const LaurentMat2& mat_B();
const LaurentMat2& mat_C();
const LaurentMat2& mat_p();
const LaurentMat2& mat_s();

// scalar multiple of the identity
bool is_central_lambda(const LaurentMat2& m);

// The representation: A -> q mat_A + q^-1 mat_A^-1 (likewise B, C), and the
// central generators go to nu I. An algebra homomorphism.
LaurentMat2 pi_map(const DeltaElement& x);

// Conjugation action of the modular group: 'r' conjugates by p, 'R' by p^-1,
// 's' by s; rightmost letter acts first.
LaurentMat2 psl2z_on_lambda(std::string_view word, const LaurentMat2& m);

// Exhaustive non-centrality check over the alternating words in s and p^{+-1}
// of length 1..max_len (letters alternate between the s kind and the p kind).
struct FaithfulnessReport {
  long words_checked = 0;
  std::vector<std::string> central_words;  // expected to stay empty
  bool ok() const { return central_words.empty(); }
};
FaithfulnessReport faithfulness_probe(int max_len = 8);  // pre: max_len >= 1

// pi(g(x)) == g-conjugation of pi(x), for g one of 'r', 's'.
bool verify_commuting_diagram(char gen, const DeltaElement& x);

}  // namespace uaw
