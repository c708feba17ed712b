#pragma once

#include "uaw/delta.hpp"

#include <string_view>

namespace uaw {

// Generator images of an algebra endomorphism, one DeltaElement per
// generator. The three defining relations must survive the substitution:
// imgA + (q imgB imgC - q^-1 imgC imgB)/(q^2 - q^-2) has to be central and
// equal to imgAlpha/(q + q^-1), and cyclically. validated() checks exactly
// that and throws std::invalid_argument on failure.
struct GeneratorImages {
  DeltaElement imgA, imgB, imgC, imgAlpha, imgBeta, imgGamma;

  static GeneratorImages validated(DeltaElement a, DeltaElement b, DeltaElement c,
                                   DeltaElement al, DeltaElement be, DeltaElement ga);

  const DeltaElement& of(Letter l) const;

  static const GeneratorImages& identity();
  // The modular group generators: rho cycles (A,B,C) and (al,be,ga); sigma
  // swaps A,B and al,be, fixes ga, and sends C to C + (AB-BA)/(q-q^-1).
  static const GeneratorImages& rho();
  static const GeneratorImages& sigma();
  // Sign flip fixing one of A, B, C and negating the other two.
  static const GeneratorImages& klein(Letter fixed);  // pre: fixed is A, B or C
};

DeltaElement apply_endo(const GeneratorImages& images, const DeltaElement& x);

DeltaElement rho(const DeltaElement& x);
DeltaElement sigma(const DeltaElement& x);

// Word over {'r','R','s'} for rho, rho^-1, sigma; the rightmost letter acts
// first. rho^-1 is interpreted as rho^2. Unknown letters throw
// std::invalid_argument.
DeltaElement psl2z_word(std::string_view word, const DeltaElement& x);

DeltaElement klein_flip(Letter fixed, const DeltaElement& x);

// Substitute scalars for al, be, ga; the result lives in the span of the
// A^i B^j C^k monomials (no independence claim is made beyond that span).
DeltaElement specialize_aw(const DeltaElement& x, const RatFuncQ& a, const RatFuncQ& b,
                           const RatFuncQ& c);

// ---- the commutative quotient ----

// Monomial Ab^i Bb^j Cb^k in the polynomial ring F[Ab, Bb, Cb].
struct CommMonomial {
  int i = 0, j = 0, k = 0;

  int degree() const { return i + j + k; }
  std::array<int, 3> tuple() const { return {i, j, k}; }
  std::string str() const;
  friend bool operator==(const CommMonomial&, const CommMonomial&) = default;
};

struct CommOrder {
  bool operator()(const CommMonomial& a, const CommMonomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.tuple() < b.tuple();
  }
};

class CommPoly {
 public:
  using Terms = std::map<CommMonomial, RatFuncQ, CommOrder>;

  CommPoly() = default;
  CommPoly(const RatFuncQ& c);
  explicit CommPoly(const CommMonomial& m, const RatFuncQ& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  void add_term(const CommMonomial& m, const RatFuncQ& c);

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const CommPoly& o);
  CommPoly operator-() const;
  CommPoly pow(int n) const;  // pre: n >= 0

  friend bool operator==(const CommPoly&, const CommPoly&) = default;
  std::string str() const;

 private:
  Terms terms_;
};

CommPoly operator+(CommPoly a, const CommPoly& b);
CommPoly operator-(CommPoly a, const CommPoly& b);
CommPoly operator*(CommPoly a, const CommPoly& b);

// The quotient by the commutator ideal: A, B, C map to Ab, Bb, Cb and the
// central generators follow, al -> (q+q^-1)Ab + Bb Cb and cyclically.
CommPoly abelianize(const DeltaElement& x);

enum class GenPair { AB, BC, AC };

// x lies in the subalgebra generated by the named pair; decided through the
// quotient (the subalgebra is the full preimage of F[two barred letters]).
bool in_subalgebra(const DeltaElement& x, GenPair pair);

bool in_commutator_ideal(const DeltaElement& x);
bool in_commutator_ideal_plus_1(const DeltaElement& x);

// Membership in the intersection of all three pair subalgebras; always agrees
// with in_commutator_ideal_plus_1, and the implementation checks that too.
bool triple_intersection_check(const DeltaElement& x);

// Induced permutation of (Ab, Bb, Cb): perm[n] is the index the n-th barred
// letter maps to. Words use the same {'r','R','s'} alphabet.
std::array<int, 3> s3_of_word(std::string_view word);
// The word lies in the kernel of the map onto S3.
bool is_in_p(std::string_view word);

}  // namespace uaw
