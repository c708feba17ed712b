#pragma once

#include "uaw/rewrite.hpp"

#include <array>
#include <optional>

namespace uaw {

// PBW basis monomial A^i B^j C^k al^r be^s ga^t.
struct PBWMonomial {
  int i = 0, j = 0, k = 0, r = 0, s = 0, t = 0;

  int degree() const { return i + j + k + r + s + t; }
  std::array<int, 6> tuple() const { return {i, j, k, r, s, t}; }
  bool is_unit() const { return degree() == 0; }

  static PBWMonomial from_word(const Word& w);  // pre: is_irreducible(w)
  Word to_word() const;

  std::string str() const;  // "A^2 B ga", "1"
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

// Canonical term order: total degree first, then the exponent tuple
// lexicographically. Rendering and JSON both walk maps in this order.
struct PBWOrder {
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.tuple() < b.tuple();
  }
};

// Element of the algebra in PBW normal form.
class DeltaElement {
 public:
  using Terms = std::map<PBWMonomial, RatFuncQ, PBWOrder>;

  DeltaElement() = default;
  DeltaElement(int c) : DeltaElement(RatFuncQ(c)) {}
  DeltaElement(const QRational& c) : DeltaElement(RatFuncQ(c)) {}
  DeltaElement(const RatFuncQ& c) {
    if (!c.is_zero()) terms_.emplace(PBWMonomial{}, c);
  }
  explicit DeltaElement(const PBWMonomial& m, const RatFuncQ& c = 1) {
    if (!c.is_zero()) terms_.emplace(m, c);
  }

  // Normal form of a raw word combination; the one place rewriting happens.
  static DeltaElement normalize(const RawElement& e, Strategy st = Strategy::leftmost);

  static DeltaElement generator(Letter l);
  static DeltaElement A() { return generator(Letter::A); }
  static DeltaElement B() { return generator(Letter::B); }
  static DeltaElement C() { return generator(Letter::C); }
  static DeltaElement alpha() { return generator(Letter::al); }
  static DeltaElement beta() { return generator(Letter::be); }
  static DeltaElement gamma() { return generator(Letter::ga); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
  RatFuncQ scalar_value() const { return coefficient_of(PBWMonomial{}); }
  RatFuncQ coefficient_of(const PBWMonomial& m) const;

  // Highest total degree among the monomials; nullopt for 0 (minus infinity).
  std::optional<int> filtration_degree() const;

  void add_term(const PBWMonomial& m, const RatFuncQ& c);

  DeltaElement& operator+=(const DeltaElement& o);
  DeltaElement& operator-=(const DeltaElement& o);
  DeltaElement& operator*=(const DeltaElement& o);
  DeltaElement operator-() const;
  DeltaElement pow(int n) const;  // pre: n >= 0

  friend bool operator==(const DeltaElement&, const DeltaElement&) = default;

  // Canonical text form: terms ascending in PBWOrder, "coeff * monomial";
  // exactly what the expression parser accepts back.
  std::string str() const;

 private:
  Terms terms_;
};

DeltaElement operator+(DeltaElement a, const DeltaElement& b);
DeltaElement operator-(DeltaElement a, const DeltaElement& b);
DeltaElement operator*(DeltaElement a, const DeltaElement& b);
DeltaElement operator*(const RatFuncQ& c, DeltaElement x);
DeltaElement operator*(DeltaElement x, const RatFuncQ& c);

DeltaElement commutator(const DeltaElement& x, const DeltaElement& y);

// The Casimir element q ABC + q^2 A^2 + q^-2 B^2 + q^2 C^2 - q A al - q^-1 B be - q C ga.
const DeltaElement& casimir();
// Its power, cached (central, so shared freely).
const DeltaElement& casimir_power(int l);  // pre: l >= 0
// The six single-cycle forms; all equal casimir() in the algebra.
std::array<DeltaElement, 6> casimir_variants();

// x commutes with A, B and C (hence with everything).
bool is_central(const DeltaElement& x);

// Monomial A^i B^j C^k Om^l al^r be^s ga^t with min(i,j,k) = 0.
struct OmegaMonomial {
  int i = 0, j = 0, k = 0, l = 0, r = 0, s = 0, t = 0;

  int degree() const { return i + j + k + 3 * l + r + s + t; }
  std::array<int, 7> tuple() const { return {i, j, k, l, r, s, t}; }
  bool well_formed() const { return i >= 0 && j >= 0 && k >= 0 && l >= 0 && r >= 0 && s >= 0 && t >= 0 && (i == 0 || j == 0 || k == 0); }

  std::string str() const;  // "A^2 Om al", "1"
  friend bool operator==(const OmegaMonomial&, const OmegaMonomial&) = default;
};

struct OmegaOrder {
  bool operator()(const OmegaMonomial& a, const OmegaMonomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.tuple() < b.tuple();
  }
};

// Linear combination of Omega-basis monomials.
class OmegaElement {
 public:
  using Terms = std::map<OmegaMonomial, RatFuncQ, OmegaOrder>;

  OmegaElement() = default;
  explicit OmegaElement(const OmegaMonomial& m, const RatFuncQ& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const OmegaMonomial& m, const RatFuncQ& c);

  friend bool operator==(const OmegaElement&, const OmegaElement&) = default;
  std::string str() const;

 private:
  Terms terms_;
};

// Change of basis in both directions. Exact inverses of each other; the
// conversion into the Omega basis runs the degree-triangular elimination the
// filtration Lemma guarantees to work.
OmegaElement to_omega_basis(const DeltaElement& x);
DeltaElement from_omega_basis(const OmegaElement& x);

// The alternate presentation on A, B, ga: both tridiagonal relations, the
// cubic ga relation, centrality of ga, and the recovery formulas for C, al, be.
struct PresentationReport {
  bool tridiagonal_ab = false;
  bool tridiagonal_ba = false;
  bool gamma_cubic = false;
  bool gamma_commutes_a = false;
  bool gamma_commutes_b = false;
  bool recover_c = false;
  bool recover_alpha = false;
  bool recover_beta = false;
  bool ok() const {
    return tridiagonal_ab && tridiagonal_ba && gamma_cubic && gamma_commutes_a &&
           gamma_commutes_b && recover_c && recover_alpha && recover_beta;
  }
};
PresentationReport verify_presentation_identities();

}  // namespace uaw
