#pragma once

#include "uaw/ratfunc.hpp"
#include "uaw/word.hpp"

#include <map>

namespace uaw {

// One rewriting rule: the two-letter descending word xy (x > y) is replaced by
// the linear combination rhs. Every rhs word is order_less than the lhs, which
// is what makes reduction terminate.
struct ReductionRule {
  Letter x{};
  Letter y{};
  std::vector<std::pair<Word, RatFuncQ>> rhs;
};

// The fifteen rules of the algebra: one per descending pair of distinct
// letters. Three encode the defining relations, twelve are centrality swaps.
class RuleSet {
 public:
  static const RuleSet& standard();

  const std::vector<ReductionRule>& rules() const { return rules_; }
  // Rule whose lhs is xy; null when xy is not inverted (x <= y).
  const ReductionRule* find(Letter x, Letter y) const;

 private:
  std::vector<ReductionRule> rules_;
  int index_[6][6] = {};
};

// Formal Q(q)-linear combination of free words; the input shape for reduce.
class RawElement {
 public:
  RawElement() = default;
  explicit RawElement(const Word& w, const RatFuncQ& c = 1) { add(w, c); }

  void add(const Word& w, const RatFuncQ& c);
  const std::map<Word, RatFuncQ>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

 private:
  std::map<Word, RatFuncQ> terms_;  // zero coefficients are dropped
};

enum class Strategy { leftmost, rightmost };

// Normal form: every key is an irreducible (sorted) word, no zero
// coefficients. Independent of Strategy — that is the diamond property, and
// the ambiguity checker plus the randomized tests certify it.
std::map<Word, RatFuncQ> reduce(const RawElement& e, Strategy strategy = Strategy::leftmost);
std::map<Word, RatFuncQ> reduce_word(const Word& w, Strategy strategy = Strategy::leftmost);

struct OverlapResult {
  Word overlap;     // xyz with x > y > z
  bool resolved;    // both one-step reducts share one normal form
  bool nontrivial;  // both constituent rules are defining relations, not swaps
};

struct AmbiguityReport {
  std::vector<OverlapResult> overlaps;  // all descending triples, 20 of them
  bool inclusion_free = false;          // no lhs contains another
  bool rederived_ok = false;            // table matches rules re-derived from the
                                        // defining relations by field arithmetic
  bool all_resolved() const;
};

AmbiguityReport check_ambiguities();

}  // namespace uaw
