#pragma once

#include "uaw/delta.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uaw {

// Syntax error; offset is the 0-based position of the offending character.
struct parse_error : std::runtime_error {
  parse_error(std::size_t off, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(off)), offset(off) {}
  std::size_t offset;
};

// Semantic failure while evaluating a well-formed tree (bad division).
struct eval_error : std::runtime_error {
  explicit eval_error(const std::string& what) : std::runtime_error(what) {}
};

// Expression tree over the grammar
//
//   sum     := neg (('+' | '-') neg)*
//   neg     := '-' neg | product
//   product := power (('*' | '/')? power)*      adjacency means product
//   power   := atom ('^' '-'? digits)?
//   atom    := symbol | digits | '(' sum ')'
//
// Symbols: A B C al be ga Om q; runs of letters split greedily, so "BA" is
// the product B*A. Exponents are nonnegative integers, except that the bare
// symbol q takes any integer. '/' is division by a scalar (fractions like
// 3/2 or (q^2-1)/(q+1) come out of it); noncommutative order is kept
// left-to-right throughout.
class Expr {
 public:
  static Expr parse(std::string_view text);  // throws parse_error

  // Om expands through the Casimir element; the result is in normal form.
  // Throws eval_error when a divisor is zero or not a scalar.
  DeltaElement eval() const;

 private:
  friend class Parser;

  // one vector of nodes, children by index; root is the last entry
  struct Node {
    char kind = 0;  // 's' symbol, 'n' integer, 'q' q-power, 'm' negation,
                    // or one of '+' '-' '*' '/' '^'
    int sym = 0;        // 's': 0..5 = Letter, 6 = Om, 7 = q
    QRational value;    // 'n'
    int exponent = 0;   // 'q' and '^'
    int a = -1, b = -1; // children
  };
  std::vector<Node> nodes_;

  DeltaElement eval_node(int u) const;
};

// parse(text).eval() in one call.
DeltaElement parse_element(std::string_view text);

}  // namespace uaw
