#pragma once

// Unrestricted expression tree over the three dialect functions.
//
// `RegexRule` can only hold the permitted layering. `Expr` can hold any
// nesting (an AD inside an AD operand, a NOT inside an OR, ...), which is what
// hand-written or imported trees look like before they are checked. Use
// `validate` to list the broken layering constraints and `to_rule` to lower a
// valid tree.

#include <cstdint>
#include <string>
#include <vector>

#include "regevo/rule.hpp"

namespace regevo {

struct Expr {
  enum class Kind { kWord, kOr, kAd, kNot };

  Kind kind = Kind::kWord;
  std::string word;            // kWord
  std::vector<Expr> children;  // kOr: elements; kAd: {left, right}; kNot: {P, N}
  std::uint32_t gap_min = 0;   // kAd
  std::uint32_t gap_max = 0;   // kAd

  static Expr Word(std::string w);
  static Expr Or(std::vector<Expr> elements);
  static Expr Ad(Expr left, Expr right, std::uint32_t gap_min, std::uint32_t gap_max);
  // `negatives` is the N side; an empty OR means no negatives.
  static Expr Not(Expr positive, Expr negatives);

  friend bool operator==(const Expr&, const Expr&) = default;
};

// Checks the five layering constraints:
//   1. the root is NOT(P, N);
//   2. P is a single AD function;
//   3. N is an OR of feature words or functions;
//   4. AD operands contain nothing but OR groups (a bare word counts as a
//      one-word group);
//   5. OR groups inside an AD contain only words or further ORs, which are
//      flattened.
// When the layering is sound the lowered rule is also checked against the type
// invariants (reported as constraint 0).
ValidationResult validate(const Expr& expr);

// Lowers a valid tree. Throws ConstraintError when `validate` reports anything.
RegexRule to_rule(const Expr& expr);

Expr to_expr(const RegexRule& rule);

}  // namespace regevo
