#pragma once

// Restricted regular-expression dialect used for evolved classifiers.
//
// Every rule has the fixed two-layer shape
//
//     NOT( AD( OR(w...), OR(w...), {min,max} ), [ negative... ] )
//
// The text matches when some word of the left group is followed by some word
// of the right group with between `min` and `max` tokens in between, and no
// negative expression matches anywhere in the text.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "regevo/error.hpp"

namespace regevo {

// Characters that delimit the exchange format and so may not appear in words.
inline constexpr std::string_view kReservedChars = "()|#{},";

// True when `word` is usable as a feature word: non-empty, no whitespace, no
// reserved characters.
bool is_valid_word(std::string_view word);

struct OrExpression {
  std::vector<std::string> words;

  bool contains(std::string_view w) const;
  friend bool operator==(const OrExpression&, const OrExpression&) = default;
};

struct AdExpression {
  OrExpression left;
  OrExpression right;
  std::uint32_t gap_min = 0;
  std::uint32_t gap_max = 0;

  friend bool operator==(const AdExpression&, const AdExpression&) = default;
};

// A negative is either a lone feature word or an AD function over OR groups.
using NegativeExpression = std::variant<std::string, AdExpression>;

struct RegexRule {
  AdExpression positive;
  std::vector<NegativeExpression> negatives;

  friend bool operator==(const RegexRule&, const RegexRule&) = default;
};

// All rules evolved for one category. Matches when any rule matches.
struct RegexVector {
  std::string category;
  std::vector<RegexRule> rules;

  friend bool operator==(const RegexVector&, const RegexVector&) = default;
};

// Convenience builders used heavily by tests and the GP initializer.
OrExpression make_or(std::vector<std::string> words);
AdExpression make_ad(OrExpression left, OrExpression right, std::uint32_t gap_min,
                     std::uint32_t gap_max);
RegexRule make_rule(AdExpression positive, std::vector<NegativeExpression> negatives = {});

// One broken constraint. `constraint` is 1-5 for the structural layering
// constraints and 0 for plain type invariants (empty group, duplicate word,
// inverted gap, bad word text).
struct Violation {
  int constraint = 0;
  std::string where;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool violates(int constraint) const;
  std::string describe() const;
};

ValidationResult validate_rule(const RegexRule& rule);

// Raised when a rule that must be valid is not.
class ConstraintError : public Error {
 public:
  explicit ConstraintError(ValidationResult result);
  const ValidationResult& result() const { return result_; }

 private:
  ValidationResult result_;
};

}  // namespace regevo
