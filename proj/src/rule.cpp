#include "regevo/rule.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace regevo {

bool is_valid_word(std::string_view word) {
  if (word.empty()) return false;
  for (unsigned char c : word) {
    if (std::isspace(c) || kReservedChars.find(static_cast<char>(c)) != std::string_view::npos) {
      return false;
    }
  }
  return true;
}

bool OrExpression::contains(std::string_view w) const {
  return std::find(words.begin(), words.end(), w) != words.end();
}

OrExpression make_or(std::vector<std::string> words) { return OrExpression{std::move(words)}; }

AdExpression make_ad(OrExpression left, OrExpression right, std::uint32_t gap_min,
                     std::uint32_t gap_max) {
  return AdExpression{std::move(left), std::move(right), gap_min, gap_max};
}

RegexRule make_rule(AdExpression positive, std::vector<NegativeExpression> negatives) {
  return RegexRule{std::move(positive), std::move(negatives)};
}

bool ValidationResult::violates(int constraint) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.constraint == constraint; });
}

std::string ValidationResult::describe() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) out << "; ";
    if (v.constraint > 0) {
      out << "constraint " << v.constraint;
    } else {
      out << "invariant";
    }
    out << " at " << v.where << ": " << v.message;
  }
  return out.str();
}

ConstraintError::ConstraintError(ValidationResult result)
    : Error("rule violates constraints: " + result.describe()), result_(std::move(result)) {}

namespace {

void check_or(const OrExpression& group, const std::string& where,
              std::vector<Violation>& out) {
  if (group.words.empty()) {
    out.push_back({0, where, "empty OR group"});
    return;
  }
  std::set<std::string_view> seen;
  for (const auto& w : group.words) {
    if (!is_valid_word(w)) {
      out.push_back({0, where, "invalid feature word '" + w + "'"});
    }
    if (!seen.insert(w).second) {
      out.push_back({0, where, "duplicate word '" + w + "'"});
    }
  }
}

void check_ad(const AdExpression& ad, const std::string& where, std::vector<Violation>& out) {
  check_or(ad.left, where + ".left", out);
  check_or(ad.right, where + ".right", out);
  if (ad.gap_min > ad.gap_max) {
    out.push_back({0, where, "gap_min " + std::to_string(ad.gap_min) + " > gap_max " +
                                 std::to_string(ad.gap_max)});
  }
}

}  // namespace

ValidationResult validate_rule(const RegexRule& rule) {
  ValidationResult result;
  check_ad(rule.positive, "P", result.violations);
  for (std::size_t i = 0; i < rule.negatives.size(); ++i) {
    const std::string where = "N[" + std::to_string(i) + "]";
    if (const auto* w = std::get_if<std::string>(&rule.negatives[i])) {
      if (!is_valid_word(*w)) {
        result.violations.push_back({0, where, "invalid feature word '" + *w + "'"});
      }
    } else {
      check_ad(std::get<AdExpression>(rule.negatives[i]), where, result.violations);
    }
  }
  return result;
}

}  // namespace regevo
