#include "regevo/matcher.hpp"

#include <algorithm>

namespace regevo {

bool match_ad(const AdExpression& ad, std::span<const Token> text) {
  return detail::ad_scan(
      text.size(), [&](std::size_t i) { return ad.left.contains(text[i].text); },
      [&](std::size_t i) { return ad.right.contains(text[i].text); }, ad.gap_min, ad.gap_max);
}

bool match_negative(const NegativeExpression& neg, std::span<const Token> text) {
  if (const auto* w = std::get_if<std::string>(&neg)) {
    return std::any_of(text.begin(), text.end(), [&](const Token& t) { return t.text == *w; });
  }
  return match_ad(std::get<AdExpression>(neg), text);
}

bool match_rule(const RegexRule& rule, std::span<const Token> text) {
  if (!match_ad(rule.positive, text)) return false;
  return std::none_of(rule.negatives.begin(), rule.negatives.end(),
                      [&](const NegativeExpression& n) { return match_negative(n, text); });
}

std::optional<std::size_t> first_match(const RegexVector& vec, std::span<const Token> text) {
  for (std::size_t i = 0; i < vec.rules.size(); ++i) {
    if (match_rule(vec.rules[i], text)) return i;
  }
  return std::nullopt;
}

bool match_vector(const RegexVector& vec, std::span<const Token> text) {
  return first_match(vec, text).has_value();
}

}  // namespace regevo
