#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "regevo/rule.hpp"
#include "regevo/token.hpp"

namespace regevo {

namespace detail {

// Single pass AD test over a sequence of length `n`.
//
// True iff some i < j has in_left(i), in_right(j) and j - i - 1 in
// [gap_min, gap_max]. While scanning j we track the latest left position
// that is at least gap_min + 1 tokens behind j; a hit only needs that
// position to also be within gap_max + 1.
template <class InLeft, class InRight>
bool ad_scan(std::size_t n, InLeft&& in_left, InRight&& in_right, std::uint32_t gap_min,
             std::uint32_t gap_max) {
  if (gap_min > gap_max) return false;
  std::int64_t last = -1;
  const auto lo_off = static_cast<std::int64_t>(gap_min) + 1;
  const auto hi_off = static_cast<std::int64_t>(gap_max) + 1;
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t jj = static_cast<std::int64_t>(j);
    const std::int64_t newest = jj - lo_off;
    if (newest >= 0 && in_left(static_cast<std::size_t>(newest))) last = newest;
    if (last >= 0 && jj - last <= hi_off && in_right(j)) return true;
  }
  return false;
}

}  // namespace detail

// `text` is the whole inquiry as one token sequence (sentences concatenated).
bool match_ad(const AdExpression& ad, std::span<const Token> text);
bool match_negative(const NegativeExpression& neg, std::span<const Token> text);
bool match_rule(const RegexRule& rule, std::span<const Token> text);

// Index of the first rule that matches, evaluating rules in order and
// stopping at the first hit.
std::optional<std::size_t> first_match(const RegexVector& vec, std::span<const Token> text);
bool match_vector(const RegexVector& vec, std::span<const Token> text);

}  // namespace regevo
