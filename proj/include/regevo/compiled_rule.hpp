#pragma once

// Rules resolved against a corpus lexicon, for matching on word-id sequences.
// Words missing from the lexicon resolve to kUnknownWord and never match.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "regevo/corpus.hpp"
#include "regevo/matcher.hpp"
#include "regevo/rule.hpp"

namespace regevo {

struct CompiledGroup {
  std::vector<WordId> ids;

  bool contains(WordId id) const { return std::find(ids.begin(), ids.end(), id) != ids.end(); }
};

struct CompiledAd {
  CompiledGroup left;
  CompiledGroup right;
  std::uint32_t gap_min = 0;
  std::uint32_t gap_max = 0;

  bool matches(std::span<const WordId> text) const {
    return detail::ad_scan(
        text.size(), [&](std::size_t i) { return left.contains(text[i]); },
        [&](std::size_t i) { return right.contains(text[i]); }, gap_min, gap_max);
  }
};

struct CompiledNegative {
  bool is_word = true;
  WordId word = kUnknownWord;
  CompiledAd ad;

  bool matches(std::span<const WordId> text) const {
    if (is_word) return std::find(text.begin(), text.end(), word) != text.end();
    return ad.matches(text);
  }
};

struct CompiledRule {
  CompiledAd positive;
  std::vector<CompiledNegative> negatives;

  bool vetoed(std::span<const WordId> text) const {
    return std::any_of(negatives.begin(), negatives.end(),
                       [&](const CompiledNegative& n) { return n.matches(text); });
  }
  bool matches(std::span<const WordId> text) const {
    return positive.matches(text) && !vetoed(text);
  }
};

CompiledRule compile(const RegexRule& rule, const Lexicon& lexicon);
std::vector<CompiledRule> compile(std::span<const RegexRule> rules, const Lexicon& lexicon);

}  // namespace regevo
