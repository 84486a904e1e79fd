#pragma once

// Shared fixtures for the unit and acceptance suites: random rule and text
// generators plus deliberately naive reference implementations.

#include <cstdint>
#include <string>
#include <vector>

#include "regevo/corpus.hpp"
#include "regevo/features.hpp"
#include "regevo/rng.hpp"
#include "regevo/rule.hpp"
#include "regevo/token.hpp"

namespace regevo::testing {

// Tokens for `words` laid out as "w1 w2 w3".
std::vector<Token> tokens_of(const std::vector<std::string>& words);
std::vector<Token> tokens_of(const std::string& spaced);

// A corpus whose record i has text texts[i] and label labels[i], ids "q<i>".
LabeledCorpus corpus_of(const std::vector<std::string>& texts,
                        const std::vector<std::string>& labels);

std::vector<std::string> word_pool(std::size_t n, const std::string& prefix = "w");

struct RuleShape {
  std::size_t max_group = 3;
  std::size_t max_negatives = 3;
  std::uint32_t max_gap = 6;
  double ad_negative_share = 0.3;
};

// A valid rule over words drawn from `pool`.
RegexRule random_rule(Rng& rng, const std::vector<std::string>& pool, const RuleShape& shape = {});
std::vector<std::string> random_text(Rng& rng, const std::vector<std::string>& pool,
                                     std::size_t max_len);

// All-pairs reference semantics.
bool naive_match_ad(const AdExpression& ad, const std::vector<std::string>& text);
bool naive_match_rule(const RegexRule& rule, const std::vector<std::string>& text);

// O(|Q| |V|^2) reference: for each inquiry and each ordered pair, scan the
// token list for first positions.
std::vector<std::vector<std::uint32_t>> naive_cooccurrence(
    const std::vector<std::vector<std::string>>& inquiries, const std::vector<std::string>& vocab);

}  // namespace regevo::testing
