#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "regevo/token.hpp"

namespace regevo {

struct TokenizerOptions {
  bool lowercase = true;
};

// Reference tokenizer.
//
// Sentences end at `.`, `!`, `?` and their full-width forms. Tokens are
// separated by whitespace and punctuation (ASCII punctuation other than `-`,
// `_` and `'`, plus common CJK/full-width punctuation). Lowercasing only
// touches ASCII letters. Empty sentences are dropped, so empty input yields
// no sentences.
std::vector<Sentence> tokenize(std::string_view raw, const TokenizerOptions& options = {});

// Pluggable segmentation hook. Any callable honouring the same output shape
// (non-empty tokens with byte spans) can replace the reference tokenizer.
using Tokenizer = std::function<std::vector<Sentence>(std::string_view)>;

Tokenizer reference_tokenizer(TokenizerOptions options = {});

// Concatenates sentences into the single token sequence matchers run on.
std::vector<Token> flatten(const std::vector<Sentence>& sentences);

}  // namespace regevo
