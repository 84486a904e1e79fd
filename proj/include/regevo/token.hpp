#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace regevo {

// One token of normalized text. `begin`/`end` are byte offsets into the raw
// UTF-8 input, so `raw.substr(begin, end - begin)` is the surface form before
// normalization.
struct Token {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

using Sentence = std::vector<Token>;

}  // namespace regevo
