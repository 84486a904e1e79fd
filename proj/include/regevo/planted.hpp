#pragma once

// Synthetic corpora with a known, dialect-expressible target category.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "regevo/corpus.hpp"
#include "regevo/rule.hpp"

namespace regevo {

// Membership of `target_label`: word `a` precedes word `b` with at most
// `max_gap` tokens between them, and word `x` does not occur. All other
// inquiries get `rest_label`. Background words follow a Zipf law.
struct PlantedSpec {
  std::size_t inquiries = 5000;
  std::size_t vocabulary = 200;  // includes a, b and x
  std::uint32_t max_gap = 8;
  double positive_fraction = 0.3;
  // Relative weights of the non-member shapes: vetoed by x, reversed order,
  // gap too wide, a or b alone, background only.
  std::array<double, 5> negative_mix{0.3, 0.15, 0.15, 0.15, 0.25};
  std::size_t min_length = 6;  // background tokens per inquiry
  std::size_t max_length = 16;
  double zipf_exponent = 1.0;
  std::uint64_t seed = 1;
  std::string target_label = "target";
  std::string rest_label = "rest";
};

struct PlantedWords {
  std::string a, b, x;
};
PlantedWords planted_words(const PlantedSpec& spec);

// NOT(AD(OR(a), OR(b), {0, max_gap}), [x]): the exact membership rule.
RegexRule planted_rule(const PlantedSpec& spec);

std::vector<CorpusRecord> make_planted_corpus(const PlantedSpec& spec);

}  // namespace regevo
