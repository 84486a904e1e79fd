#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regevo/rule.hpp"

namespace regevo {

// One candidate classifier for a single category: an ordered rule vector and
// its cached fitness. Any edit to `rules` must reset `fitness`.
struct Individual {
  std::vector<RegexRule> rules;
  std::optional<double> fitness;

  RegexVector as_vector(std::string category) const { return RegexVector{std::move(category), rules}; }
  // Serialized rules joined by newlines; identical rule lists give identical keys.
  std::string key() const;
};

}  // namespace regevo
