#include "regevo/planted.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "regevo/error.hpp"
#include "regevo/matcher.hpp"
#include "regevo/rng.hpp"

namespace regevo {

namespace {

std::string word_name(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "w%03zu", i);
  return buf;
}

// Shapes of generated inquiries. Only kPositive satisfies the predicate by
// construction; labels are still computed from the predicate itself.
enum class Shape { kPositive, kVetoed, kReversed, kFar, kSingle, kBackground };

}  // namespace

PlantedWords planted_words(const PlantedSpec& spec) {
  const std::size_t mid = spec.vocabulary / 4;
  return {word_name(mid), word_name(mid + 1), word_name(mid + 2)};
}

RegexRule planted_rule(const PlantedSpec& spec) {
  const auto w = planted_words(spec);
  return make_rule(make_ad(make_or({w.a}), make_or({w.b}), 0, spec.max_gap), {w.x});
}

std::vector<CorpusRecord> make_planted_corpus(const PlantedSpec& spec) {
  if (spec.vocabulary < 8) throw UsageError("planted corpus needs at least 8 words");
  if (spec.min_length < 1 || spec.min_length > spec.max_length) {
    throw UsageError("planted corpus needs 1 <= min_length <= max_length");
  }
  const auto special = planted_words(spec);
  std::vector<std::string> background;
  for (std::size_t i = 0; i < spec.vocabulary; ++i) {
    std::string w = word_name(i);
    if (w != special.a && w != special.b && w != special.x) background.push_back(std::move(w));
  }
  std::vector<double> zipf(background.size());
  for (std::size_t i = 0; i < zipf.size(); ++i) {
    zipf[i] = 1.0 / std::pow(static_cast<double>(i + 1), spec.zipf_exponent);
  }
  const RegexRule rule = planted_rule(spec);

  Rng rng(spec.seed);
  const double rest = 1.0 - spec.positive_fraction;
  const double mix_total = spec.negative_mix[0] + spec.negative_mix[1] + spec.negative_mix[2] +
                           spec.negative_mix[3] + spec.negative_mix[4];
  std::vector<double> shape_weights{spec.positive_fraction};
  for (double w : spec.negative_mix) {
    shape_weights.push_back(mix_total > 0.0 ? rest * w / mix_total : 0.0);
  }

  std::vector<CorpusRecord> out;
  out.reserve(spec.inquiries);
  for (std::size_t q = 0; q < spec.inquiries; ++q) {
    std::vector<std::string> tokens;
    const auto len = rng.between(spec.min_length, spec.max_length);
    for (std::uint64_t k = 0; k < len; ++k) tokens.push_back(background[rng.weighted(zipf)]);

    auto insert_at = [&](std::size_t pos, const std::string& w) {
      tokens.insert(tokens.begin() + static_cast<long>(std::min(pos, tokens.size())), w);
    };
    // Places `first` then `second` with exactly `gap` tokens between.
    auto place_pair = [&](const std::string& first, const std::string& second, std::size_t gap) {
      while (tokens.size() < gap) tokens.push_back(background[rng.weighted(zipf)]);
      const std::size_t start = rng.index(tokens.size() - gap + 1);
      insert_at(start + gap, second);
      insert_at(start, first);
    };

    switch (static_cast<Shape>(rng.weighted(shape_weights))) {
      case Shape::kPositive:
        place_pair(special.a, special.b, rng.between(0, spec.max_gap));
        break;
      case Shape::kVetoed:
        place_pair(special.a, special.b, rng.between(0, spec.max_gap));
        insert_at(rng.index(tokens.size() + 1), special.x);
        break;
      case Shape::kReversed:
        place_pair(special.b, special.a, rng.between(0, spec.max_gap));
        break;
      case Shape::kFar:
        place_pair(special.a, special.b, rng.between(spec.max_gap + 1, 2 * spec.max_gap + 4));
        break;
      case Shape::kSingle:
        insert_at(rng.index(tokens.size() + 1), rng.index(2) == 0 ? special.a : special.b);
        break;
      case Shape::kBackground:
        break;
    }

    std::vector<Token> toks;
    std::string text;
    for (const auto& t : tokens) {
      if (!text.empty()) text += ' ';
      toks.push_back({t, text.size(), text.size() + t.size()});
      text += t;
    }
    text += '.';
    CorpusRecord r;
    r.id = "q" + std::to_string(q);
    r.text = std::move(text);
    r.label = match_rule(rule, toks) ? spec.target_label : spec.rest_label;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace regevo
