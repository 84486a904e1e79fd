#include "regevo/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "regevo/error.hpp"

namespace regevo {

void GpConfig::validate() const {
  if (population_size < 2) throw UsageError("population_size must be at least 2");
  if (insertion_period < 1) throw UsageError("insertion_period must be at least 1");
  if (stall_window < 1) throw UsageError("stall_window must be at least 1");
  if (!(crossover_speed > 0.0) || !(mutation_speed > 0.0)) {
    throw UsageError("crossover_speed and mutation_speed must be positive");
  }
  if (!(f_beta > 0.0)) throw UsageError("f_beta must be positive");
  if (init_gap_min > init_gap_max) throw UsageError("init_gap_min exceeds init_gap_max");
  if (threads < 1) throw UsageError("threads must be at least 1");
}

double operator_probability(double f, double f_max, double f_avg, double speed) {
  const double r = (f_max == f_avg) ? 1.0 : (f_max - f) / (f_max - f_avg);
  return 1.0 / (1.0 + std::exp(-speed * r));
}

std::vector<double> cooccurrence_word_distribution(OperandSlot slot,
                                                   const OrExpression& counterpart,
                                                   const WordDictionary& dict,
                                                   const CooccurrenceMatrix& matrix) {
  std::vector<double> weights(dict.size(), 0.0);
  if (dict.empty()) return weights;
  std::vector<std::size_t> others;
  for (const auto& w : counterpart.words) {
    if (auto idx = matrix.index_of(w)) others.push_back(*idx);
  }
  double total = 0.0;
  for (std::size_t k = 0; k < dict.size(); ++k) {
    std::optional<std::size_t> idx;
    if (k < matrix.size() && matrix.vocabulary()[k] == dict[k].word) {
      idx = k;
    } else {
      idx = matrix.index_of(dict[k].word);
    }
    if (!idx) continue;
    double c = 0.0;
    for (std::size_t o : others) {
      c += slot == OperandSlot::kLeft ? matrix.at(*idx, o) : matrix.at(o, *idx);
    }
    weights[k] = c;
    total += c;
  }
  if (total > 0.0) {
    for (double& w : weights) w /= total;
  } else {
    std::fill(weights.begin(), weights.end(), 1.0 / static_cast<double>(dict.size()));
  }
  return weights;
}

RegexRule seed_rule(const std::string& word, const WordDictionary& negative, const GpConfig& cfg,
                    Rng& rng) {
  const auto d = static_cast<std::uint32_t>(rng.between(cfg.init_gap_min, cfg.init_gap_max));
  std::vector<NegativeExpression> negatives;
  if (!negative.empty()) negatives.emplace_back(negative[0].word);
  return make_rule(make_ad(make_or({word}), make_or({word}), 0, d), std::move(negatives));
}

Population initialize_population(std::string_view category_name, const WordSources& words,
                                 const GpConfig& cfg, Rng& rng, const Tokenizer& tokenizer) {
  const WordDictionary& positive = *words.positive;
  if (positive.empty()) throw Error("empty feature dictionary");
  const std::size_t n = cfg.population_size;

  std::vector<std::string> seeds;
  for (const auto& t : flatten(tokenizer(category_name))) {
    if (seeds.size() >= n) break;
    if (positive.contains(t.text) &&
        std::find(seeds.begin(), seeds.end(), t.text) == seeds.end()) {
      seeds.push_back(t.text);
    }
  }
  const std::size_t from_name = seeds.size();
  std::vector<std::string> rest;
  for (const auto& e : positive.entries) {
    if (std::find(seeds.begin(), seeds.begin() + static_cast<long>(from_name), e.word) ==
        seeds.begin() + static_cast<long>(from_name)) {
      rest.push_back(e.word);
    }
  }
  if (rest.empty()) rest = positive.words();
  for (std::size_t k = 0; seeds.size() < n; ++k) seeds.push_back(rest[k % rest.size()]);

  Population pop;
  pop.individuals.reserve(n);
  for (const auto& w : seeds) {
    Individual ind;
    ind.rules.push_back(seed_rule(w, *words.negative, cfg, rng));
    pop.individuals.push_back(std::move(ind));
  }
  return pop;
}

std::vector<CrossoverSlot> crossover_slots(const Individual& a, const Individual& b) {
  std::vector<CrossoverSlot> slots;
  const std::size_t common = std::min(a.rules.size(), b.rules.size());
  for (std::size_t i = 0; i < common; ++i) {
    slots.push_back({CrossoverSlot::Kind::kRule, i, 0});
    slots.push_back({CrossoverSlot::Kind::kLeftGroup, i, 0});
    slots.push_back({CrossoverSlot::Kind::kRightGroup, i, 0});
    const std::size_t la = a.rules[i].negatives.size();
    const std::size_t lb = b.rules[i].negatives.size();
    for (std::size_t cut = 0; cut <= std::min(la, lb); ++cut) {
      if (cut < std::max(la, lb)) slots.push_back({CrossoverSlot::Kind::kNegativeSuffix, i, cut});
    }
  }
  return slots;
}

std::pair<Individual, Individual> apply_crossover(const Individual& a, const Individual& b,
                                                  const CrossoverSlot& slot) {
  Individual ca{a.rules, std::nullopt};
  Individual cb{b.rules, std::nullopt};
  RegexRule& ra = ca.rules.at(slot.rule);
  RegexRule& rb = cb.rules.at(slot.rule);
  switch (slot.kind) {
    case CrossoverSlot::Kind::kRule:
      std::swap(ra, rb);
      break;
    case CrossoverSlot::Kind::kLeftGroup:
      std::swap(ra.positive.left, rb.positive.left);
      break;
    case CrossoverSlot::Kind::kRightGroup:
      std::swap(ra.positive.right, rb.positive.right);
      break;
    case CrossoverSlot::Kind::kNegativeSuffix: {
      std::vector<NegativeExpression> tail_a(ra.negatives.begin() + static_cast<long>(slot.cut),
                                             ra.negatives.end());
      std::vector<NegativeExpression> tail_b(rb.negatives.begin() + static_cast<long>(slot.cut),
                                             rb.negatives.end());
      ra.negatives.resize(slot.cut);
      rb.negatives.resize(slot.cut);
      ra.negatives.insert(ra.negatives.end(), tail_b.begin(), tail_b.end());
      rb.negatives.insert(rb.negatives.end(), tail_a.begin(), tail_a.end());
      break;
    }
  }
  return {std::move(ca), std::move(cb)};
}

std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, Rng& rng) {
  const auto slots = crossover_slots(a, b);
  if (slots.empty()) throw Error("crossover: parents share no slot");
  return apply_crossover(a, b, slots[rng.index(slots.size())]);
}

namespace {

// A group inside a rule: the positive operands, or an operand of an AD negative.
struct GroupRef {
  std::size_t rule;
  std::ptrdiff_t negative;  // -1 for the positive AD
  OperandSlot side;
};

AdExpression& ad_of(Individual& ind, const GroupRef& g) {
  RegexRule& r = ind.rules[g.rule];
  if (g.negative < 0) return r.positive;
  return std::get<AdExpression>(r.negatives[static_cast<std::size_t>(g.negative)]);
}

OrExpression& group_of(Individual& ind, const GroupRef& g) {
  AdExpression& ad = ad_of(ind, g);
  return g.side == OperandSlot::kLeft ? ad.left : ad.right;
}

std::vector<GroupRef> all_groups(const Individual& ind) {
  std::vector<GroupRef> out;
  for (std::size_t r = 0; r < ind.rules.size(); ++r) {
    out.push_back({r, -1, OperandSlot::kLeft});
    out.push_back({r, -1, OperandSlot::kRight});
    const auto& negs = ind.rules[r].negatives;
    for (std::size_t n = 0; n < negs.size(); ++n) {
      if (std::holds_alternative<AdExpression>(negs[n])) {
        out.push_back({r, static_cast<std::ptrdiff_t>(n), OperandSlot::kLeft});
        out.push_back({r, static_cast<std::ptrdiff_t>(n), OperandSlot::kRight});
      }
    }
  }
  return out;
}

// Draws from `weights` restricted to the entries `admissible` accepts;
// uniform over those when their weights sum to zero. nullopt when none is
// admissible.
template <class Admissible>
std::optional<std::size_t> draw_admissible(const WordDictionary& dict, std::vector<double> weights,
                                           Admissible&& admissible, Rng& rng) {
  std::vector<std::size_t> allowed;
  double total = 0.0;
  for (std::size_t k = 0; k < dict.size(); ++k) {
    if (admissible(dict[k].word)) {
      allowed.push_back(k);
      total += weights[k];
    } else {
      weights[k] = 0.0;
    }
  }
  if (allowed.empty()) return std::nullopt;
  if (total <= 0.0) return allowed[rng.index(allowed.size())];
  return rng.weighted(weights);
}

// Replaces group[pos] with a word that is new to the group.
bool replace_in_group(OrExpression& group, std::size_t pos, const WordDictionary& dict,
                      std::vector<double> weights, Rng& rng) {
  auto pick = draw_admissible(
      dict, std::move(weights), [&](const std::string& w) { return !group.contains(w); }, rng);
  if (!pick) return false;
  group.words[pos] = dict[*pick].word;
  return true;
}

std::vector<double> frequency_weights(const WordDictionary& dict) {
  std::vector<double> w;
  w.reserve(dict.size());
  for (const auto& e : dict.entries) w.push_back(static_cast<double>(e.corpus_frequency));
  return w;
}

bool shrink(Individual& ind, Rng& rng) {
  struct Site {
    enum class Kind { kWord, kNegative, kRule } kind;
    GroupRef group;
    std::size_t index;
  };
  std::vector<Site> sites;
  for (const auto& g : all_groups(ind)) {
    Individual& self = ind;
    if (group_of(self, g).words.size() >= 2) sites.push_back({Site::Kind::kWord, g, 0});
  }
  for (std::size_t r = 0; r < ind.rules.size(); ++r) {
    for (std::size_t n = 0; n < ind.rules[r].negatives.size(); ++n) {
      sites.push_back({Site::Kind::kNegative, {r, -1, OperandSlot::kLeft}, n});
    }
  }
  if (ind.rules.size() >= 2) {
    for (std::size_t r = 0; r < ind.rules.size(); ++r) {
      sites.push_back({Site::Kind::kRule, {r, -1, OperandSlot::kLeft}, 0});
    }
  }
  if (sites.empty()) return false;
  const Site& site = sites[rng.index(sites.size())];
  switch (site.kind) {
    case Site::Kind::kWord: {
      auto& words = group_of(ind, site.group).words;
      words.erase(words.begin() + static_cast<long>(rng.index(words.size())));
      break;
    }
    case Site::Kind::kNegative: {
      auto& negs = ind.rules[site.group.rule].negatives;
      negs.erase(negs.begin() + static_cast<long>(site.index));
      break;
    }
    case Site::Kind::kRule:
      ind.rules.erase(ind.rules.begin() + static_cast<long>(site.group.rule));
      break;
  }
  return true;
}

bool regap(Individual& ind, Rng& rng) {
  std::vector<GroupRef> ads;
  for (const auto& g : all_groups(ind)) {
    if (g.side == OperandSlot::kLeft) ads.push_back(g);
  }
  AdExpression& ad = ad_of(ind, ads[rng.index(ads.size())]);
  const std::uint64_t bound = 2ull * ad.gap_max + 1;
  switch (rng.index(3)) {
    case 0:
      ad.gap_max = static_cast<std::uint32_t>(rng.between(ad.gap_min, bound));
      break;
    case 1:
      ad.gap_min = static_cast<std::uint32_t>(rng.between(0, ad.gap_max));
      break;
    default: {
      const auto x = static_cast<std::uint32_t>(rng.between(0, bound));
      const auto y = static_cast<std::uint32_t>(rng.between(0, bound));
      ad.gap_min = std::min(x, y);
      ad.gap_max = std::max(x, y);
      break;
    }
  }
  return true;
}

bool replace_positive_word(Individual& ind, const WordSources& words, Rng& rng) {
  if (!words.positive || words.positive->empty() || !words.cooccurrence) return false;
  const std::size_t r = rng.index(ind.rules.size());
  const OperandSlot side = rng.index(2) == 0 ? OperandSlot::kLeft : OperandSlot::kRight;
  AdExpression& ad = ind.rules[r].positive;
  OrExpression& target = side == OperandSlot::kLeft ? ad.left : ad.right;
  const OrExpression& counterpart = side == OperandSlot::kLeft ? ad.right : ad.left;
  const std::size_t pos = rng.index(target.words.size());
  return replace_in_group(
      target, pos, *words.positive,
      cooccurrence_word_distribution(side, counterpart, *words.positive, *words.cooccurrence), rng);
}

bool replace_negative_word(Individual& ind, const WordSources& words, Rng& rng) {
  if (!words.negative || words.negative->empty()) return false;
  // (rule, negative) sites; an empty negative part is one open site.
  constexpr std::size_t kOpen = ~std::size_t{0};
  std::vector<std::pair<std::size_t, std::size_t>> sites;
  for (std::size_t r = 0; r < ind.rules.size(); ++r) {
    const auto& negs = ind.rules[r].negatives;
    if (negs.empty()) sites.emplace_back(r, kOpen);
    for (std::size_t n = 0; n < negs.size(); ++n) sites.emplace_back(r, n);
  }
  const auto [r, n] = sites[rng.index(sites.size())];
  const auto weights = frequency_weights(*words.negative);
  if (n == kOpen) {
    ind.rules[r].negatives.emplace_back((*words.negative)[rng.weighted(weights)].word);
    return true;
  }
  NegativeExpression& neg = ind.rules[r].negatives[n];
  if (auto* w = std::get_if<std::string>(&neg)) {
    auto pick = draw_admissible(
        *words.negative, weights, [&](const std::string& c) { return c != *w; }, rng);
    if (!pick) return false;
    *w = (*words.negative)[*pick].word;
    return true;
  }
  AdExpression& ad = std::get<AdExpression>(neg);
  OrExpression& target = rng.index(2) == 0 ? ad.left : ad.right;
  return replace_in_group(target, rng.index(target.words.size()), *words.negative, weights, rng);
}

}  // namespace

bool mutate_with(Individual& ind, MutationKind kind, const WordSources& words, Rng& rng) {
  if (ind.rules.empty()) return false;
  Individual work{ind.rules, std::nullopt};
  bool applied = false;
  switch (kind) {
    case MutationKind::kShrink:
      applied = shrink(work, rng);
      break;
    case MutationKind::kGap:
      applied = regap(work, rng);
      break;
    case MutationKind::kPositiveWord:
      applied = replace_positive_word(work, words, rng);
      break;
    case MutationKind::kNegativeWord:
      applied = replace_negative_word(work, words, rng);
      break;
  }
  if (applied) ind = std::move(work);
  return applied;
}

Individual mutate(const Individual& ind, const WordSources& words, Rng& rng) {
  std::vector<MutationKind> kinds{MutationKind::kShrink, MutationKind::kGap,
                                  MutationKind::kPositiveWord, MutationKind::kNegativeWord};
  Individual out = ind;
  while (!kinds.empty()) {
    const std::size_t k = rng.index(kinds.size());
    if (mutate_with(out, kinds[k], words, rng)) return out;
    kinds.erase(kinds.begin() + static_cast<long>(k));
  }
  return out;
}

void insert_rules(std::vector<Individual>& individuals, const WordSources& words,
                  const GpConfig& cfg, Rng& rng) {
  const WordDictionary& positive = *words.positive;
  if (positive.empty()) return;
  for (auto& ind : individuals) {
    const auto& w = positive[rng.index(positive.size())].word;
    ind.rules.push_back(seed_rule(w, *words.negative, cfg, rng));
    ind.fitness.reset();
  }
}

bool insert_rule_schedule(Population& pop, const WordSources& words, const GpConfig& cfg,
                          Rng& rng) {
  if (pop.generation == 0 || pop.generation % cfg.insertion_period != 0) return false;
  insert_rules(pop.individuals, words, cfg, rng);
  return true;
}

std::vector<Individual> select_next_generation(std::vector<Individual> combined, std::size_t n,
                                               Rng& rng) {
  if (combined.size() < n) {
    throw Error("selection needs at least " + std::to_string(n) + " individuals, got " +
                std::to_string(combined.size()));
  }
  if (n == 0) return {};
  std::size_t best = 0;
  for (std::size_t i = 0; i < combined.size(); ++i) {
    if (!combined[i].fitness) throw Error("selection requires evaluated individuals");
    if (*combined[i].fitness > *combined[best].fitness) best = i;
  }
  std::vector<std::size_t> rest;
  rest.reserve(combined.size() - 1);
  for (std::size_t i = 0; i < combined.size(); ++i) {
    if (i != best) rest.push_back(i);
  }
  // Partial Fisher-Yates: the first n - 1 slots become a uniform sample.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t j = i + rng.index(rest.size() - i);
    std::swap(rest[i], rest[j]);
  }
  std::vector<Individual> out;
  out.reserve(n);
  out.push_back(std::move(combined[best]));
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(std::move(combined[rest[i]]));
  return out;
}

}  // namespace regevo
