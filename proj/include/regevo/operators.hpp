#pragma once

// Genetic operators over rule-vector individuals. Every operator maps valid
// individuals to valid individuals.

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "regevo/features.hpp"
#include "regevo/gp_config.hpp"
#include "regevo/individual.hpp"
#include "regevo/rng.hpp"
#include "regevo/tokenizer.hpp"

namespace regevo {

struct Population {
  std::vector<Individual> individuals;
  std::uint32_t generation = 0;
  std::vector<double> best_fitness_history;
};

// Logistic(speed * r) with r = (f_max - f) / (f_max - f_avg), and r = 1 when
// f_max == f_avg. Lower fitness gets a higher operator probability.
double operator_probability(double f, double f_max, double f_avg, double speed);

// Word guidance for mutating one AD operand.
enum class OperandSlot { kLeft, kRight };

// Selection probabilities over `dict` for replacing a word in the `slot`
// operand whose other operand is `counterpart`. A left-slot word must precede
// the counterpart, so its weight sums M(w, c) over counterpart words c; a
// right-slot word sums M(c, w). Uniform when every weight is zero.
std::vector<double> cooccurrence_word_distribution(OperandSlot slot,
                                                   const OrExpression& counterpart,
                                                   const WordDictionary& dict,
                                                   const CooccurrenceMatrix& matrix);

// Everything mutation and seeding draw words from.
struct WordSources {
  const WordDictionary* positive = nullptr;
  const WordDictionary* negative = nullptr;
  const CooccurrenceMatrix* cooccurrence = nullptr;
};

// NOT(AD(OR(word), OR(word), {0, d}), [top negative word]) with d drawn from
// the configured initial gap range. No negative when the negative dictionary
// is empty.
RegexRule seed_rule(const std::string& word, const WordDictionary& negative,
                    const GpConfig& cfg, Rng& rng);

// Name words found in the positive dictionary (deduplicated, in name order)
// seed the first individuals; the most frequent remaining dictionary words
// seed the rest, cycling when the dictionary runs out.
Population initialize_population(std::string_view category_name, const WordSources& words,
                                 const GpConfig& cfg, Rng& rng,
                                 const Tokenizer& tokenizer = reference_tokenizer());

// The crossover points two parents share.
struct CrossoverSlot {
  enum class Kind { kRule, kLeftGroup, kRightGroup, kNegativeSuffix };
  Kind kind = Kind::kRule;
  std::size_t rule = 0;
  std::size_t cut = 0;  // kNegativeSuffix: negatives from `cut` on are exchanged

  friend bool operator==(const CrossoverSlot&, const CrossoverSlot&) = default;
};

std::vector<CrossoverSlot> crossover_slots(const Individual& a, const Individual& b);
std::pair<Individual, Individual> apply_crossover(const Individual& a, const Individual& b,
                                                  const CrossoverSlot& slot);
// Single-point crossover at one uniformly chosen shared slot.
std::pair<Individual, Individual> crossover(const Individual& a, const Individual& b, Rng& rng);

enum class MutationKind { kShrink, kGap, kPositiveWord, kNegativeWord };

// Applies one mutation of the given kind, or returns false (leaving `ind`
// untouched) when the kind cannot apply. kNegativeWord treats a rule's empty
// negative part as one site and fills it with a sampled word.
bool mutate_with(Individual& ind, MutationKind kind, const WordSources& words, Rng& rng);
// Draws kinds uniformly, re-drawing among the untried ones when a kind does
// not apply. Returns the input unchanged when nothing applies.
Individual mutate(const Individual& ind, const WordSources& words, Rng& rng);

// Appends a seed rule over a random positive-dictionary word to every
// individual, each drawing its own word.
void insert_rules(std::vector<Individual>& individuals, const WordSources& words,
                  const GpConfig& cfg, Rng& rng);
// Applies insert_rules when `generation` is a positive multiple of the
// insertion period; returns whether it did.
bool insert_rule_schedule(Population& pop, const WordSources& words, const GpConfig& cfg,
                          Rng& rng);

// Keeps the fittest individual (lowest index on ties) and n - 1 others drawn
// uniformly without replacement. All fitness values must be set.
std::vector<Individual> select_next_generation(std::vector<Individual> combined, std::size_t n,
                                               Rng& rng);

}  // namespace regevo
