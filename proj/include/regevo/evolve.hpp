#pragma once

// Per-category evolution loop and the artifacts it runs against.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "regevo/corpus.hpp"
#include "regevo/features.hpp"
#include "regevo/gp_config.hpp"
#include "regevo/individual.hpp"
#include "regevo/inverted_index.hpp"
#include "regevo/operators.hpp"

namespace regevo {

// Everything evolution needs for one category of a training corpus. Holds a
// pointer to the corpus, which must outlive it.
struct CategoryArtifacts {
  CategorySplit split;
  WordDictionary positive;
  WordDictionary negative;
  CooccurrenceMatrix cooccurrence;  // over the positive dictionary, counted on Q_c
  std::shared_ptr<const InvertedIndex> index;

  WordSources sources() const { return {&positive, &negative, &cooccurrence}; }
};

// Throws CorpusError on an empty positive set or an empty feature dictionary.
// Pass `index` to share one index across the categories of a corpus.
CategoryArtifacts build_category_artifacts(const LabeledCorpus& corpus, const std::string& category,
                                           double feature_threshold,
                                           std::shared_ptr<const InvertedIndex> index = nullptr);

struct GenerationRecord {
  std::uint32_t generation = 0;
  double best_f = 0.0;
  double avg_f = 0.0;
  double mean_rule_count = 0.0;
};

enum class StopReason { kStalled, kMaxGenerations };
const char* to_string(StopReason reason);

struct EvolutionResult {
  Individual best;
  std::vector<GenerationRecord> history;  // generation 0 is the initial population
  StopReason stop = StopReason::kMaxGenerations;
};

struct EvolveObserver {
  // Every individual the run creates, before it is evaluated.
  std::function<void(const Individual&)> on_created;
  std::function<void(const GenerationRecord&)> on_generation;
};

EvolutionResult evolve(const CategoryArtifacts& artifacts, const GpConfig& cfg,
                       const EvolveObserver& observer = {},
                       const Tokenizer& tokenizer = reference_tokenizer());

// generation,best_f,avg_f,population_rule_count_mean
void write_history_csv(std::ostream& out, const std::vector<GenerationRecord>& history);

}  // namespace regevo
