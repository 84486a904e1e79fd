#pragma once

// A probabilistic baseline that defers to regex vectors when unsure.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regevo/baseline.hpp"
#include "regevo/corpus.hpp"
#include "regevo/rule.hpp"

namespace regevo {

struct HybridConfig {
  double confidence_gate = 0.6;
  std::uint32_t top_k = 5;

  // Throws UsageError unless 0 <= gate <= 1 and top_k >= 1.
  void validate() const;
};

enum class Provenance { kBaseline, kRegexOverride, kBaselineFallback };
const char* to_string(Provenance p);

struct HybridDecision {
  std::string category;
  Provenance provenance = Provenance::kBaseline;
};

// Baseline answer when its top posterior reaches the gate; otherwise the
// first of the top_k categories, in posterior order, whose vector matches.
// Falls back to the baseline answer when none does.
HybridDecision hybrid_classify(std::span<const Token> tokens, const BaselineModel& model,
                               std::span<const RegexVector> vectors, const HybridConfig& cfg);
HybridDecision hybrid_classify(std::string_view raw_text, const BaselineModel& model,
                               std::span<const RegexVector> vectors, const HybridConfig& cfg,
                               const Tokenizer& tokenizer = reference_tokenizer());

struct HybridRow {
  std::string category;
  std::string solution;  // "baseline" or "baseline+regex"
  double precision = 0.0;
  double recall = 0.0;
};

struct HybridReport {
  std::vector<HybridRow> rows;  // by category id, baseline row first
  std::array<std::size_t, 3> provenance_counts{};  // indexed by Provenance
  std::size_t total = 0;
  std::size_t baseline_correct = 0;
  std::size_t hybrid_correct = 0;
  std::vector<std::string> baseline_predictions;  // per inquiry, corpus order
  std::vector<HybridDecision> hybrid_predictions;
};

HybridReport evaluate_hybrid(const BaselineModel& model, std::span<const RegexVector> vectors,
                             const LabeledCorpus& test, const HybridConfig& cfg);

// category,solution,precision,recall
void write_hybrid_csv(std::ostream& out, const HybridReport& report);
// tag,count
void write_provenance_csv(std::ostream& out, const HybridReport& report);

}  // namespace regevo
