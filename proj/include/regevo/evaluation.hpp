#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regevo/compiled_rule.hpp"
#include "regevo/corpus.hpp"
#include "regevo/individual.hpp"
#include "regevo/inverted_index.hpp"
#include "regevo/rule.hpp"

namespace regevo {

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const { return tp + fp + fn + tn; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

// 0 when nothing was predicted positive.
double precision(const ConfusionCounts& c);
// 0 when there are no positives.
double recall(const ConfusionCounts& c);

// F-beta: (beta^2 + 1) P R / (beta^2 P + R), and 0 when the denominator is 0.
double f_score(double precision, double recall, double beta);
double f_score(const ConfusionCounts& c, double beta);

// Binary evaluation of rule lists against one category split. Holds the
// positive mask so repeated fitness calls stay cheap. The split must refer to
// the corpus the index was built over. Thread-safe for concurrent `evaluate`.
class SplitEvaluator {
 public:
  SplitEvaluator(const CategorySplit& split, const InvertedIndex& index);

  ConfusionCounts evaluate(std::span<const RegexRule> rules) const;
  ConfusionCounts evaluate(const RegexVector& vec) const { return evaluate(vec.rules); }

  // Sorted corpus positions matched by any rule, found through the index.
  std::vector<std::uint32_t> matched(std::span<const RegexRule> rules) const;
  // Same by scanning every inquiry; reference for `matched`.
  std::vector<std::uint32_t> matched_exhaustive(std::span<const RegexRule> rules) const;

  const CategorySplit& split() const { return *split_; }

 private:
  ConfusionCounts count(const std::vector<std::uint32_t>& matched) const;

  const CategorySplit* split_;
  const InvertedIndex* index_;
  std::vector<char> positive_;
};

ConfusionCounts evaluate_vector(const RegexVector& vec, const CategorySplit& split,
                                const InvertedIndex& index);

// F-beta of the individual's rules on the split. Returns the cached value
// when present, otherwise computes and stores it.
double fitness(Individual& ind, const SplitEvaluator& evaluator, double beta);
double fitness(Individual& ind, const CategorySplit& split, const InvertedIndex& index,
               double beta);

struct ClassifyResult {
  std::optional<std::string> category;  // first match in priority order
  std::vector<std::string> matches;     // every matching category, same order
};

// `vectors` must already be in priority order.
ClassifyResult classify(std::span<const Token> text, std::span<const RegexVector> vectors);
ClassifyResult classify(std::string_view raw_text, std::span<const RegexVector> vectors,
                        const Tokenizer& tokenizer = reference_tokenizer());

// Default priority: descending training size, ties by category id. Vectors
// for categories absent from the corpus go last.
std::vector<RegexVector> order_by_priority(std::vector<RegexVector> vectors,
                                           const LabeledCorpus& training);

struct CategoryMetrics {
  std::string category;
  ConfusionCounts confusion;
  double precision = 0.0;
  double recall = 0.0;
  double f_beta = 0.0;
};

// Per-category rows sorted by category id; macro values are unweighted means.
struct MetricsReport {
  double beta = 1.0;
  std::vector<CategoryMetrics> per_category;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f_beta = 0.0;
};

MetricsReport make_report(std::vector<std::pair<std::string, ConfusionCounts>> rows, double beta);

// category,tp,fp,fn,tn,precision,recall,f_beta with a final `macro` row.
void write_metrics_csv(std::ostream& out, const MetricsReport& report);

// Shortest round-trip decimal text for a double.
std::string format_double(double value);

}  // namespace regevo
