#include "regevo/hybrid.hpp"

#include <algorithm>
#include <ostream>

#include "regevo/error.hpp"
#include "regevo/evaluation.hpp"
#include "regevo/matcher.hpp"

namespace regevo {

void HybridConfig::validate() const {
  if (!(confidence_gate >= 0.0 && confidence_gate <= 1.0)) {
    throw UsageError("confidence_gate must lie in [0, 1]");
  }
  if (top_k < 1) throw UsageError("top_k must be at least 1");
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kBaseline:
      return "baseline";
    case Provenance::kRegexOverride:
      return "regex-override";
    case Provenance::kBaselineFallback:
      return "baseline-fallback";
  }
  return "unknown";
}

HybridDecision hybrid_classify(std::span<const Token> tokens, const BaselineModel& model,
                               std::span<const RegexVector> vectors, const HybridConfig& cfg) {
  const auto posterior = model.predict(tokens);
  const Posterior& top = posterior.front();
  if (top.probability >= cfg.confidence_gate) return {top.category, Provenance::kBaseline};
  const std::size_t k = std::min<std::size_t>(cfg.top_k, posterior.size());
  for (std::size_t i = 0; i < k; ++i) {
    const auto it = std::find_if(vectors.begin(), vectors.end(), [&](const RegexVector& v) {
      return v.category == posterior[i].category;
    });
    if (it != vectors.end() && match_vector(*it, tokens)) {
      return {posterior[i].category, Provenance::kRegexOverride};
    }
  }
  return {top.category, Provenance::kBaselineFallback};
}

HybridDecision hybrid_classify(std::string_view raw_text, const BaselineModel& model,
                               std::span<const RegexVector> vectors, const HybridConfig& cfg,
                               const Tokenizer& tokenizer) {
  const auto tokens = flatten(tokenizer(raw_text));
  return hybrid_classify(std::span<const Token>(tokens), model, vectors, cfg);
}

namespace {

HybridRow tally(const std::string& category, const char* solution, const LabeledCorpus& test,
                const std::vector<std::string>& predicted) {
  ConfusionCounts c;
  for (std::size_t i = 0; i < test.size(); ++i) {
    const bool truth = test[i].label == category;
    const bool guess = predicted[i] == category;
    if (truth && guess) ++c.tp;
    if (!truth && guess) ++c.fp;
    if (truth && !guess) ++c.fn;
    if (!truth && !guess) ++c.tn;
  }
  return {category, solution, precision(c), recall(c)};
}

}  // namespace

HybridReport evaluate_hybrid(const BaselineModel& model, std::span<const RegexVector> vectors,
                             const LabeledCorpus& test, const HybridConfig& cfg) {
  cfg.validate();
  HybridReport report;
  report.total = test.size();
  std::vector<std::string> hybrid;
  for (const auto& q : test.inquiries()) {
    const auto tokens = q.flat_tokens();
    const auto posterior = model.predict(std::span<const Token>(tokens));
    report.baseline_predictions.push_back(posterior.front().category);
    auto d = hybrid_classify(std::span<const Token>(tokens), model, vectors, cfg);
    ++report.provenance_counts[static_cast<std::size_t>(d.provenance)];
    if (posterior.front().category == q.label) ++report.baseline_correct;
    if (d.category == q.label) ++report.hybrid_correct;
    hybrid.push_back(d.category);
    report.hybrid_predictions.push_back(std::move(d));
  }
  for (const auto& category : test.categories()) {
    report.rows.push_back(tally(category, "baseline", test, report.baseline_predictions));
    report.rows.push_back(tally(category, "baseline+regex", test, hybrid));
  }
  return report;
}

void write_hybrid_csv(std::ostream& out, const HybridReport& report) {
  out << "category,solution,precision,recall\n";
  for (const auto& r : report.rows) {
    out << r.category << ',' << r.solution << ',' << format_double(r.precision) << ','
        << format_double(r.recall) << '\n';
  }
}

void write_provenance_csv(std::ostream& out, const HybridReport& report) {
  out << "tag,count\n";
  for (std::size_t i = 0; i < report.provenance_counts.size(); ++i) {
    out << to_string(static_cast<Provenance>(i)) << ',' << report.provenance_counts[i] << '\n';
  }
}

}  // namespace regevo
