#include "regevo/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <ostream>

#include "regevo/exchange.hpp"
#include "regevo/matcher.hpp"

namespace regevo {

std::string Individual::key() const {
  std::string out;
  for (const auto& r : rules) {
    out += serialize_rule(r);
    out += '\n';
  }
  return out;
}

namespace {

CompiledGroup compile_group(const OrExpression& group, const Lexicon& lexicon) {
  CompiledGroup out;
  out.ids.reserve(group.words.size());
  for (const auto& w : group.words) out.ids.push_back(lexicon.find(w));
  return out;
}

CompiledAd compile_ad(const AdExpression& ad, const Lexicon& lexicon) {
  return CompiledAd{compile_group(ad.left, lexicon), compile_group(ad.right, lexicon), ad.gap_min,
                    ad.gap_max};
}

}  // namespace

CompiledRule compile(const RegexRule& rule, const Lexicon& lexicon) {
  CompiledRule out;
  out.positive = compile_ad(rule.positive, lexicon);
  out.negatives.reserve(rule.negatives.size());
  for (const auto& n : rule.negatives) {
    CompiledNegative c;
    if (const auto* w = std::get_if<std::string>(&n)) {
      c.is_word = true;
      c.word = lexicon.find(*w);
    } else {
      c.is_word = false;
      c.ad = compile_ad(std::get<AdExpression>(n), lexicon);
    }
    out.negatives.push_back(std::move(c));
  }
  return out;
}

std::vector<CompiledRule> compile(std::span<const RegexRule> rules, const Lexicon& lexicon) {
  std::vector<CompiledRule> out;
  out.reserve(rules.size());
  for (const auto& r : rules) out.push_back(compile(r, lexicon));
  return out;
}

double precision(const ConfusionCounts& c) {
  const auto predicted = c.tp + c.fp;
  return predicted == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(predicted);
}

double recall(const ConfusionCounts& c) {
  const auto actual = c.tp + c.fn;
  return actual == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(actual);
}

double f_score(double p, double r, double beta) {
  const double b2 = beta * beta;
  const double denom = b2 * p + r;
  if (denom == 0.0) return 0.0;
  return (b2 + 1.0) * p * r / denom;
}

double f_score(const ConfusionCounts& c, double beta) {
  return f_score(precision(c), recall(c), beta);
}

SplitEvaluator::SplitEvaluator(const CategorySplit& split, const InvertedIndex& index)
    : split_(&split), index_(&index), positive_(split.corpus->size(), 0) {
  if (index.corpus_size() != split.corpus->size()) {
    throw Error("inverted index was built over a different corpus than the split");
  }
  for (std::size_t p : split.positive) positive_[p] = 1;
}

std::vector<std::uint32_t> SplitEvaluator::matched(std::span<const RegexRule> rules) const {
  const LabeledCorpus& corpus = *split_->corpus;
  std::vector<std::uint32_t> out, hits, merged;
  for (const auto& rule : rules) {
    const CompiledRule compiled = compile(rule, corpus.lexicon());
    hits.clear();
    for (std::uint32_t q : index_->candidates(compiled.positive.left.ids,
                                              compiled.positive.right.ids)) {
      if (compiled.matches(corpus[q].tokens)) hits.push_back(q);
    }
    if (hits.empty()) continue;
    if (out.empty()) {
      out.swap(hits);
      continue;
    }
    merged.clear();
    std::set_union(out.begin(), out.end(), hits.begin(), hits.end(), std::back_inserter(merged));
    out.swap(merged);
  }
  return out;
}

std::vector<std::uint32_t> SplitEvaluator::matched_exhaustive(
    std::span<const RegexRule> rules) const {
  const LabeledCorpus& corpus = *split_->corpus;
  const auto compiled = compile(rules, corpus.lexicon());
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 0; q < corpus.size(); ++q) {
    if (std::any_of(compiled.begin(), compiled.end(),
                    [&](const CompiledRule& r) { return r.matches(corpus[q].tokens); })) {
      out.push_back(q);
    }
  }
  return out;
}

ConfusionCounts SplitEvaluator::count(const std::vector<std::uint32_t>& matched) const {
  ConfusionCounts c;
  for (std::uint32_t q : matched) {
    if (positive_[q]) {
      ++c.tp;
    } else {
      ++c.fp;
    }
  }
  c.fn = split_->positive.size() - c.tp;
  c.tn = split_->negative.size() - c.fp;
  return c;
}

ConfusionCounts SplitEvaluator::evaluate(std::span<const RegexRule> rules) const {
  return count(matched(rules));
}

ConfusionCounts evaluate_vector(const RegexVector& vec, const CategorySplit& split,
                                const InvertedIndex& index) {
  return SplitEvaluator(split, index).evaluate(vec);
}

double fitness(Individual& ind, const SplitEvaluator& evaluator, double beta) {
  if (!ind.fitness) ind.fitness = f_score(evaluator.evaluate(ind.rules), beta);
  return *ind.fitness;
}

double fitness(Individual& ind, const CategorySplit& split, const InvertedIndex& index,
               double beta) {
  return fitness(ind, SplitEvaluator(split, index), beta);
}

ClassifyResult classify(std::span<const Token> text, std::span<const RegexVector> vectors) {
  ClassifyResult out;
  for (const auto& v : vectors) {
    if (match_vector(v, text)) out.matches.push_back(v.category);
  }
  if (!out.matches.empty()) out.category = out.matches.front();
  return out;
}

ClassifyResult classify(std::string_view raw_text, std::span<const RegexVector> vectors,
                        const Tokenizer& tokenizer) {
  const auto tokens = flatten(tokenizer(raw_text));
  return classify(std::span<const Token>(tokens), vectors);
}

std::vector<RegexVector> order_by_priority(std::vector<RegexVector> vectors,
                                           const LabeledCorpus& training) {
  std::vector<std::size_t> sizes(training.categories().size(), 0);
  for (const auto& q : training.inquiries()) ++sizes[q.label_index];
  auto size_of = [&](const RegexVector& v) -> long long {
    const auto idx = training.category_index(v.category);
    return idx ? static_cast<long long>(sizes[*idx]) : -1;
  };
  std::stable_sort(vectors.begin(), vectors.end(),
                   [&](const RegexVector& a, const RegexVector& b) {
                     const auto sa = size_of(a), sb = size_of(b);
                     if (sa != sb) return sa > sb;
                     return a.category < b.category;
                   });
  return vectors;
}

MetricsReport make_report(std::vector<std::pair<std::string, ConfusionCounts>> rows, double beta) {
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  MetricsReport report;
  report.beta = beta;
  for (auto& [category, c] : rows) {
    CategoryMetrics m;
    m.category = category;
    m.confusion = c;
    m.precision = precision(c);
    m.recall = recall(c);
    m.f_beta = f_score(m.precision, m.recall, beta);
    report.macro_precision += m.precision;
    report.macro_recall += m.recall;
    report.macro_f_beta += m.f_beta;
    report.per_category.push_back(std::move(m));
  }
  if (!report.per_category.empty()) {
    const auto n = static_cast<double>(report.per_category.size());
    report.macro_precision /= n;
    report.macro_recall /= n;
    report.macro_f_beta /= n;
  }
  return report;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_metrics_csv(std::ostream& out, const MetricsReport& report) {
  out << "category,tp,fp,fn,tn,precision,recall,f_beta\n";
  ConfusionCounts sum;
  for (const auto& m : report.per_category) {
    out << m.category << ',' << m.confusion.tp << ',' << m.confusion.fp << ',' << m.confusion.fn
        << ',' << m.confusion.tn << ',' << format_double(m.precision) << ','
        << format_double(m.recall) << ',' << format_double(m.f_beta) << '\n';
    sum.tp += m.confusion.tp;
    sum.fp += m.confusion.fp;
    sum.fn += m.confusion.fn;
    sum.tn += m.confusion.tn;
  }
  out << "macro," << sum.tp << ',' << sum.fp << ',' << sum.fn << ',' << sum.tn << ','
      << format_double(report.macro_precision) << ',' << format_double(report.macro_recall) << ','
      << format_double(report.macro_f_beta) << '\n';
}

}  // namespace regevo
