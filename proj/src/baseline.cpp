#include "regevo/baseline.hpp"

#include <algorithm>
#include <cmath>

namespace regevo {

BaselineModel train_baseline(const LabeledCorpus& corpus, double alpha) {
  if (!(alpha > 0.0)) throw UsageError("smoothing alpha must be positive");
  const auto& cats = corpus.categories();
  if (cats.size() < 2) throw CorpusError("baseline needs at least two categories");

  BaselineModel m;
  m.categories_ = cats;
  std::vector<std::size_t> docs(cats.size(), 0);
  std::vector<std::vector<double>> counts(cats.size());
  std::vector<double> totals(cats.size(), 0.0);
  for (const auto& q : corpus.inquiries()) {
    ++docs[q.label_index];
    for (const auto& s : q.sentences) {
      for (const auto& t : s) {
        auto [it, fresh] = m.vocabulary_.emplace(t.text, m.vocabulary_.size());
        auto& row = counts[q.label_index];
        if (row.size() <= it->second) row.resize(it->second + 1, 0.0);
        row[it->second] += 1.0;
        totals[q.label_index] += 1.0;
      }
    }
  }
  const auto v = static_cast<double>(m.vocabulary_.size());
  for (std::size_t c = 0; c < cats.size(); ++c) {
    if (totals[c] == 0.0) throw CorpusError("category '" + cats[c] + "' has no tokens");
    m.log_priors_.push_back(std::log(static_cast<double>(docs[c]) /
                                     static_cast<double>(corpus.size())));
    const double denom = std::log(totals[c] + alpha * v);
    auto& row = counts[c];
    row.resize(m.vocabulary_.size(), 0.0);
    std::vector<double> ll(row.size());
    for (std::size_t w = 0; w < row.size(); ++w) ll[w] = std::log(row[w] + alpha) - denom;
    m.log_likelihoods_.push_back(std::move(ll));
    m.log_unseen_.push_back(std::log(alpha) - denom);
  }
  return m;
}

double BaselineModel::log_likelihood(std::size_t category, std::string_view word) const {
  auto it = vocabulary_.find(std::string(word));
  if (it == vocabulary_.end()) return log_unseen_[category];
  return log_likelihoods_[category][it->second];
}

std::vector<Posterior> BaselineModel::predict(std::span<const Token> tokens) const {
  std::vector<double> score = log_priors_;
  for (const auto& t : tokens) {
    auto it = vocabulary_.find(t.text);
    if (it == vocabulary_.end()) continue;
    for (std::size_t c = 0; c < score.size(); ++c) score[c] += log_likelihoods_[c][it->second];
  }
  const double top = *std::max_element(score.begin(), score.end());
  double z = 0.0;
  for (double s : score) z += std::exp(s - top);
  std::vector<Posterior> out;
  out.reserve(score.size());
  for (std::size_t c = 0; c < score.size(); ++c) {
    out.push_back({categories_[c], std::exp(score[c] - top) / z});
  }
  std::stable_sort(out.begin(), out.end(), [](const Posterior& a, const Posterior& b) {
    return a.probability > b.probability;
  });
  return out;
}

std::vector<Posterior> BaselineModel::predict(std::string_view raw_text,
                                              const Tokenizer& tokenizer) const {
  const auto tokens = flatten(tokenizer(raw_text));
  return predict(std::span<const Token>(tokens));
}

}  // namespace regevo
