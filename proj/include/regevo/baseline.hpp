#pragma once

// Multinomial bag-of-words classifier with additive smoothing.

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "regevo/corpus.hpp"
#include "regevo/token.hpp"

namespace regevo {

struct Posterior {
  std::string category;
  double probability = 0.0;
};

class BaselineModel {
 public:
  const std::vector<std::string>& categories() const { return categories_; }
  std::size_t vocabulary_size() const { return vocabulary_.size(); }
  double log_prior(std::size_t category) const { return log_priors_[category]; }
  // log P(word | category); smoothed mass for words outside the vocabulary.
  double log_likelihood(std::size_t category, std::string_view word) const;

  // Normalized posterior, highest first, ties by category id. Words outside
  // the training vocabulary are ignored.
  std::vector<Posterior> predict(std::span<const Token> tokens) const;
  std::vector<Posterior> predict(std::string_view raw_text,
                                 const Tokenizer& tokenizer = reference_tokenizer()) const;

 private:
  friend BaselineModel train_baseline(const LabeledCorpus&, double);

  std::vector<std::string> categories_;
  std::vector<double> log_priors_;
  std::unordered_map<std::string, std::size_t> vocabulary_;
  std::vector<std::vector<double>> log_likelihoods_;  // [category][word]
  std::vector<double> log_unseen_;                    // per category, count 0
};

// Throws CorpusError with fewer than two categories or a category without
// tokens.
BaselineModel train_baseline(const LabeledCorpus& corpus, double alpha = 1.0);

}  // namespace regevo
