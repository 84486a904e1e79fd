#pragma once

// Word statistics that drive feature selection and mutation guidance.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regevo/corpus.hpp"

namespace regevo {

// Average word frequency of `word` over a set of inquiries: its total number
// of occurrences divided by the total number of sentences.
double avg_word_frequency(const LabeledCorpus& corpus, std::span<const std::size_t> inquiries,
                          std::string_view word);
// Same over the category's positive set. Throws CorpusError("empty category")
// when the positive set has no sentences.
double avg_word_frequency(const CategorySplit& split, std::string_view word);

struct DictionaryEntry {
  std::string word;
  WordId id = kUnknownWord;
  std::uint64_t corpus_frequency = 0;  // occurrences within the scanned inquiries
  double avg_word_frequency = 0.0;
};

// Entries sorted by corpus_frequency descending, ties by word.
struct WordDictionary {
  std::vector<DictionaryEntry> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  const DictionaryEntry& operator[](std::size_t i) const { return entries[i]; }
  std::optional<std::size_t> position(std::string_view word) const;
  bool contains(std::string_view word) const { return position(word).has_value(); }
  std::vector<std::string> words() const;
};

// Words of `inquiries` whose average word frequency is strictly above
// `threshold`.
WordDictionary build_dictionary(const LabeledCorpus& corpus,
                                std::span<const std::size_t> inquiries, double threshold);

// Positive feature dictionary of a category.
WordDictionary build_feature_dictionary(const CategorySplit& split, double threshold);
// Frequency-ranked dictionary over the category's negative set.
WordDictionary build_negative_dictionary(const CategorySplit& split, double threshold = 0.0);

// Ordered pair counts over a fixed vocabulary.
//
// at(i, j), i != j: number of inquiries containing both words where the first
// occurrence of i comes before the first occurrence of j.
// at(i, i): number of inquiries where i occurs at least twice.
class CooccurrenceMatrix {
 public:
  CooccurrenceMatrix() = default;
  explicit CooccurrenceMatrix(std::vector<std::string> vocabulary);

  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  std::size_t size() const { return vocabulary_.size(); }
  std::optional<std::size_t> index_of(std::string_view word) const;

  std::uint32_t at(std::size_t i, std::size_t j) const { return counts_[i * size() + j]; }
  // Zero when either word is outside the vocabulary.
  std::uint32_t count(std::string_view first, std::string_view second) const;

  void increment(std::size_t i, std::size_t j) { ++counts_[i * size() + j]; }

  friend bool operator==(const CooccurrenceMatrix&, const CooccurrenceMatrix&) = default;

 private:
  std::vector<std::string> vocabulary_;
  std::vector<std::string> sorted_;            // for lookup
  std::vector<std::uint32_t> sorted_to_index_;
  std::vector<std::uint32_t> counts_;
};

CooccurrenceMatrix build_cooccurrence(const LabeledCorpus& corpus,
                                      std::span<const std::size_t> inquiries,
                                      std::vector<std::string> vocabulary);

}  // namespace regevo
