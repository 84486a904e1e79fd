#include "regevo/features.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace regevo {

namespace {

std::uint64_t sentence_total(const LabeledCorpus& corpus, std::span<const std::size_t> inquiries) {
  std::uint64_t total = 0;
  for (std::size_t i : inquiries) total += corpus[i].sentences.size();
  return total;
}

}  // namespace

double avg_word_frequency(const LabeledCorpus& corpus, std::span<const std::size_t> inquiries,
                          std::string_view word) {
  const std::uint64_t sentences = sentence_total(corpus, inquiries);
  if (sentences == 0) throw CorpusError("empty category");
  const WordId id = corpus.lexicon().find(word);
  if (id == kUnknownWord) return 0.0;
  std::uint64_t occurrences = 0;
  for (std::size_t i : inquiries) {
    const auto& tokens = corpus[i].tokens;
    occurrences += static_cast<std::uint64_t>(std::count(tokens.begin(), tokens.end(), id));
  }
  return static_cast<double>(occurrences) / static_cast<double>(sentences);
}

double avg_word_frequency(const CategorySplit& split, std::string_view word) {
  return avg_word_frequency(*split.corpus, split.positive, word);
}

std::optional<std::size_t> WordDictionary::position(std::string_view word) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].word == word) return i;
  }
  return std::nullopt;
}

std::vector<std::string> WordDictionary::words() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.word);
  return out;
}

WordDictionary build_dictionary(const LabeledCorpus& corpus,
                                std::span<const std::size_t> inquiries, double threshold) {
  WordDictionary dict;
  const std::uint64_t sentences = sentence_total(corpus, inquiries);
  if (sentences == 0) return dict;
  std::vector<std::uint64_t> counts(corpus.lexicon().size(), 0);
  for (std::size_t i : inquiries) {
    for (WordId id : corpus[i].tokens) ++counts[id];
  }
  for (WordId id = 0; id < counts.size(); ++id) {
    if (counts[id] == 0) continue;
    const double avg = static_cast<double>(counts[id]) / static_cast<double>(sentences);
    if (avg > threshold) dict.entries.push_back({corpus.lexicon().word(id), id, counts[id], avg});
  }
  std::sort(dict.entries.begin(), dict.entries.end(),
            [](const DictionaryEntry& a, const DictionaryEntry& b) {
              if (a.corpus_frequency != b.corpus_frequency) {
                return a.corpus_frequency > b.corpus_frequency;
              }
              return a.word < b.word;
            });
  return dict;
}

WordDictionary build_feature_dictionary(const CategorySplit& split, double threshold) {
  return build_dictionary(*split.corpus, split.positive, threshold);
}

WordDictionary build_negative_dictionary(const CategorySplit& split, double threshold) {
  return build_dictionary(*split.corpus, split.negative, threshold);
}

CooccurrenceMatrix::CooccurrenceMatrix(std::vector<std::string> vocabulary)
    : vocabulary_(std::move(vocabulary)) {
  const std::size_t n = vocabulary_.size();
  counts_.assign(n * n, 0);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return vocabulary_[a] < vocabulary_[b]; });
  sorted_.reserve(n);
  for (auto i : order) sorted_.push_back(vocabulary_[i]);
  sorted_to_index_ = std::move(order);
}

std::optional<std::size_t> CooccurrenceMatrix::index_of(std::string_view word) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), word);
  if (it == sorted_.end() || *it != word) return std::nullopt;
  return sorted_to_index_[static_cast<std::size_t>(it - sorted_.begin())];
}

std::uint32_t CooccurrenceMatrix::count(std::string_view first, std::string_view second) const {
  const auto i = index_of(first);
  const auto j = index_of(second);
  if (!i || !j) return 0;
  return at(*i, *j);
}

CooccurrenceMatrix build_cooccurrence(const LabeledCorpus& corpus,
                                      std::span<const std::size_t> inquiries,
                                      std::vector<std::string> vocabulary) {
  CooccurrenceMatrix matrix(std::move(vocabulary));
  // Word id -> vocabulary slot.
  std::unordered_map<WordId, std::uint32_t> slot;
  for (std::size_t v = 0; v < matrix.size(); ++v) {
    const WordId id = corpus.lexicon().find(matrix.vocabulary()[v]);
    if (id != kUnknownWord) slot.emplace(id, static_cast<std::uint32_t>(v));
  }

  struct Seen {
    std::uint32_t slot;
    std::uint32_t first;
    std::uint32_t count;
  };
  std::vector<Seen> seen;
  std::vector<std::int64_t> seen_at(matrix.size(), -1);
  for (std::size_t q : inquiries) {
    seen.clear();
    const auto& tokens = corpus[q].tokens;
    for (std::uint32_t pos = 0; pos < tokens.size(); ++pos) {
      auto it = slot.find(tokens[pos]);
      if (it == slot.end()) continue;
      const std::uint32_t v = it->second;
      if (seen_at[v] < 0) {
        seen_at[v] = static_cast<std::int64_t>(seen.size());
        seen.push_back({v, pos, 1});
      } else {
        ++seen[static_cast<std::size_t>(seen_at[v])].count;
      }
    }
    // `seen` is already ordered by first occurrence.
    for (std::size_t a = 0; a < seen.size(); ++a) {
      if (seen[a].count >= 2) matrix.increment(seen[a].slot, seen[a].slot);
      for (std::size_t b = a + 1; b < seen.size(); ++b) matrix.increment(seen[a].slot, seen[b].slot);
    }
    for (const auto& s : seen) seen_at[s.slot] = -1;
  }
  return matrix;
}

}  // namespace regevo
