#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "regevo/corpus.hpp"

namespace regevo {

// word id -> sorted positions (within the indexed corpus) of the inquiries
// containing that word, each position listed once.
class InvertedIndex {
 public:
  InvertedIndex() = default;
  explicit InvertedIndex(const LabeledCorpus& corpus);

  std::span<const std::uint32_t> postings(WordId id) const;
  std::span<const std::uint32_t> postings(std::string_view word) const;

  // Sorted union of the postings of `ids`.
  std::vector<std::uint32_t> any_of(std::span<const WordId> ids) const;
  // Inquiries that contain a word of `left` and a word of `right`; the only
  // places an AD over these groups can match.
  std::vector<std::uint32_t> candidates(std::span<const WordId> left,
                                        std::span<const WordId> right) const;

  std::size_t corpus_size() const { return corpus_size_; }
  const Lexicon* lexicon() const { return lexicon_; }

 private:
  std::vector<std::vector<std::uint32_t>> postings_;
  std::size_t corpus_size_ = 0;
  const Lexicon* lexicon_ = nullptr;
};

inline InvertedIndex build_inverted_index(const LabeledCorpus& corpus) {
  return InvertedIndex(corpus);
}

}  // namespace regevo
