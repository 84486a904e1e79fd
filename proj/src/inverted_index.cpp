#include "regevo/inverted_index.hpp"

#include <algorithm>
#include <iterator>

namespace regevo {

InvertedIndex::InvertedIndex(const LabeledCorpus& corpus)
    : postings_(corpus.lexicon().size()), corpus_size_(corpus.size()), lexicon_(&corpus.lexicon()) {
  for (std::uint32_t q = 0; q < corpus.size(); ++q) {
    for (WordId id : corpus[q].tokens) {
      auto& list = postings_[id];
      if (list.empty() || list.back() != q) list.push_back(q);
    }
  }
}

std::span<const std::uint32_t> InvertedIndex::postings(WordId id) const {
  if (id >= postings_.size()) return {};
  return postings_[id];
}

std::span<const std::uint32_t> InvertedIndex::postings(std::string_view word) const {
  if (!lexicon_) return {};
  return postings(lexicon_->find(word));
}

std::vector<std::uint32_t> InvertedIndex::any_of(std::span<const WordId> ids) const {
  std::vector<std::uint32_t> out;
  for (WordId id : ids) {
    const auto list = postings(id);
    if (out.empty()) {
      out.assign(list.begin(), list.end());
      continue;
    }
    std::vector<std::uint32_t> merged;
    merged.reserve(out.size() + list.size());
    std::set_union(out.begin(), out.end(), list.begin(), list.end(), std::back_inserter(merged));
    out.swap(merged);
  }
  return out;
}

std::vector<std::uint32_t> InvertedIndex::candidates(std::span<const WordId> left,
                                                     std::span<const WordId> right) const {
  const auto l = any_of(left);
  if (l.empty()) return {};
  const auto r = any_of(right);
  std::vector<std::uint32_t> out;
  std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
  return out;
}

}  // namespace regevo
