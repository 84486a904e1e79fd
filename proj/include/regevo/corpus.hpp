#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "regevo/error.hpp"
#include "regevo/token.hpp"
#include "regevo/tokenizer.hpp"

namespace regevo {

class CorpusError : public Error {
 public:
  using Error::Error;
};

using WordId = std::uint32_t;
inline constexpr WordId kUnknownWord = ~WordId{0};

// Interns token strings to dense ids.
class Lexicon {
 public:
  WordId intern(std::string_view word);
  WordId find(std::string_view word) const;  // kUnknownWord when absent
  const std::string& word(WordId id) const { return words_[id]; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_map<std::string, WordId> ids_;
  std::vector<std::string> words_;
};

struct CorpusRecord {
  std::string id;
  std::string text;
  std::string label;
};

struct Inquiry {
  std::string id;
  std::string raw_text;
  std::vector<Sentence> sentences;
  std::string label;
  std::uint32_t label_index = 0;  // position of `label` in LabeledCorpus::categories()
  std::vector<WordId> tokens;     // all sentences concatenated

  std::vector<Token> flat_tokens() const { return flatten(sentences); }
};

class LabeledCorpus {
 public:
  // Tokenizes and labels every record. Throws CorpusError on empty input,
  // empty labels, duplicate ids, or text without any token.
  static LabeledCorpus from_records(const std::vector<CorpusRecord>& records,
                                    const Tokenizer& tokenizer = reference_tokenizer());

  const std::vector<Inquiry>& inquiries() const { return inquiries_; }
  const Inquiry& operator[](std::size_t i) const { return inquiries_[i]; }
  std::size_t size() const { return inquiries_.size(); }

  // Sorted category ids.
  const std::vector<std::string>& categories() const { return categories_; }
  std::optional<std::uint32_t> category_index(std::string_view category) const;
  bool has_category(std::string_view category) const {
    return category_index(category).has_value();
  }
  std::size_t category_size(std::string_view category) const;

  const Lexicon& lexicon() const { return lexicon_; }

  // Inquiries at `positions`, in the given order, sharing this corpus's
  // category list and word ids.
  LabeledCorpus subset(std::span<const std::size_t> positions) const;

 private:
  std::vector<Inquiry> inquiries_;
  std::vector<std::string> categories_;
  Lexicon lexicon_;
};

// Reads the JSON-lines corpus format: {"id": str, "text": str, "label": str}.
// Blank lines are skipped. Errors name the 1-based line number.
LabeledCorpus ingest(const std::string& path, const Tokenizer& tokenizer = reference_tokenizer());
std::vector<CorpusRecord> read_corpus_records(const std::string& path);
void write_corpus_records(const std::string& path, const std::vector<CorpusRecord>& records);

// Positions of one category's inquiries (Q_c) and of all others.
struct CategorySplit {
  const LabeledCorpus* corpus = nullptr;
  std::string category;
  std::vector<std::size_t> positive;
  std::vector<std::size_t> negative;
};

CategorySplit split_by_category(const LabeledCorpus& corpus, std::string_view category);

// Stratified train/test partition: each label's inquiries are shuffled with
// `seed` and the first round(ratio * n) go to the training side.
std::pair<LabeledCorpus, LabeledCorpus> train_test_split(const LabeledCorpus& corpus,
                                                         double train_ratio,
                                                         std::uint64_t seed);

// FNV-1a over raw bytes; identifies corpus files in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t hash_file(const std::string& path);

}  // namespace regevo
