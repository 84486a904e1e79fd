#include "regevo/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>

#include <json.hpp>

#include "regevo/rng.hpp"

namespace regevo {

WordId Lexicon::intern(std::string_view word) {
  auto it = ids_.find(std::string(word));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<WordId>(words_.size());
  words_.emplace_back(word);
  ids_.emplace(words_.back(), id);
  return id;
}

WordId Lexicon::find(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnknownWord : it->second;
}

LabeledCorpus LabeledCorpus::from_records(const std::vector<CorpusRecord>& records,
                                          const Tokenizer& tokenizer) {
  if (records.empty()) throw CorpusError("empty corpus");
  LabeledCorpus corpus;
  std::set<std::string> labels;
  std::set<std::string_view> ids;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.label.empty()) {
      throw CorpusError("record " + std::to_string(i + 1) + " (id '" + r.id + "'): empty label");
    }
    if (!ids.insert(r.id).second) {
      throw CorpusError("record " + std::to_string(i + 1) + ": duplicate id '" + r.id + "'");
    }
    labels.insert(r.label);
  }
  corpus.categories_.assign(labels.begin(), labels.end());

  corpus.inquiries_.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    Inquiry q;
    q.id = r.id;
    q.raw_text = r.text;
    q.label = r.label;
    q.label_index = *corpus.category_index(r.label);
    q.sentences = tokenizer(r.text);
    if (q.sentences.empty()) {
      throw CorpusError("record " + std::to_string(i + 1) + " (id '" + r.id +
                        "'): text has no tokens");
    }
    for (const auto& s : q.sentences) {
      for (const auto& t : s) {
        if (t.text.empty()) {
          throw CorpusError("record " + std::to_string(i + 1) + ": tokenizer produced an empty token");
        }
        q.tokens.push_back(corpus.lexicon_.intern(t.text));
      }
    }
    corpus.inquiries_.push_back(std::move(q));
  }
  return corpus;
}

std::optional<std::uint32_t> LabeledCorpus::category_index(std::string_view category) const {
  auto it = std::lower_bound(categories_.begin(), categories_.end(), category);
  if (it == categories_.end() || *it != category) return std::nullopt;
  return static_cast<std::uint32_t>(it - categories_.begin());
}

std::size_t LabeledCorpus::category_size(std::string_view category) const {
  const auto idx = category_index(category);
  if (!idx) return 0;
  return static_cast<std::size_t>(std::count_if(
      inquiries_.begin(), inquiries_.end(),
      [&](const Inquiry& q) { return q.label_index == *idx; }));
}

LabeledCorpus LabeledCorpus::subset(std::span<const std::size_t> positions) const {
  LabeledCorpus out;
  out.categories_ = categories_;
  out.lexicon_ = lexicon_;
  out.inquiries_.reserve(positions.size());
  for (std::size_t p : positions) out.inquiries_.push_back(inquiries_.at(p));
  return out;
}

namespace {

struct NumberedRecords {
  std::vector<CorpusRecord> records;
  std::vector<std::size_t> lines;
};

NumberedRecords read_numbered(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open corpus file " + path);
  NumberedRecords out;
  std::string line;
  std::size_t line_no = 0;
  auto where = [&] { return path + ":" + std::to_string(line_no) + ": "; };
  auto field = [&](const nlohmann::json& obj, const char* name) -> std::string {
    auto it = obj.find(name);
    if (it == obj.end()) throw CorpusError(where() + "missing \"" + name + "\" field");
    if (!it->is_string()) throw CorpusError(where() + "\"" + name + "\" must be a string");
    return it->get<std::string>();
  };
  std::set<std::string> ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw CorpusError(where() + "malformed JSON: " + e.what());
    }
    if (!obj.is_object()) throw CorpusError(where() + "record must be a JSON object");
    CorpusRecord r{field(obj, "id"), field(obj, "text"), field(obj, "label")};
    if (r.label.empty()) throw CorpusError(where() + "empty label");
    if (!ids.insert(r.id).second) throw CorpusError(where() + "duplicate id '" + r.id + "'");
    out.records.push_back(std::move(r));
    out.lines.push_back(line_no);
  }
  if (out.records.empty()) throw CorpusError("empty corpus: " + path);
  return out;
}

}  // namespace

std::vector<CorpusRecord> read_corpus_records(const std::string& path) {
  return read_numbered(path).records;
}

LabeledCorpus ingest(const std::string& path, const Tokenizer& tokenizer) {
  auto numbered = read_numbered(path);
  for (std::size_t i = 0; i < numbered.records.size(); ++i) {
    if (tokenizer(numbered.records[i].text).empty()) {
      throw CorpusError(path + ":" + std::to_string(numbered.lines[i]) + ": text has no tokens");
    }
  }
  return LabeledCorpus::from_records(numbered.records, tokenizer);
}

void write_corpus_records(const std::string& path, const std::vector<CorpusRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CorpusError("cannot write corpus file " + path);
  for (const auto& r : records) {
    nlohmann::json obj{{"id", r.id}, {"text", r.text}, {"label", r.label}};
    out << obj.dump() << '\n';
  }
}

CategorySplit split_by_category(const LabeledCorpus& corpus, std::string_view category) {
  const auto idx = corpus.category_index(category);
  if (!idx) throw UsageError("unknown category '" + std::string(category) + "'");
  CategorySplit split;
  split.corpus = &corpus;
  split.category = std::string(category);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    (corpus[i].label_index == *idx ? split.positive : split.negative).push_back(i);
  }
  return split;
}

std::pair<LabeledCorpus, LabeledCorpus> train_test_split(const LabeledCorpus& corpus,
                                                         double train_ratio,
                                                         std::uint64_t seed) {
  if (!(train_ratio > 0.0 && train_ratio < 1.0)) {
    throw UsageError("split ratio must lie in (0, 1)");
  }
  std::vector<std::vector<std::size_t>> by_label(corpus.categories().size());
  for (std::size_t i = 0; i < corpus.size(); ++i) by_label[corpus[i].label_index].push_back(i);

  std::vector<std::size_t> train, test;
  for (std::size_t c = 0; c < by_label.size(); ++c) {
    auto& members = by_label[c];
    Rng rng(mix_seed(seed, corpus.categories()[c]));
    rng.shuffle(members.begin(), members.end());
    const auto n_train = static_cast<std::size_t>(
        std::llround(train_ratio * static_cast<double>(members.size())));
    train.insert(train.end(), members.begin(), members.begin() + static_cast<long>(n_train));
    test.insert(test.end(), members.begin() + static_cast<long>(n_train), members.end());
  }
  std::sort(train.begin(), train.end());
  std::sort(test.begin(), test.end());
  return {corpus.subset(train), corpus.subset(test)};
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open " + path);
  const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return fnv1a64(bytes);
}

}  // namespace regevo
