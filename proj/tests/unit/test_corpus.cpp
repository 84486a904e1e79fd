#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "regevo/corpus.hpp"
#include "support.hpp"

using namespace regevo;
namespace fs = std::filesystem;

namespace {
std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "regevo_unit_corpus";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p, std::ios::binary) << content;
  return p.string();
}

std::string error_of(const std::string& path) {
  try {
    ingest(path);
  } catch (const CorpusError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_CASE("ingest a small file") {
  const auto path = write_temp("ok.jsonl",
                               "{\"id\": \"1\", \"text\": \"Cannot sleep at night.\", \"label\": "
                               "\"insomnia\"}\n\n{\"id\": \"2\", \"text\": \"Cough and fever.\", "
                               "\"label\": \"pneumonia\"}\n");
  const LabeledCorpus c = ingest(path);
  CHECK(c.size() == 2);
  CHECK(c.categories() == std::vector<std::string>{"insomnia", "pneumonia"});
  CHECK(c[0].label == "insomnia");
  CHECK(c[1].label_index == 1);
  CHECK(c[0].sentences.size() == 1);
  CHECK(c[0].tokens.size() == 4);
  CHECK(c.lexicon().word(c[1].tokens[0]) == "cough");
}

TEST_CASE("ingest errors name the line") {
  CHECK(error_of(write_temp("nolabel.jsonl", "{\"id\":\"1\",\"text\":\"a\",\"label\":\"x\"}\n"
                                             "{\"id\":\"2\",\"text\":\"b\"}\n"))
            .find(":2:") != std::string::npos);
  CHECK(error_of(write_temp("badjson.jsonl", "{\"id\":\"1\",\"text\":\"a\",\"label\":\"x\"\n"))
            .find(":1:") != std::string::npos);
  CHECK(error_of(write_temp("dup.jsonl", "{\"id\":\"1\",\"text\":\"a\",\"label\":\"x\"}\n"
                                         "{\"id\":\"1\",\"text\":\"b\",\"label\":\"y\"}\n"))
            .find(":2:") != std::string::npos);
  CHECK(error_of(write_temp("emptylabel.jsonl", "{\"id\":\"1\",\"text\":\"a\",\"label\":\"\"}\n"))
            .find(":1:") != std::string::npos);
  CHECK(error_of(write_temp("notext.jsonl", "{\"id\":\"1\",\"text\":\"...\",\"label\":\"x\"}\n"))
            .find(":1:") != std::string::npos);
  CHECK(error_of(write_temp("empty.jsonl", "")).find("empty corpus") != std::string::npos);
  CHECK_THROWS(ingest("/nonexistent/regevo/corpus.jsonl"));
}

TEST_CASE("records round-trip through the file format") {
  const std::vector<CorpusRecord> records{{"a", "x \"quoted\" 发烧", "c1"}, {"b", "y", "c2"}};
  const auto path = write_temp("rt.jsonl", "");
  write_corpus_records(path, records);
  const auto back = read_corpus_records(path);
  REQUIRE(back.size() == 2);
  CHECK(back[0].text == records[0].text);
  CHECK(back[1].label == "c2");
}

TEST_CASE("split_by_category partitions") {
  std::vector<std::string> texts, labels;
  for (int i = 0; i < 10; ++i) {
    texts.push_back("w" + std::to_string(i));
    labels.push_back(i < 4 ? "c" : "d");
  }
  const auto corpus = regevo::testing::corpus_of(texts, labels);
  const auto split = split_by_category(corpus, "c");
  CHECK(split.positive.size() == 4);
  CHECK(split.negative.size() == 6);
  CHECK_THROWS_AS(split_by_category(corpus, "zzz"), UsageError);

  const auto single = regevo::testing::corpus_of({"a", "b"}, {"only", "only"});
  CHECK(split_by_category(single, "only").negative.empty());
}

TEST_CASE("train_test_split is stratified and seeded") {
  std::vector<std::string> texts, labels;
  for (int i = 0; i < 100; ++i) {
    texts.push_back("w" + std::to_string(i));
    labels.push_back(i % 4 == 0 ? "small" : "large");
  }
  const auto corpus = regevo::testing::corpus_of(texts, labels);
  const auto [train, test] = train_test_split(corpus, 0.8, 5);
  CHECK(train.size() + test.size() == 100);
  CHECK(train.category_size("small") == 20);
  CHECK(train.category_size("large") == 60);
  CHECK(test.category_size("small") == 5);
  const auto [train2, test2] = train_test_split(corpus, 0.8, 5);
  for (std::size_t i = 0; i < train.size(); ++i) CHECK(train[i].id == train2[i].id);
  const auto [train3, test3] = train_test_split(corpus, 0.8, 6);
  bool differs = false;
  for (std::size_t i = 0; i < train.size(); ++i) differs |= train[i].id != train3[i].id;
  CHECK(differs);
  // Word ids stay shared with the parent corpus.
  CHECK(train.lexicon().size() == corpus.lexicon().size());
}

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}
