#include <doctest.h>

#include "regevo/features.hpp"
#include "support.hpp"

using namespace regevo;
using regevo::testing::corpus_of;

TEST_CASE("average word frequency divides by sentences") {
  const auto corpus = corpus_of({"fever. cough.", "fever fever.", "headache."}, {"c", "c", "d"});
  const auto split = split_by_category(corpus, "c");
  CHECK(avg_word_frequency(split, "fever") == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(avg_word_frequency(split, "cough") == doctest::Approx(1.0 / 3.0));
  CHECK(avg_word_frequency(split, "headache") == 0.0);
  CHECK(avg_word_frequency(split, "absent") == 0.0);

  const auto one = corpus_of({"fever now."}, {"c"});
  CHECK(avg_word_frequency(split_by_category(one, "c"), "fever") == 1.0);
}

TEST_CASE("feature dictionary thresholds and ordering") {
  const auto corpus = corpus_of({"fever. cough.", "fever fever.", "headache."}, {"c", "c", "d"});
  const auto split = split_by_category(corpus, "c");
  const auto all = build_feature_dictionary(split, 0.0);
  CHECK(all.words() == std::vector<std::string>{"fever", "cough"});
  CHECK(all[0].corpus_frequency == 3);
  CHECK(all[0].avg_word_frequency == 1.0);
  const auto half = build_feature_dictionary(split, 0.5);
  CHECK(half.words() == std::vector<std::string>{"fever"});
  CHECK(build_feature_dictionary(split, 1.5).empty());
  const auto neg = build_negative_dictionary(split);
  CHECK(neg.words() == std::vector<std::string>{"headache"});
  CHECK(all.position("cough") == std::optional<std::size_t>(1));
  CHECK_FALSE(all.contains("headache"));
}

TEST_CASE("dictionary ties break by word") {
  const auto corpus = corpus_of({"b a c"}, {"c"});
  CHECK(build_feature_dictionary(split_by_category(corpus, "c"), 0.0).words() ==
        std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("co-occurrence worked example") {
  const auto corpus = corpus_of({"a b c", "a c b"}, {"c", "c"});
  const std::vector<std::size_t> all{0, 1};
  const auto m = build_cooccurrence(corpus, all, {"a", "b", "c"});
  CHECK(m.count("a", "b") == 2);
  CHECK(m.count("b", "a") == 0);
  CHECK(m.count("a", "c") == 2);
  CHECK(m.count("c", "b") == 1);
  CHECK(m.count("b", "c") == 1);
  CHECK(m.count("a", "a") == 0);
  CHECK(m.count("a", "zzz") == 0);

  const auto twice = corpus_of({"a a"}, {"c"});
  const std::vector<std::size_t> first{0};
  CHECK(build_cooccurrence(twice, first, {"a"}).count("a", "a") == 1);
}

TEST_CASE("co-occurrence uses first occurrences") {
  const auto corpus = corpus_of({"b a b"}, {"c"});
  const std::vector<std::size_t> all{0};
  const auto m = build_cooccurrence(corpus, all, {"a", "b"});
  CHECK(m.count("b", "a") == 1);
  CHECK(m.count("a", "b") == 0);
  CHECK(m.count("b", "b") == 1);
}

TEST_CASE("co-occurrence matches the brute-force count") {
  Rng rng(31);
  const auto vocab = regevo::testing::word_pool(8);
  for (int round = 0; round < 20; ++round) {
    std::vector<std::vector<std::string>> docs;
    std::vector<std::string> texts, labels;
    for (int q = 0; q < 15; ++q) {
      auto words = regevo::testing::random_text(rng, vocab, 9);
      if (words.empty()) words.push_back(vocab[0]);
      std::string text;
      for (const auto& w : words) text += w + " ";
      docs.push_back(words);
      texts.push_back(text);
      labels.push_back("c");
    }
    const auto corpus = corpus_of(texts, labels);
    std::vector<std::size_t> all(corpus.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const auto m = build_cooccurrence(corpus, all, vocab);
    const auto oracle = regevo::testing::naive_cooccurrence(docs, vocab);
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      for (std::size_t j = 0; j < vocab.size(); ++j) REQUIRE(m.at(i, j) == oracle[i][j]);
    }
  }
}
