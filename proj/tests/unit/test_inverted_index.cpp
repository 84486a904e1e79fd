#include <doctest.h>

#include "regevo/evaluation.hpp"
#include "regevo/inverted_index.hpp"
#include "support.hpp"

using namespace regevo;
using regevo::testing::corpus_of;

namespace {
std::vector<std::uint32_t> list(std::span<const std::uint32_t> s) { return {s.begin(), s.end()}; }
}  // namespace

TEST_CASE("postings of a two-inquiry corpus") {
  const auto corpus = corpus_of({"a b", "b c b"}, {"x", "y"});
  const InvertedIndex index(corpus);
  CHECK(list(index.postings("a")) == std::vector<std::uint32_t>{0});
  CHECK(list(index.postings("b")) == std::vector<std::uint32_t>{0, 1});
  CHECK(list(index.postings("c")) == std::vector<std::uint32_t>{1});
  CHECK(index.postings("zzz").empty());
  CHECK(index.postings(kUnknownWord).empty());

  const WordId a = corpus.lexicon().find("a"), b = corpus.lexicon().find("b"),
               c = corpus.lexicon().find("c");
  const std::vector<WordId> left{a}, right{c}, either{a, c}, mid{b};
  CHECK(index.candidates(left, right).empty());
  CHECK(index.candidates(mid, right) == std::vector<std::uint32_t>{1});
  CHECK(index.any_of(either) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("indexed matching equals an exhaustive scan") {
  Rng rng(41);
  const auto vocab = regevo::testing::word_pool(10);
  std::vector<std::string> texts, labels;
  for (int q = 0; q < 200; ++q) {
    auto words = regevo::testing::random_text(rng, vocab, 12);
    words.push_back(vocab[rng.index(vocab.size())]);
    std::string text;
    for (const auto& w : words) text += w + " ";
    texts.push_back(text);
    labels.push_back(rng.bernoulli(0.3) ? "pos" : "neg");
  }
  // A word absent from the corpus must not break compilation or matching.
  auto pool = vocab;
  pool.push_back("unseen");
  const auto corpus = corpus_of(texts, labels);
  const InvertedIndex index(corpus);
  const auto split = split_by_category(corpus, "pos");
  const SplitEvaluator eval(split, index);
  for (int i = 0; i < 300; ++i) {
    std::vector<RegexRule> rules;
    const auto n = rng.between(1, 3);
    for (std::uint64_t k = 0; k < n; ++k) rules.push_back(regevo::testing::random_rule(rng, pool));
    REQUIRE(eval.matched(rules) == eval.matched_exhaustive(rules));
  }
}

TEST_CASE("index must belong to the split's corpus") {
  const auto a = corpus_of({"a b", "b c"}, {"x", "y"});
  const auto b = corpus_of({"a b"}, {"x"});
  const InvertedIndex index(b);
  const auto split = split_by_category(a, "x");
  CHECK_THROWS_AS(SplitEvaluator(split, index), Error);
}
