#include <doctest.h>

#include <sstream>

#include "regevo/evaluation.hpp"
#include "regevo/exchange.hpp"
#include "support.hpp"

using namespace regevo;
using regevo::testing::corpus_of;

namespace {
RegexVector vec(const std::string& category, std::initializer_list<const char*> rules) {
  RegexVector v{category, {}};
  for (const char* r : rules) v.rules.push_back(parse_rule(r));
  return v;
}
}  // namespace

TEST_CASE("f_score") {
  for (double x : {0.1, 0.25, 0.5, 0.9, 1.0}) {
    for (double beta : {0.5, 1.0, 2.0}) CHECK(std::abs(f_score(x, x, beta) - x) < 1e-12);
  }
  CHECK(std::abs(f_score(0.5, 1.0, 1.0) - 2.0 / 3.0) < 1e-12);
  CHECK(f_score(0.0, 0.0, 1.0) == 0.0);
  CHECK(f_score(0.0, 0.0, 2.0) == 0.0);
  // beta = 2 weights recall: (5 * 0.5 * 1) / (4 * 0.5 + 1)
  CHECK(std::abs(f_score(0.5, 1.0, 2.0) - 2.5 / 3.0) < 1e-12);
}

TEST_CASE("f_score is monotone in each argument") {
  for (double r : {0.2, 0.6, 1.0}) {
    double prev = -1.0;
    for (int i = 0; i <= 50; ++i) {
      const double f = f_score(i / 50.0, r, 1.0);
      CHECK(f >= prev);
      prev = f;
    }
  }
}

TEST_CASE("precision and recall zero conventions") {
  const ConfusionCounts none{0, 0, 4, 6};
  CHECK(precision(none) == 0.0);
  CHECK(recall(none) == 0.0);
  CHECK(recall(ConfusionCounts{0, 3, 0, 1}) == 0.0);
}

TEST_CASE("evaluate_vector counts") {
  SUBCASE("perfect vector") {
    std::vector<std::string> texts, labels;
    for (int i = 0; i < 10; ++i) {
      texts.push_back(i < 4 ? "a b" : "b a");
      labels.push_back(i < 4 ? "c" : "d");
    }
    const auto corpus = corpus_of(texts, labels);
    const InvertedIndex index(corpus);
    const auto split = split_by_category(corpus, "c");
    CHECK(evaluate_vector(vec("c", {"(a).{0,0}(b)##"}), split, index) == ConfusionCounts{4, 0, 0, 6});
    const auto nothing = evaluate_vector(vec("c", {"(q).{0,0}(q)##"}), split, index);
    CHECK(nothing == ConfusionCounts{0, 0, 4, 6});
    CHECK(nothing.total() == 10);
  }
  SUBCASE("hand-counted split") {
    const auto corpus =
        corpus_of({"a b", "a x b", "a b c", "x", "y", "a b"}, {"p", "p", "p", "p", "p", "n"});
    const InvertedIndex index(corpus);
    const auto split = split_by_category(corpus, "p");
    const auto c = evaluate_vector(vec("p", {"(a).{0,1}(b)##"}), split, index);
    CHECK(c == ConfusionCounts{3, 1, 2, 0});
    CHECK(precision(c) == 0.75);
    CHECK(recall(c) == 0.6);
  }
}

TEST_CASE("fitness composes and caches") {
  const auto corpus = corpus_of({"a b", "a b", "b a", "c"}, {"p", "p", "n", "n"});
  const InvertedIndex index(corpus);
  const auto split = split_by_category(corpus, "p");
  Individual perfect{{parse_rule("(a).{0,3}(b)##")}, std::nullopt};
  CHECK(fitness(perfect, split, index, 1.0) == 1.0);
  Individual none{{parse_rule("(c).{0,3}(c)##")}, std::nullopt};
  CHECK(fitness(none, split, index, 1.0) == 0.0);
  Individual noisy{{parse_rule("(a).{0,3}(b)##"), parse_rule("(b).{0,3}(a)##")}, std::nullopt};
  const double expected = f_score(evaluate_vector(noisy.as_vector("p"), split, index), 1.0);
  CHECK(fitness(noisy, split, index, 1.0) == expected);
  noisy.fitness = 0.123;
  CHECK(fitness(noisy, split, index, 1.0) == 0.123);
}

TEST_CASE("counts equal a per-inquiry recount") {
  Rng rng(51);
  const auto vocab = regevo::testing::word_pool(7);
  for (int round = 0; round < 10; ++round) {
    std::vector<std::string> texts, labels;
    std::vector<std::vector<std::string>> docs;
    for (int q = 0; q < 100; ++q) {
      auto words = regevo::testing::random_text(rng, vocab, 10);
      words.push_back(vocab[rng.index(vocab.size())]);
      std::string text;
      for (const auto& w : words) text += w + " ";
      docs.push_back(words);
      texts.push_back(text);
      labels.push_back(rng.bernoulli(0.4) ? "p" : "n");
    }
    const auto corpus = corpus_of(texts, labels);
    const InvertedIndex index(corpus);
    const auto split = split_by_category(corpus, "p");
    RegexVector v{"p", {regevo::testing::random_rule(rng, vocab), regevo::testing::random_rule(rng, vocab)}};
    ConfusionCounts oracle;
    for (std::size_t q = 0; q < docs.size(); ++q) {
      bool hit = false;
      for (const auto& r : v.rules) hit |= regevo::testing::naive_match_rule(r, docs[q]);
      const bool pos = labels[q] == "p";
      (hit ? (pos ? oracle.tp : oracle.fp) : (pos ? oracle.fn : oracle.tn)) += 1;
    }
    CHECK(evaluate_vector(v, split, index) == oracle);
  }
}

TEST_CASE("classify uses priority order") {
  const std::vector<RegexVector> vectors{vec("3", {"(a).{0,2}(b)##"}), vec("7", {"(b).{0,2}(c)##"})};
  auto r = classify("a b c", vectors);
  CHECK(r.category == std::optional<std::string>("3"));
  CHECK(r.matches == std::vector<std::string>{"3", "7"});
  r = classify("b c", vectors);
  CHECK(r.category == std::optional<std::string>("7"));
  CHECK(r.matches == std::vector<std::string>{"7"});
  r = classify("nothing", vectors);
  CHECK_FALSE(r.category.has_value());
  CHECK(r.matches.empty());
  const std::vector<RegexVector> reversed{vectors[1], vectors[0]};
  r = classify("a b c", reversed);
  CHECK(r.category == std::optional<std::string>("7"));
  CHECK(r.matches.size() == 2);
}

TEST_CASE("default priority is training size") {
  const auto corpus = corpus_of({"a", "a", "a", "b", "c", "c"}, {"x", "x", "x", "y", "z", "z"});
  const auto ordered = order_by_priority(
      {vec("y", {"(a).{0,0}(a)##"}), vec("gone", {"(a).{0,0}(a)##"}), vec("z", {"(a).{0,0}(a)##"}),
       vec("x", {"(a).{0,0}(a)##"})},
      corpus);
  std::vector<std::string> ids;
  for (const auto& v : ordered) ids.push_back(v.category);
  CHECK(ids == std::vector<std::string>{"x", "z", "y", "gone"});
}

TEST_CASE("metrics report and CSV") {
  const MetricsReport report =
      make_report({{"b", ConfusionCounts{1, 1, 0, 2}}, {"a", ConfusionCounts{3, 1, 2, 0}}}, 1.0);
  REQUIRE(report.per_category.size() == 2);
  CHECK(report.per_category[0].category == "a");
  CHECK(report.macro_precision == doctest::Approx((0.75 + 0.5) / 2));
  CHECK(report.macro_recall == doctest::Approx((0.6 + 1.0) / 2));
  std::ostringstream out;
  write_metrics_csv(out, report);
  CHECK(out.str() ==
        "category,tp,fp,fn,tn,precision,recall,f_beta\n"
        "a,3,1,2,0,0.75,0.6," + format_double(f_score(0.75, 0.6, 1.0)) + "\n"
        "b,1,1,0,2,0.5,1," + format_double(f_score(0.5, 1.0, 1.0)) + "\n"
        "macro,4,2,2,2,0.625,0.8," + format_double(report.macro_f_beta) + "\n");
}

TEST_CASE("format_double round-trips") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  const double x = 2.0 / 3.0;
  CHECK(std::stod(format_double(x)) == x);
}
