#include "support.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace regevo::testing {

std::vector<Token> tokens_of(const std::vector<std::string>& words) {
  std::vector<Token> out;
  std::size_t pos = 0;
  for (const auto& w : words) {
    out.push_back({w, pos, pos + w.size()});
    pos += w.size() + 1;
  }
  return out;
}

std::vector<Token> tokens_of(const std::string& spaced) {
  std::istringstream in(spaced);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return tokens_of(words);
}

LabeledCorpus corpus_of(const std::vector<std::string>& texts,
                        const std::vector<std::string>& labels) {
  std::vector<CorpusRecord> records;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    records.push_back({"q" + std::to_string(i), texts[i], labels[i]});
  }
  return LabeledCorpus::from_records(records);
}

std::vector<std::string> word_pool(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

namespace {

OrExpression random_group(Rng& rng, const std::vector<std::string>& pool, std::size_t max_group) {
  const auto size = rng.between(1, std::min(max_group, pool.size()));
  std::vector<std::string> words = pool;
  rng.shuffle(words.begin(), words.end());
  words.resize(size);
  return make_or(std::move(words));
}

AdExpression random_ad(Rng& rng, const std::vector<std::string>& pool, const RuleShape& shape) {
  const auto a = static_cast<std::uint32_t>(rng.between(0, shape.max_gap));
  const auto b = static_cast<std::uint32_t>(rng.between(0, shape.max_gap));
  return make_ad(random_group(rng, pool, shape.max_group), random_group(rng, pool, shape.max_group),
                 std::min(a, b), std::max(a, b));
}

}  // namespace

RegexRule random_rule(Rng& rng, const std::vector<std::string>& pool, const RuleShape& shape) {
  RegexRule r;
  r.positive = random_ad(rng, pool, shape);
  const auto negs = rng.between(0, shape.max_negatives);
  for (std::uint64_t i = 0; i < negs; ++i) {
    if (rng.bernoulli(shape.ad_negative_share)) {
      r.negatives.emplace_back(random_ad(rng, pool, shape));
    } else {
      r.negatives.emplace_back(pool[rng.index(pool.size())]);
    }
  }
  return r;
}

std::vector<std::string> random_text(Rng& rng, const std::vector<std::string>& pool,
                                     std::size_t max_len) {
  std::vector<std::string> out(rng.between(0, max_len));
  for (auto& w : out) w = pool[rng.index(pool.size())];
  return out;
}

bool naive_match_ad(const AdExpression& ad, const std::vector<std::string>& text) {
  auto in = [](const OrExpression& g, const std::string& w) {
    return std::find(g.words.begin(), g.words.end(), w) != g.words.end();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    for (std::size_t j = i + 1; j < text.size(); ++j) {
      const std::size_t gap = j - i - 1;
      if (in(ad.left, text[i]) && in(ad.right, text[j]) && gap >= ad.gap_min &&
          gap <= ad.gap_max) {
        return true;
      }
    }
  }
  return false;
}

bool naive_match_rule(const RegexRule& rule, const std::vector<std::string>& text) {
  if (!naive_match_ad(rule.positive, text)) return false;
  for (const auto& n : rule.negatives) {
    if (const auto* w = std::get_if<std::string>(&n)) {
      if (std::find(text.begin(), text.end(), *w) != text.end()) return false;
    } else if (naive_match_ad(std::get<AdExpression>(n), text)) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> naive_cooccurrence(
    const std::vector<std::vector<std::string>>& inquiries, const std::vector<std::string>& vocab) {
  const std::size_t v = vocab.size();
  std::vector<std::vector<std::uint32_t>> m(v, std::vector<std::uint32_t>(v, 0));
  for (const auto& q : inquiries) {
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        std::size_t first_i = q.size(), first_j = q.size(), count_i = 0;
        for (std::size_t k = 0; k < q.size(); ++k) {
          if (q[k] == vocab[i]) {
            ++count_i;
            if (first_i == q.size()) first_i = k;
          }
          if (q[k] == vocab[j] && first_j == q.size()) first_j = k;
        }
        if (i == j) {
          if (count_i >= 2) ++m[i][j];
        } else if (first_i < q.size() && first_j < q.size() && first_i < first_j) {
          ++m[i][j];
        }
      }
    }
  }
  return m;
}

}  // namespace regevo::testing
