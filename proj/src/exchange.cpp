#include "regevo/exchange.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace regevo {

namespace {

std::string parse_message(std::size_t position, const std::vector<std::string>& expected,
                          std::string_view input) {
  std::ostringstream out;
  out << "syntax error at position " << position << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out << (i + 1 == expected.size() ? " or " : ", ");
    out << expected[i];
  }
  if (position < input.size()) {
    out << ", found '" << input[position] << "'";
  } else {
    out << ", found end of input";
  }
  return out.str();
}

bool is_word_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) &&
         kReservedChars.find(c) == std::string_view::npos;
}

void write_group(std::ostream& out, const OrExpression& group) {
  out << '(';
  for (std::size_t i = 0; i < group.words.size(); ++i) {
    if (i) out << '|';
    out << group.words[i];
  }
  out << ')';
}

void write_ad(std::ostream& out, const AdExpression& ad) {
  write_group(out, ad.left);
  out << ".{" << ad.gap_min << ',' << ad.gap_max << '}';
  write_group(out, ad.right);
}

class Parser {
 public:
  explicit Parser(std::string_view input) : in_(input) {}

  RegexRule rule() {
    RegexRule r;
    r.positive = positive();
    separator();
    if (!at_end()) r.negatives = negatives();
    if (!at_end()) fail({"end of rule"});
    return r;
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= in_.size(); }
  char peek() const { return at_end() ? '\0' : in_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected), in_);
  }

  void expect(char c) {
    if (peek() != c) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  void separator() {
    if (in_.substr(pos_, 2) == "##") {
      pos_ += 2;
    } else if (in_.substr(pos_, 3) == "#.#") {
      pos_ += 3;
    } else {
      fail({"'##'"});
    }
  }

  std::string word() {
    const std::size_t start = pos_;
    while (!at_end() && is_word_char(in_[pos_])) ++pos_;
    if (pos_ == start) fail({"word"});
    return std::string(in_.substr(start, pos_ - start));
  }

  std::uint32_t integer() {
    const std::size_t start = pos_;
    while (!at_end() && in_[pos_] >= '0' && in_[pos_] <= '9') ++pos_;
    if (pos_ == start) {
      fail({"integer"});
    }
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(in_.data() + start, in_.data() + pos_, value);
    if (ec != std::errc{}) {
      pos_ = start;
      fail({"integer below 2^32"});
    }
    return value;
  }

  OrExpression group() {
    OrExpression g;
    expect('(');
    g.words.push_back(word());
    while (peek() == '|') {
      ++pos_;
      g.words.push_back(word());
    }
    if (peek() != ')') fail({"'|'", "')'"});
    ++pos_;
    return g;
  }

  AdExpression positive() {
    AdExpression ad;
    ad.left = group();
    if (in_.substr(pos_, 2) != ".{") fail({"'.{'"});
    pos_ += 2;
    ad.gap_min = integer();
    expect(',');
    ad.gap_max = integer();
    expect('}');
    ad.right = group();
    return ad;
  }

  NegativeExpression negative_item() {
    if (peek() == '(') return positive();
    return word();
  }

  std::vector<NegativeExpression> negatives() {
    std::vector<NegativeExpression> out;
    expect('(');
    out.push_back(negative_item());
    while (peek() == '|') {
      ++pos_;
      out.push_back(negative_item());
    }
    if (peek() != ')') fail({"'|'", "')'"});
    ++pos_;
    return out;
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       std::string_view input)
    : Error(parse_message(position, expected, input)),
      position_(position),
      expected_(std::move(expected)) {}

std::string serialize_rule(const RegexRule& rule) {
  std::ostringstream out;
  write_ad(out, rule.positive);
  out << "##";
  if (!rule.negatives.empty()) {
    out << '(';
    for (std::size_t i = 0; i < rule.negatives.size(); ++i) {
      if (i) out << '|';
      if (const auto* w = std::get_if<std::string>(&rule.negatives[i])) {
        out << *w;
      } else {
        write_ad(out, std::get<AdExpression>(rule.negatives[i]));
      }
    }
    out << ')';
  }
  return out.str();
}

RegexRule parse_rule(std::string_view text) {
  const std::string_view body = trim(text);
  const auto lead = static_cast<std::size_t>(body.data() - text.data());
  RegexRule rule;
  try {
    rule = Parser(body).rule();
  } catch (const ParseError& e) {
    if (lead == 0) throw;
    throw ParseError(e.position() + lead, e.expected(), text);
  }
  ValidationResult check = validate_rule(rule);
  if (!check.ok()) throw ConstraintError(std::move(check));
  return rule;
}

RuleFileError::RuleFileError(std::string file, std::size_t line, const std::string& detail)
    : Error(file + ":" + std::to_string(line) + ": " + detail),
      file_(std::move(file)),
      line_(line) {}

std::vector<RegexVector> read_rules(std::istream& in, const std::string& file_name) {
  std::vector<RegexVector> blocks;
  RegexVector* current = nullptr;
  std::string raw;
  std::size_t line_no = 0;
  constexpr std::string_view kHeader = "category:";
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.substr(0, kHeader.size()) == kHeader) {
      const std::string id(trim(line.substr(kHeader.size())));
      if (id.empty()) throw RuleFileError(file_name, line_no, "empty category id");
      current = nullptr;
      for (auto& b : blocks) {
        if (b.category == id) current = &b;
      }
      if (!current) {
        blocks.push_back(RegexVector{id, {}});
        current = &blocks.back();
      }
      continue;
    }
    if (!current) throw RuleFileError(file_name, line_no, "rule before any 'category:' header");
    try {
      current->rules.push_back(parse_rule(line));
    } catch (const Error& e) {
      throw RuleFileError(file_name, line_no, e.what());
    }
  }
  for (const auto& b : blocks) {
    if (b.rules.empty()) {
      throw RuleFileError(file_name, line_no, "category '" + b.category + "' has no rules");
    }
  }
  return blocks;
}

std::vector<RegexVector> load_rule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open rule file " + path);
  return read_rules(in, path);
}

void write_rules(std::ostream& out, const std::vector<RegexVector>& vectors,
                 const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const auto& v : vectors) {
    out << "category: " << v.category << '\n';
    for (const auto& r : v.rules) out << serialize_rule(r) << '\n';
  }
}

void save_rule_file(const std::string& path, const std::vector<RegexVector>& vectors,
                    const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write rule file " + path);
  write_rules(out, vectors, comments);
  if (!out) throw Error("failed writing rule file " + path);
}

}  // namespace regevo
