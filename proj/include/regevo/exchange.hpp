#pragma once

// Human-editable text form of rules.
//
//   rule      := positive "##" negatives?
//   positive  := group gap group
//   group     := "(" word ("|" word)* ")"
//   gap       := ".{" int "," int "}"
//   negatives := "(" negitem ("|" negitem)* ")"
//   negitem   := word | positive
//
// `#.#` is accepted as a separator on input; output always uses `##`.
//
// Rule files hold one rule per line. Lines starting with `#` are comments,
// blank lines are ignored, and `category: <id>` opens a category block.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "regevo/error.hpp"
#include "regevo/rule.hpp"

namespace regevo {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, std::string_view input);

  // Byte offset into the input where parsing stopped.
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

std::string serialize_rule(const RegexRule& rule);

// Throws ParseError on bad syntax and ConstraintError when the parsed rule
// fails validate_rule.
RegexRule parse_rule(std::string_view text);

// Error inside a rule file, tagged with its location.
class RuleFileError : public Error {
 public:
  RuleFileError(std::string file, std::size_t line, const std::string& detail);

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// Blocks come back in file order; repeated headers for the same category are
// merged into the first block.
std::vector<RegexVector> read_rules(std::istream& in, const std::string& file_name = "<input>");
std::vector<RegexVector> load_rule_file(const std::string& path);

// `comments` are written first, each prefixed with "# ".
void write_rules(std::ostream& out, const std::vector<RegexVector>& vectors,
                 const std::vector<std::string>& comments = {});
void save_rule_file(const std::string& path, const std::vector<RegexVector>& vectors,
                    const std::vector<std::string>& comments = {});

}  // namespace regevo
