#pragma once

// Line-oriented section reader shared by the problem file parsers.

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "fondplus/errors.hpp"

namespace fondplus::text {

inline constexpr std::string_view kFormatTag = "fondplus-v1";

struct Line {
  std::size_t number;
  std::string text;  // comment-stripped, trimmed, non-empty
};

struct Section {
  std::string name;      // header keyword, e.g. "states" or "action"
  std::string argument;  // action name for "action <name>:" headers
  std::size_t line;      // header line number
  std::vector<Line> body;  // header remainder (if any) followed by continuation lines
};

std::string_view trim(std::string_view s);

/// Splits `text` into sections. The first content line must be
/// `format: fondplus-v1`; every other line either opens a section whose
/// keyword is in `headers` (or is `action <name>:` when `allow_actions`) or
/// continues the previous one.
std::vector<Section> read_sections(std::string_view text, std::initializer_list<std::string_view> headers,
                                   bool allow_actions);

/// Whitespace/comma separated tokens of all body lines, with set braces
/// removed. With `check_names`, every token must satisfy valid_name.
std::vector<std::string> list_tokens(const Section& section, bool check_names = true);
std::vector<std::string> list_tokens(std::string_view s, std::size_t line, bool check_names = true);

/// Identifier check for names and labels: printable, no whitespace, none of
/// the reserved characters `,{}|()#=:`.
bool valid_name(std::string_view s);

/// Cursor over one line of an action or constraint declaration.
class Scanner {
 public:
  Scanner(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  void skip_space();
  bool at_end();
  bool accept(std::string_view token);  // keyword or punctuation, after skipping spaces
  void expect(std::string_view token);
  /// Contents of a `{...}` group split on commas, each trimmed; `{}` is empty.
  std::vector<std::string> brace_group();
  std::string rest();
  [[noreturn]] void error(const std::string& message) const;

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

}  // namespace fondplus::text
