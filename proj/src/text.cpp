#include "text.hpp"

#include <algorithm>
#include <cctype>

namespace fondplus::text {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

namespace {

bool is_keyword_char(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

std::vector<Section> read_sections(std::string_view text, std::initializer_list<std::string_view> headers,
                                   bool allow_actions) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines.push_back(Line{number, std::string(raw)});
  }

  if (lines.empty()) throw ParseError(0, "empty input");
  {
    const std::string& first = lines.front().text;
    const auto colon = first.find(':');
    if (colon == std::string::npos || trim(std::string_view(first).substr(0, colon)) != "format")
      throw ParseError(lines.front().number, "expected 'format: fondplus-v1' header");
    if (trim(std::string_view(first).substr(colon + 1)) != kFormatTag)
      throw ParseError(lines.front().number, "unsupported format '" +
                                                 std::string(trim(std::string_view(first).substr(colon + 1))) +
                                                 "' (expected fondplus-v1)");
  }

  std::vector<Section> sections;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    std::string_view t = line.text;

    std::size_t k = 0;
    while (k < t.size() && is_keyword_char(t[k])) ++k;
    const std::string_view word = t.substr(0, k);

    if (allow_actions && word == "action" && k < t.size() && std::isspace(static_cast<unsigned char>(t[k]))) {
      const auto colon = t.find(':');
      if (colon == std::string_view::npos) throw ParseError(line.number, "action declaration needs ':'");
      Section s{"action", std::string(trim(t.substr(k, colon - k))), line.number, {}};
      const auto rest = trim(t.substr(colon + 1));
      if (!rest.empty()) s.body.push_back(Line{line.number, std::string(rest)});
      sections.push_back(std::move(s));
      continue;
    }

    std::size_t after = k;
    while (after < t.size() && (t[after] == ' ' || t[after] == '\t')) ++after;
    const bool is_header = k > 0 && after < t.size() && t[after] == ':' &&
                           std::find(headers.begin(), headers.end(), word) != headers.end();
    if (is_header) {
      Section s{std::string(word), {}, line.number, {}};
      const auto rest = trim(t.substr(after + 1));
      if (!rest.empty()) s.body.push_back(Line{line.number, std::string(rest)});
      sections.push_back(std::move(s));
      continue;
    }
    if (k > 0 && after < t.size() && t[after] == ':')
      throw ParseError(line.number, "unknown section '" + std::string(word) + "'");
    if (sections.empty() || sections.back().name == "action")
      throw ParseError(line.number, "content outside of a section: '" + line.text + "'");
    sections.back().body.push_back(line);
  }
  return sections;
}

std::vector<std::string> list_tokens(std::string_view s, std::size_t line, bool check_names) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else if (c == '{' || c == '}') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  if (!check_names) return out;
  for (const auto& tok : out)
    if (!valid_name(tok)) throw ParseError(line, "invalid name '" + tok + "'");
  return out;
}

std::vector<std::string> list_tokens(const Section& section, bool check_names) {
  std::vector<std::string> out;
  for (const Line& l : section.body) {
    auto part = list_tokens(l.text, l.number, check_names);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || std::iscntrl(u)) return false;
    return std::string_view(",{}|()#=:").find(c) == std::string_view::npos;
  });
}

void Scanner::skip_space() {
  while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
}

bool Scanner::at_end() {
  skip_space();
  return pos_ >= s_.size();
}

bool Scanner::accept(std::string_view token) {
  skip_space();
  if (s_.substr(pos_, token.size()) != token) return false;
  // Keywords must not run into a following identifier character.
  const std::size_t end = pos_ + token.size();
  if (is_keyword_char(token.back()) && end < s_.size() &&
      (is_keyword_char(s_[end]) || std::isdigit(static_cast<unsigned char>(s_[end]))))
    return false;
  pos_ = end;
  return true;
}

void Scanner::expect(std::string_view token) {
  if (!accept(token)) error("expected '" + std::string(token) + "'");
}

std::vector<std::string> Scanner::brace_group() {
  expect("{");
  const auto close = s_.find('}', pos_);
  if (close == std::string_view::npos) error("unterminated '{'");
  std::string_view inner = s_.substr(pos_, close - pos_);
  pos_ = close + 1;
  std::vector<std::string> items;
  if (trim(inner).empty()) return items;
  while (true) {
    const auto comma = inner.find(',');
    const auto item = trim(inner.substr(0, comma));
    if (item.empty()) error("empty element in '{...}'");
    items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return items;
}

std::string Scanner::rest() {
  skip_space();
  auto r = std::string(s_.substr(pos_));
  pos_ = s_.size();
  return r;
}

void Scanner::error(const std::string& message) const {
  throw ParseError(line_, message + " at column " + std::to_string(pos_ + 1));
}

}  // namespace fondplus::text
