#include "magebench/harness/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace mage::harness {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back(text.substr(start, end - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

// Strips markdown decoration: hashes, emphasis, quotes, backticks.
std::string_view strip_decor(std::string_view s) {
  s = trim(s);
  const auto decor = [](char c) { return c == '#' || c == '*' || c == '_' || c == '`' || c == '"' || c == '\''; };
  while (!s.empty() && decor(s.front())) s.remove_prefix(1);
  while (!s.empty() && (decor(s.back()) || s.back() == '.' || s.back() == ';')) s.remove_suffix(1);
  return trim(s);
}

struct Header {
  std::size_t line;
  std::string_view rest;  // text after "action:" on the same line
};

// "# action", "### Actions", "Action:", "**Action**: Up".
std::optional<Header> header_of(std::string_view line, std::size_t index) {
  std::string_view s = trim(line);
  const bool hashed = !s.empty() && s.front() == '#';
  while (!s.empty() && (s.front() == '#' || s.front() == '*')) s.remove_prefix(1);
  s = trim(s);
  const std::string low = lower(s.substr(0, std::min<std::size_t>(s.size(), 7)));
  std::size_t word = 0;
  if (low.starts_with("actions")) word = 7;
  else if (low.starts_with("action")) word = 6;
  else return std::nullopt;
  std::string_view rest = s.substr(word);
  while (!rest.empty() && rest.front() == '*') rest.remove_prefix(1);
  rest = trim(rest);
  if (!rest.empty() && rest.front() == ':') {
    rest.remove_prefix(1);
  } else if (!rest.empty()) {
    // "action ID" in prose is not a header unless it was marked as one
    if (!hashed) return std::nullopt;
    if (std::isalnum(static_cast<unsigned char>(rest.front())) || rest.front() == '_') return std::nullopt;
  }
  while (!rest.empty() && rest.front() == '*') rest.remove_prefix(1);
  return Header{index, trim(rest)};
}

bool is_any_header(std::string_view line) {
  const auto s = trim(line);
  return !s.empty() && s.front() == '#';
}

std::vector<std::string_view> tokens_of(std::string_view text, bool sequence) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  const auto sep = [sequence](char c) {
    if (c == ',' || c == '\n' || c == '\r' || c == '[' || c == ']') return true;
    return !sequence && (std::isspace(static_cast<unsigned char>(c)) != 0 || c == '(' || c == ')');
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || sep(text[i])) {
      auto tok = strip_decor(text.substr(start, i - start));
      if (!tok.empty()) out.push_back(tok);
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> parse_actions(std::string_view text, const std::vector<std::string>& vocab,
                                       ParseMode mode) {
  if (vocab.empty()) throw std::invalid_argument("empty action vocabulary");
  const auto lines = split_lines(text);
  std::vector<Header> headers;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (auto h = header_of(lines[i], i)) headers.push_back(*h);
  }
  if (headers.empty()) throw ParseError("no action header");

  std::vector<std::string> lowered;
  for (const auto& v : vocab) lowered.push_back(lower(v));
  const auto lookup = [&](std::string_view tok) -> const std::string* {
    const std::string l = lower(tok);
    for (std::size_t k = 0; k < vocab.size(); ++k) {
      if (lowered[k] == l) return &vocab[k];
    }
    return nullptr;
  };

  const bool sequence = mode == ParseMode::Sequence;
  for (auto h = headers.rbegin(); h != headers.rend(); ++h) {
    std::string body(h->rest);
    for (std::size_t i = h->line + 1; i < lines.size() && !is_any_header(lines[i]); ++i) {
      body += '\n';
      body += lines[i];
    }
    std::vector<std::string> found;
    for (auto tok : tokens_of(body, sequence)) {
      if (const auto* v = lookup(tok)) {
        found.push_back(*v);
        if (!sequence) break;
      }
    }
    if (!found.empty()) return found;
  }
  throw ParseError("no action token after the action header");
}

}  // namespace mage::harness
