#include "magebench/webui/attributes.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace mage::webui {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

const std::set<std::string, std::less<>> kText = {"text", "alt", "placeholder", "title", "value", "label",
                                                  "aria-label"};
const std::set<std::string, std::less<>> kContinuous = {
    "width",        "height",      "font-size",    "font-weight",   "line-height",  "letter-spacing",
    "word-spacing", "border-width", "border-radius", "outline-width", "opacity",      "padding",
    "padding-top",  "padding-bottom", "padding-left", "padding-right", "margin",      "margin-top",
    "margin-bottom", "margin-left", "margin-right", "top",           "left",         "right",
    "bottom",       "z-index",     "gap",          "min-width",     "max-width",    "min-height",
    "max-height",   "text-indent", "flex-grow",    "flex-shrink"};

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> hex_pair(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> number(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::string_view kind_name(AttrKind k) {
  switch (k) {
    case AttrKind::Text: return "text";
    case AttrKind::Continuous: return "continuous";
    case AttrKind::Discrete: return "discrete";
    case AttrKind::Color: return "color";
  }
  return "?";
}

AttrKind kind_of(std::string_view attribute) {
  const std::string a = lower(attribute);
  if (kText.count(a)) return AttrKind::Text;
  if (a == "color" || ends_with(a, "-color") || a == "fill" || a == "stroke") return AttrKind::Color;
  if (kContinuous.count(a) || ends_with(a, "-width") || ends_with(a, "-radius") || ends_with(a, "-size") ||
      ends_with(a, "-spacing") || ends_with(a, "-height"))
    return AttrKind::Continuous;
  return AttrKind::Discrete;
}

std::optional<Quantity> parse_quantity(std::string_view s) {
  s = trim(s);
  std::size_t i = 0;
  while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.' || s[i] == '-' ||
                          s[i] == '+' || s[i] == 'e' || s[i] == 'E')) {
    // stop at an 'e' that starts a unit such as "em"
    if ((s[i] == 'e' || s[i] == 'E') && (i + 1 >= s.size() || !(std::isdigit(static_cast<unsigned char>(s[i + 1])) ||
                                                                 s[i + 1] == '-' || s[i + 1] == '+')))
      break;
    ++i;
  }
  if (i == 0) return std::nullopt;
  const auto v = number(s.substr(0, i));
  if (!v) return std::nullopt;
  std::string unit = lower(trim(s.substr(i)));
  if (!std::all_of(unit.begin(), unit.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '%'; }))
    return std::nullopt;
  return Quantity{*v, unit};
}

std::optional<Color> parse_color(std::string_view raw) {
  const std::string s = lower(trim(raw));
  if (s.empty()) return std::nullopt;
  if (s[0] == '#') {
    const std::string_view h = std::string_view(s).substr(1);
    if (h.size() == 3 || h.size() == 4) {
      Color c{};
      for (int k = 0; k < 3; ++k) {
        const auto v = hex_pair(h.substr(k, 1));
        if (!v) return std::nullopt;
        c[k] = *v * 17;
      }
      return c;
    }
    if (h.size() == 6 || h.size() == 8) {
      Color c{};
      for (int k = 0; k < 3; ++k) {
        const auto v = hex_pair(h.substr(2 * k, 2));
        if (!v) return std::nullopt;
        c[k] = *v;
      }
      return c;
    }
    return std::nullopt;
  }
  if (s.rfind("rgb", 0) == 0) {
    const auto open = s.find('('), close = s.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) return std::nullopt;
    std::string body = s.substr(open + 1, close - open - 1);
    for (auto& ch : body)
      if (ch == ',' || ch == '/') ch = ' ';
    const auto parts = tokens(body);
    if (parts.size() < 3) return std::nullopt;
    Color c{};
    for (int k = 0; k < 3; ++k) {
      std::string_view p = parts[k];
      const bool pct = !p.empty() && p.back() == '%';
      if (pct) p.remove_suffix(1);
      const auto v = number(p);
      if (!v) return std::nullopt;
      c[k] = std::clamp(static_cast<int>(std::lround(pct ? *v * 2.55 : *v)), 0, 255);
    }
    return c;
  }
  static const std::pair<const char*, Color> kNamed[] = {
      {"black", {0, 0, 0}},       {"white", {255, 255, 255}}, {"red", {255, 0, 0}},
      {"green", {0, 128, 0}},     {"lime", {0, 255, 0}},      {"blue", {0, 0, 255}},
      {"yellow", {255, 255, 0}},  {"gray", {128, 128, 128}},  {"grey", {128, 128, 128}},
      {"silver", {192, 192, 192}}, {"orange", {255, 165, 0}}, {"purple", {128, 0, 128}},
      {"navy", {0, 0, 128}},      {"transparent", {0, 0, 0}},
  };
  for (const auto& [name, c] : kNamed)
    if (s == name) return c;
  return std::nullopt;
}

double term_iou(std::string_view a, std::string_view b) {
  const auto ta = tokens(a), tb = tokens(b);
  const std::set<std::string_view> sa(ta.begin(), ta.end()), sb(tb.begin(), tb.end());
  if (sa.empty() && sb.empty()) return 1.0;
  std::size_t inter = 0;
  for (auto t : sa) inter += sb.count(t);
  return static_cast<double>(inter) / static_cast<double>(sa.size() + sb.size() - inter);
}

double attr_similarity(AttrKind kind, std::string_view gt, std::string_view gen) {
  if (gt == gen) return 1.0;
  switch (kind) {
    case AttrKind::Text: return term_iou(gt, gen);
    case AttrKind::Discrete: return trim(gt) == trim(gen) ? 1.0 : 0.0;
    case AttrKind::Continuous: {
      const auto a = parse_quantity(gt), b = parse_quantity(gen);
      if (!a || !b) return 0.0;
      if (a->unit != b->unit && !(a->unit.empty() && a->value == 0.0) && !(b->unit.empty() && b->value == 0.0))
        return 0.0;
      if (a->value == 0.0) return b->value == 0.0 ? 1.0 : 0.0;
      return std::clamp(1.0 - std::abs(a->value - b->value) / std::abs(a->value), 0.0, 1.0);
    }
    case AttrKind::Color: {
      const auto a = parse_color(gt), b = parse_color(gen);
      if (!a || !b) return lower(trim(gt)) == lower(trim(gen)) ? 1.0 : 0.0;
      double d = 0.0;
      for (int k = 0; k < 3; ++k) d += std::abs((*a)[k] - (*b)[k]) / 256.0;
      return 1.0 - d / 3.0;
    }
  }
  return 0.0;
}

double attr_similarity(std::string_view attribute, std::string_view gt, std::string_view gen) {
  return attr_similarity(kind_of(attribute), gt, gen);
}

}  // namespace mage::webui
