#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace mage::webui {

enum class AttrKind { Text, Continuous, Discrete, Color };

std::string_view kind_name(AttrKind k);

// Kind of a CSS/HTML attribute by name. Unknown names are discrete.
AttrKind kind_of(std::string_view attribute);

struct Quantity {
  double value = 0.0;
  std::string unit;  // "" for unitless
};
std::optional<Quantity> parse_quantity(std::string_view s);

using Color = std::array<int, 3>;
// #rgb, #rrggbb, #rrggbbaa, rgb(...), rgba(...) and a handful of names.
std::optional<Color> parse_color(std::string_view s);

// Term IoU over whitespace-separated tokens; two empty strings give 1.
double term_iou(std::string_view a, std::string_view b);

// Similarity in [0, 1]; equal strings always give 1.
//   text:       term IoU
//   continuous: clamp(1 - |gt - gen| / |gt|, 0, 1); different units give 0
//   discrete:   equality
//   color:      1 - mean channel |difference| / 256
double attr_similarity(AttrKind kind, std::string_view gt, std::string_view gen);
double attr_similarity(std::string_view attribute, std::string_view gt, std::string_view gen);

}  // namespace mage::webui
