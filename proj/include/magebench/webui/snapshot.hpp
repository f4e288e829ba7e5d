#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magebench/webui/geometry.hpp"

namespace mage::webui {

struct ElementSnapshot {
  std::string tag;
  BBox bbox;
  std::map<std::string, std::string> attributes;
  int children = 0;
  std::optional<std::string> filter_by;
  std::vector<std::string> eval_by;  // non-empty marks a ground-truth atomic element

  bool atomic() const { return !eval_by.empty(); }
  double space() const { return bbox.area(); }
  bool operator==(const ElementSnapshot&) const = default;
};

enum class PageStatus { OK, ParseError, RenderError, InteractionError };

std::string_view status_name(PageStatus s);
std::optional<PageStatus> status_from_name(std::string_view name);

struct PageSnapshot {
  std::string action_id = "initial";
  PageStatus status = PageStatus::OK;
  int viewport_w = 0;
  int viewport_h = 0;
  std::vector<ElementSnapshot> elements;
  bool operator==(const PageSnapshot&) const = default;
};

// Throws std::invalid_argument on broken invariants (negative size, atomic
// element naming an attribute it does not carry, OK page without elements).
void validate(const PageSnapshot& page);

}  // namespace mage::webui
