#include "magebench/webui/geometry.hpp"

#include <algorithm>

namespace mage::webui {

double intersection_area(const BBox& a, const BBox& b) {
  const double w = std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
  const double h = std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y);
  return w > 0.0 && h > 0.0 ? w * h : 0.0;
}

double giou(const BBox& a, const BBox& b) {
  if (a == b) return 1.0;
  const double inter = intersection_area(a, b);
  const double uni = a.area() + b.area() - inter;
  const double iou = uni > 0.0 ? inter / uni : 0.0;
  const double cw = std::max(a.x + a.w, b.x + b.w) - std::min(a.x, b.x);
  const double ch = std::max(a.y + a.h, b.y + b.h) - std::min(a.y, b.y);
  const double enclosure = cw * ch;
  if (enclosure <= 0.0) return iou;  // collinear degenerate boxes
  return iou - (enclosure - uni) / enclosure;
}

}  // namespace mage::webui
