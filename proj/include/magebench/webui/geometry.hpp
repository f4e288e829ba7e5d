#pragma once

namespace mage::webui {

// Page-pixel box: top-left corner plus size.
struct BBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
  double area() const { return w * h; }
  bool operator==(const BBox&) const = default;
};

double intersection_area(const BBox& a, const BBox& b);

// Generalized IoU in [-1, 1]. Identical boxes give 1, including zero-area
// ones; otherwise zero-area boxes have IoU 0 and the enclosure is taken from
// their coordinates.
double giou(const BBox& a, const BBox& b);

}  // namespace mage::webui
