#include "magebench/sokoban/render.hpp"

#include <algorithm>

namespace mage::sokoban {

namespace {

constexpr Rgb kFloor{32, 32, 36};
constexpr Rgb kBrick{170, 52, 40};
constexpr Rgb kMortar{200, 190, 180};
constexpr Rgb kBox{236, 196, 44};
constexpr Rgb kBoxEdge{150, 110, 20};
constexpr Rgb kTargetDot{230, 20, 20};
constexpr Rgb kPlayer{46, 184, 70};
constexpr Rgb kPlayerDark{20, 110, 40};

void draw_wall(Raster& img, int x0, int y0) {
  img.fill_rect(x0, y0, kTileSize, kTileSize, kBrick);
  const int course = kTileSize / 4;
  for (int row = 0; row < 4; ++row) {
    const int y = y0 + row * course;
    img.fill_rect(x0, y, kTileSize, 1, kMortar);
    const int shift = (row % 2) * (kTileSize / 2);
    img.fill_rect(x0 + shift, y, 1, course, kMortar);
  }
}

}  // namespace

Raster render(const Level& level, std::span<const Coord> boxes, Coord player) {
  const Grid& g = level.grid;
  Raster img(g.width() * kTileSize, g.height() * kTileSize, kFloor);
  const double half = kTileSize / 2.0;
  for (int r = 0; r < g.height(); ++r) {
    for (int c = 0; c < g.width(); ++c) {
      const Coord at{r, c};
      const int x0 = c * kTileSize;
      const int y0 = r * kTileSize;
      const bool target = g.at(at) == Cell::Target;
      if (g.at(at) == Cell::Wall) {
        draw_wall(img, x0, y0);
        continue;
      }
      if (std::find(boxes.begin(), boxes.end(), at) != boxes.end()) {
        img.fill_rect(x0 + 1, y0 + 1, kTileSize - 2, kTileSize - 2, kBoxEdge);
        img.fill_rect(x0 + 3, y0 + 3, kTileSize - 6, kTileSize - 6, kBox);
      }
      if (target) img.fill_circle(x0 + half, y0 + half, kTileSize / 6.0, kTargetDot);
      if (at == player) {
        img.fill_circle(x0 + half, y0 + half, kTileSize * 0.42, kPlayerDark);
        img.fill_circle(x0 + half, y0 + half, kTileSize * 0.32, kPlayer);
      }
    }
  }
  return img;
}

Raster render(const State& state) { return render(*state.level, state.boxes, state.player); }

}  // namespace mage::sokoban
