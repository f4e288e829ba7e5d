#include "magebench/football/render.hpp"

namespace mage::football {

namespace {
constexpr Rgb kGrass{46, 139, 58};
constexpr Rgb kLine{235, 235, 235};
constexpr Rgb kOurs{250, 210, 40};
constexpr Rgb kTheirs{40, 90, 220};
constexpr Rgb kMarker{220, 30, 30};
constexpr Rgb kBall{255, 255, 255};
}  // namespace

Raster render(const FootballState& s, const PhysicsConfig& phys) {
  constexpr int margin = 8;
  Raster img(kPitchWidth, kPitchHeight, kGrass);
  const double sx = (kPitchWidth - 2 * margin) / (2.0 * phys.half_length);
  const double sy = (kPitchHeight - 2 * margin) / (2.0 * phys.half_width);
  auto px = [&](Vec2 p) {
    return std::pair<double, double>{margin + (p.x + phys.half_length) * sx, margin + (p.y + phys.half_width) * sy};
  };

  img.draw_rect_outline(margin, margin, kPitchWidth - 2 * margin, kPitchHeight - 2 * margin, kLine);
  img.fill_rect(kPitchWidth / 2, margin, 1, kPitchHeight - 2 * margin, kLine);
  const int goal_h = static_cast<int>(2 * phys.goal_half_width * sy);
  const int goal_y = kPitchHeight / 2 - goal_h / 2;
  img.fill_rect(margin - 3, goal_y, 3, goal_h, kLine);
  img.fill_rect(kPitchWidth - margin, goal_y, 3, goal_h, kLine);

  for (int i = 0; i < kPlayerCount; ++i) {
    const auto [x, y] = px(s.players[i].pos);
    if (i == s.controlled) img.fill_circle(x, y, 5.0, kMarker);
    img.fill_circle(x, y, 3.5, team_of(i) == Team::Ours ? kOurs : kTheirs);
  }
  const auto [bx, by] = px(s.ball.pos);
  img.fill_circle(bx, by, 1.8, kBall);
  return img;
}

}  // namespace mage::football
