#include "voxgen/geometry.hpp"

#include <algorithm>

#include "voxgen/error.hpp"

namespace voxgen {

namespace {

Coord checked_add(Coord a, Coord b) {
  Coord out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "coordinate overflow: " + std::to_string(a) +
                                         " + " + std::to_string(b));
  }
  return out;
}

}  // namespace

Position shifted(Position p, Delta d) {
  return {checked_add(p.x, d.dx), checked_add(p.y, d.dy), checked_add(p.z, d.dz)};
}

std::string to_string(Position p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," +
         std::to_string(p.z) + ")";
}

Box hull(const Box& a, const Box& b) noexcept {
  return {{std::min(a.top_left.x, b.top_left.x), std::min(a.top_left.y, b.top_left.y),
           std::min(a.top_left.z, b.top_left.z)},
          {std::max(a.bottom_right.x, b.bottom_right.x),
           std::max(a.bottom_right.y, b.bottom_right.y),
           std::max(a.bottom_right.z, b.bottom_right.z)}};
}

Box shifted(const Box& b, Delta d) {
  return {shifted(b.top_left, d), shifted(b.bottom_right, d)};
}

std::string to_string(const Box& b) {
  return to_string(b.top_left) + "-" + to_string(b.bottom_right);
}

Box inset(const Box& b, const Margins& m) {
  if (m.x_low < 0 || m.x_high < 0 || m.y_low < 0 || m.y_high < 0 || m.z_low < 0 ||
      m.z_high < 0) {
    throw Error(ErrorKind::InvalidArgument, "margins must be non-negative");
  }
  // 64-bit arithmetic so extreme boxes cannot overflow here.
  auto lo = [](Coord c, Coord m) { return std::int64_t{c} + m; };
  auto hi = [](Coord c, Coord m) { return std::int64_t{c} - m; };
  const std::int64_t x0 = lo(b.top_left.x, m.x_low), x1 = hi(b.bottom_right.x, m.x_high);
  const std::int64_t y0 = lo(b.top_left.y, m.y_low), y1 = hi(b.bottom_right.y, m.y_high);
  const std::int64_t z0 = lo(b.top_left.z, m.z_low), z1 = hi(b.bottom_right.z, m.z_high);
  if (x0 > x1 || y0 > y1 || z0 > z1) {
    throw Error(ErrorKind::EmptyBox, "margins leave an empty box inside " + to_string(b));
  }
  return {{static_cast<Coord>(x0), static_cast<Coord>(y0), static_cast<Coord>(z0)},
          {static_cast<Coord>(x1), static_cast<Coord>(y1), static_cast<Coord>(z1)}};
}

}  // namespace voxgen
