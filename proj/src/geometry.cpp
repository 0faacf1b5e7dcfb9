#include "tit/geometry.hpp"

#include <cmath>

namespace tit::geometry {

Line Line::from_normal(double nx, double ny, double c) {
  const double len = std::hypot(nx, ny);
  nx /= len;
  ny /= len;
  c /= len;
  if (std::fabs(nx) < 1e-12) nx = 0.0;
  if (std::fabs(ny) < 1e-12) ny = 0.0;
  if (nx < 0 || (nx == 0 && ny < 0)) {
    nx = -nx;
    ny = -ny;
    c = -c;
  }
  // Avoid a negative zero so identical lines compare equal bitwise.
  if (nx == 0) nx = 0.0;
  if (ny == 0) ny = 0.0;
  return {nx, ny, c};
}

Line Line::through(Point a, Point b) {
  if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::swap(a, b);
  const double nx = -(b.y - a.y);
  const double ny = b.x - a.x;
  return from_normal(nx, ny, nx * a.x + ny * a.y);
}

int strict_side(const Line& l, Point p) {
  const double v = l.value(p);
  if (v > kSideTolerance) return 1;
  if (v < -kSideTolerance) return -1;
  return 0;
}

std::optional<Point> intersect(const Line& a, const Line& b) {
  const double det = a.nx * b.ny - a.ny * b.nx;
  if (std::fabs(det) < 1e-12) return std::nullopt;
  return Point{(a.c * b.ny - a.ny * b.c) / det, (a.nx * b.c - a.c * b.nx) / det};
}

std::optional<SideConstraint> side_containing(const Line& line, Point inside) {
  const int s = strict_side(line, inside);
  if (s == 0) return std::nullopt;
  return SideConstraint{line, s > 0};
}

std::optional<SideConstraint> side_excluding(const Line& line, Point outside) {
  auto s = side_containing(line, outside);
  if (s) s->positive = !s->positive;
  return s;
}

Region triangle_region(const Line& la, const Line& lb, Point pa, Point pb, Point apex) {
  Region r;
  const auto sa = side_containing(la, pb);
  const auto sb = side_containing(lb, pa);
  if (!sa || !sb) {
    r.empty = true;
    return r;
  }
  const Line base = Line::through(pa, pb);
  const auto sc = side_containing(base, apex);
  if (!sc) {
    r.empty = true;
    return r;
  }
  r.constraints = {*sa, *sb, *sc};
  return r;
}

double triangle_area(Point a, Point b, Point c) { return std::fabs(cross(b - a, c - a)) / 2.0; }

}  // namespace tit::geometry
