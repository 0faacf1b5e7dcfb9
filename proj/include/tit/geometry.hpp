#pragma once

#include <optional>
#include <vector>

namespace tit::geometry {

struct Point {
  double x = 0;
  double y = 0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

// Distance below which a point counts as lying on a line.
inline constexpr double kSideTolerance = 1e-7;

// Line {p : nx*x + ny*y = c} with a unit normal in canonical orientation
// (nx > 0, or nx == 0 and ny > 0). A point is on the positive side when
// value(p) >= -kSideTolerance, so points on the line itself are positive.
// Applied everywhere, this rule splits the plane into disjoint regions.
struct Line {
  double nx = 1;
  double ny = 0;
  double c = 0;

  double value(Point p) const { return nx * p.x + ny * p.y - c; }
  bool positive(Point p) const { return value(p) >= -kSideTolerance; }

  // Canonicalises an arbitrary (not necessarily unit) normal.
  static Line from_normal(double nx, double ny, double c);
  // Line through two distinct points. The points are ordered before the
  // computation so both argument orders give bit-identical lines.
  static Line through(Point a, Point b);
};

// Sign of p relative to the line: +1, -1, or 0 within tolerance.
int strict_side(const Line& l, Point p);

std::optional<Point> intersect(const Line& a, const Line& b);

// One half-plane of a region: the positive side of `line`, or its complement.
struct SideConstraint {
  Line line;
  bool positive = true;
  bool contains(Point p) const { return line.positive(p) == positive; }
};

// Intersection of half-planes; an empty constraint list is the whole plane.
struct Region {
  std::vector<SideConstraint> constraints;
  bool empty = false;
  bool contains(Point p) const {
    if (empty) return false;
    for (const auto& s : constraints)
      if (!s.contains(p)) return false;
    return true;
  }
};

// Constraint keeping the side of `line` that holds `inside`; nullopt if
// `inside` lies on the line.
std::optional<SideConstraint> side_containing(const Line& line, Point inside);
std::optional<SideConstraint> side_excluding(const Line& line, Point outside);

// Triangle with vertex pa on line la, pb on line lb and apex la ∩ lb. The
// result is an empty region when the triangle has no area.
Region triangle_region(const Line& la, const Line& lb, Point pa, Point pb, Point apex);
double triangle_area(Point a, Point b, Point c);

}  // namespace tit::geometry
