#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace tit {

// Exact integer geometry on pixel centers.
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint& a, const LatticePoint& b) {
    if (a.x != b.x) return a.x <=> b.x;
    return a.y <=> b.y;
  }
};

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b);

// Convex hull with collinear points removed, counter-clockwise in the
// (x right, y down) frame as produced by Andrew's monotone chain.
// Returns 0, 1 or 2 points for degenerate input.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts);

// Visits every lattice point of the closed hull (polygon, segment or point).
void for_each_lattice_point_in_hull(const std::vector<LatticePoint>& hull,
                                    const std::function<void(std::int64_t, std::int64_t)>& visit);
std::int64_t lattice_points_in_hull(const std::vector<LatticePoint>& hull);

// Twice the signed shoelace area.
std::int64_t twice_area(const std::vector<LatticePoint>& poly);
// Lattice points on the polygon boundary, sum of gcd over edges.
std::int64_t boundary_lattice_points(const std::vector<LatticePoint>& poly);
double perimeter(const std::vector<LatticePoint>& poly);

// Whether two closed convex hulls (each possibly degenerate) share a point.
bool hulls_intersect(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b);

}  // namespace tit
