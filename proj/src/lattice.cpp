#include "tit/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tit {

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

void for_each_lattice_point_in_hull(const std::vector<LatticePoint>& hull,
                                    const std::function<void(std::int64_t, std::int64_t)>& visit) {
  if (hull.empty()) return;
  if (hull.size() == 1) {
    visit(hull[0].x, hull[0].y);
    return;
  }
  if (hull.size() == 2) {
    const auto& a = hull[0];
    const auto& b = hull[1];
    const std::int64_t dx = b.x - a.x;
    const std::int64_t dy = b.y - a.y;
    const std::int64_t g = std::gcd(std::llabs(dx), std::llabs(dy));
    for (std::int64_t t = 0; t <= g; ++t) visit(a.x + dx / g * t, a.y + dy / g * t);
    return;
  }
  std::int64_t ymin = hull[0].y, ymax = hull[0].y;
  for (const auto& p : hull) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const std::size_t m = hull.size();
  for (std::int64_t y = ymin; y <= ymax; ++y) {
    // The row meets the hull in an interval; its endpoints are rational
    // crossings of the edges, tracked as exact fractions.
    bool any = false;
    std::int64_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& a = hull[i];
      const auto& b = hull[(i + 1) % m];
      if ((y < std::min(a.y, b.y)) || (y > std::max(a.y, b.y))) continue;
      std::int64_t left, right;
      if (a.y == b.y) {
        left = std::min(a.x, b.x);
        right = std::max(a.x, b.x);
      } else {
        // x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y)
        std::int64_t num = a.x * (b.y - a.y) + (y - a.y) * (b.x - a.x);
        std::int64_t den = b.y - a.y;
        if (den < 0) {
          num = -num;
          den = -den;
        }
        left = ceil_div(num, den);
        right = floor_div(num, den);
      }
      // Rounding each crossing inward and merging by min/max yields the
      // lattice range of the exact rational interval.
      lo = any ? std::min(lo, left) : left;
      hi = any ? std::max(hi, right) : right;
      any = true;
    }
    if (!any) continue;
    for (std::int64_t x = lo; x <= hi; ++x) visit(x, y);
  }
}

std::int64_t lattice_points_in_hull(const std::vector<LatticePoint>& hull) {
  std::int64_t count = 0;
  for_each_lattice_point_in_hull(hull, [&](std::int64_t, std::int64_t) { ++count; });
  return count;
}

std::int64_t twice_area(const std::vector<LatticePoint>& poly) {
  std::int64_t s = 0;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % m];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

std::int64_t boundary_lattice_points(const std::vector<LatticePoint>& poly) {
  std::int64_t s = 0;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % m];
    s += std::gcd(std::llabs(b.x - a.x), std::llabs(b.y - a.y));
  }
  return s;
}

double perimeter(const std::vector<LatticePoint>& poly) {
  double s = 0;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % m];
    s += std::hypot(static_cast<double>(b.x - a.x), static_cast<double>(b.y - a.y));
  }
  return s;
}

namespace {

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
  return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
                        const LatticePoint& d) {
  const int d1 = sign(cross(a, b, c));
  const int d2 = sign(cross(a, b, d));
  const int d3 = sign(cross(c, d, a));
  const int d4 = sign(cross(c, d, b));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

// Closed containment of p in a hull with at least three vertices.
bool inside_polygon(const std::vector<LatticePoint>& hull, const LatticePoint& p) {
  const std::size_t m = hull.size();
  int orientation = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const int s = sign(cross(hull[i], hull[(i + 1) % m], p));
    if (s == 0) continue;
    if (orientation == 0) orientation = s;
    else if (s != orientation) return false;
  }
  return true;
}

bool point_in_hull(const std::vector<LatticePoint>& hull, const LatticePoint& p) {
  if (hull.size() == 1) return hull[0] == p;
  if (hull.size() == 2) return on_segment(hull[0], hull[1], p);
  return inside_polygon(hull, p);
}

}  // namespace

bool hulls_intersect(const std::vector<LatticePoint>& a, const std::vector<LatticePoint>& b) {
  if (a.empty() || b.empty()) return false;
  for (const auto& p : a)
    if (point_in_hull(b, p)) return true;
  for (const auto& p : b)
    if (point_in_hull(a, p)) return true;
  if (a.size() < 2 || b.size() < 2) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (segments_intersect(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()])) return true;
  return false;
}

}  // namespace tit
