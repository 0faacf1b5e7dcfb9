#include "tit/predicates.hpp"

#include <queue>

namespace tit {

std::vector<LatticePoint> black_points(const BinaryImage& m) {
  std::vector<LatticePoint> pts;
  for (int y = 0; y < m.n(); ++y)
    for (int x = 0; x < m.n(); ++x)
      if (m.get(x, y)) pts.push_back({x, y});
  return pts;
}

bool is_halfplane(const BinaryImage& m) {
  std::vector<LatticePoint> black, white;
  for (int y = 0; y < m.n(); ++y)
    for (int x = 0; x < m.n(); ++x) (m.get(x, y) ? black : white).push_back({x, y});
  if (black.empty() || white.empty()) return true;
  // Finite point sets are separable by a closed half-plane exactly when their
  // hulls are disjoint: shrink the threshold until no white point is on it.
  return !hulls_intersect(convex_hull(black), convex_hull(white));
}

bool is_convex(const BinaryImage& m) {
  const auto pts = black_points(m);
  if (pts.empty()) return true;
  const auto hull = convex_hull(pts);
  bool ok = true;
  for_each_lattice_point_in_hull(hull, [&](std::int64_t x, std::int64_t y) {
    if (ok && !m.get(static_cast<int>(x), static_cast<int>(y))) ok = false;
  });
  return ok;
}

namespace {

// Flood fill from the given seeds; returns the visited mask.
std::vector<std::uint8_t> flood(const BinaryImage& m, const std::vector<LatticePoint>& seeds) {
  const int n = m.n();
  std::vector<std::uint8_t> seen(m.pixel_count(), 0);
  std::queue<LatticePoint> q;
  for (const auto& s : seeds) {
    const auto idx = static_cast<std::size_t>(s.y) * n + s.x;
    if (m.get(static_cast<int>(s.x), static_cast<int>(s.y)) && !seen[idx]) {
      seen[idx] = 1;
      q.push(s);
    }
  }
  static constexpr int dx[4] = {1, -1, 0, 0};
  static constexpr int dy[4] = {0, 0, 1, -1};
  while (!q.empty()) {
    const auto p = q.front();
    q.pop();
    for (int d = 0; d < 4; ++d) {
      const std::int64_t x = p.x + dx[d], y = p.y + dy[d];
      if (x < 0 || y < 0 || x >= n || y >= n) continue;
      const auto idx = static_cast<std::size_t>(y) * n + x;
      if (seen[idx] || !m.get(static_cast<int>(x), static_cast<int>(y))) continue;
      seen[idx] = 1;
      q.push({x, y});
    }
  }
  return seen;
}

}  // namespace

std::vector<std::vector<LatticePoint>> connected_components(const BinaryImage& m) {
  const int n = m.n();
  std::vector<int> label(m.pixel_count(), -1);
  std::vector<std::vector<LatticePoint>> comps;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const auto idx = static_cast<std::size_t>(y) * n + x;
      if (!m.get(x, y) || label[idx] >= 0) continue;
      const int id = static_cast<int>(comps.size());
      comps.emplace_back();
      std::vector<LatticePoint> stack{{x, y}};
      label[idx] = id;
      while (!stack.empty()) {
        const auto p = stack.back();
        stack.pop_back();
        comps[id].push_back(p);
        const LatticePoint nb[4] = {{p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + 1}, {p.x, p.y - 1}};
        for (const auto& q : nb) {
          if (q.x < 0 || q.y < 0 || q.x >= n || q.y >= n) continue;
          const auto qi = static_cast<std::size_t>(q.y) * n + q.x;
          if (label[qi] >= 0 || !m.get(static_cast<int>(q.x), static_cast<int>(q.y))) continue;
          label[qi] = id;
          stack.push_back(q);
        }
      }
    }
  }
  return comps;
}

bool is_connected(const BinaryImage& m) { return connected_components(m).size() <= 1; }

bool is_border_connected(const BinaryImage& m) {
  const int n = m.n();
  std::vector<LatticePoint> seeds;
  for (int t = 0; t < n; ++t) {
    seeds.push_back({t, 0});
    seeds.push_back({t, n - 1});
    seeds.push_back({0, t});
    seeds.push_back({n - 1, t});
  }
  const auto seen = flood(m, seeds);
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (m.bits()[i] && !seen[i]) return false;
  return true;
}

BinaryImage rasterize_hull(int n, const std::vector<LatticePoint>& pts) {
  BinaryImage img(n);
  for_each_lattice_point_in_hull(convex_hull(pts), [&](std::int64_t x, std::int64_t y) {
    if (x >= 0 && y >= 0 && x < n && y < n) img.set(static_cast<int>(x), static_cast<int>(y), true);
  });
  return img;
}

}  // namespace tit
