#pragma once

// Exhaustive reference implementations used only by the tests. They share
// no code with the library beyond BinaryImage itself: every family of
// property images is enumerated from scratch and distances are minimised by
// popcount over the whole family.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <vector>

#include "tit/image.hpp"

namespace brute {

using Mask = std::uint64_t;

inline Mask to_mask(const tit::BinaryImage& m) {
  Mask mask = 0;
  for (int y = 0; y < m.n(); ++y)
    for (int x = 0; x < m.n(); ++x)
      if (m.get(x, y)) mask |= Mask{1} << (y * m.n() + x);
  return mask;
}

inline tit::BinaryImage from_mask(Mask mask, int n) {
  tit::BinaryImage m(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) m.set(x, y, (mask >> (y * n + x)) & 1);
  return m;
}

// One step of 4-neighbour growth of `seed` inside an n x n board.
inline Mask grow(Mask seed, int n) {
  Mask notLeftCol = 0, notRightCol = 0;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      const Mask bit = Mask{1} << (y * n + x);
      if (x != 0) notLeftCol |= bit;
      if (x != n - 1) notRightCol |= bit;
    }
  const Mask all = n * n == 64 ? ~Mask{0} : (Mask{1} << (n * n)) - 1;
  return (seed | ((seed & notRightCol) << 1) | ((seed & notLeftCol) >> 1) | (seed << n) | (seed >> n)) & all;
}

inline Mask flood(Mask seed, Mask within, int n) {
  seed &= within;
  for (;;) {
    const Mask next = grow(seed, n) & within;
    if (next == seed) return seed;
    seed = next;
  }
}

inline Mask border_ring(int n) {
  Mask ring = 0;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (x == 0 || y == 0 || x == n - 1 || y == n - 1) ring |= Mask{1} << (y * n + x);
  return ring;
}

inline bool border_connected(Mask img, int n) { return flood(img & border_ring(n), img, n) == img; }

inline bool connected(Mask img, int n) {
  if (img == 0) return true;
  return flood(img & (~img + 1), img, n) == img;
}

// Every image of the family, by exhaustive enumeration of all 2^(n*n) masks.
template <class Pred>
std::vector<Mask> enumerate_family(int n, Pred pred) {
  std::vector<Mask> out;
  const Mask total = Mask{1} << (n * n);
  for (Mask m = 0; m < total; ++m)
    if (pred(m)) out.push_back(m);
  return out;
}

inline long min_flips(Mask img, const std::vector<Mask>& family) {
  int best = 64;
  for (Mask f : family) best = std::min(best, std::popcount(img ^ f));
  return best;
}

// Convexity: the closed hull of the black centers contains no white center.
// The hull test is a plain O(h*n^2) cross-product scan over a gift-wrapped hull.
inline bool convex(Mask img, int n) {
  std::vector<std::pair<long, long>> pts;
  for (int i = 0; i < n * n; ++i)
    if ((img >> i) & 1) pts.push_back({i % n, i / n});
  if (pts.size() <= 1) return true;
  const auto cross = [](std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  // Gift wrapping, keeping the farthest point on collinear ties.
  std::vector<std::pair<long, long>> hull;
  auto start = *std::min_element(pts.begin(), pts.end());
  auto cur = start;
  do {
    hull.push_back(cur);
    auto cand = pts[0] == cur ? pts[1] : pts[0];
    for (const auto& p : pts) {
      if (p == cur) continue;
      const long c = cross(cur, cand, p);
      const auto d2 = [&](std::pair<long, long> q) {
        return (q.first - cur.first) * (q.first - cur.first) + (q.second - cur.second) * (q.second - cur.second);
      };
      if (c < 0 || (c == 0 && d2(p) > d2(cand))) cand = p;
    }
    cur = cand;
  } while (cur != start && hull.size() <= pts.size());
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if ((img >> (y * n + x)) & 1) continue;
      const std::pair<long, long> q{x, y};
      bool inside = true;
      if (hull.size() == 2) {
        inside = cross(hull[0], hull[1], q) == 0 &&
                 std::min(hull[0].first, hull[1].first) <= x && x <= std::max(hull[0].first, hull[1].first) &&
                 std::min(hull[0].second, hull[1].second) <= y && y <= std::max(hull[0].second, hull[1].second);
      } else {
        // The wrap turns one way; the point is inside when it never lies on
        // the outer side of an edge.
        int sign = 0;
        for (std::size_t i = 0; i < hull.size() && inside; ++i) {
          const long c = cross(hull[i], hull[(i + 1) % hull.size()], q);
          if (c == 0) continue;
          const int s = c > 0 ? 1 : -1;
          if (sign == 0) sign = s;
          else if (s != sign) inside = false;
        }
      }
      if (inside) return false;
    }
  return true;
}

// Half-plane images, collected by thresholding pixel projections along a
// dense set of generic angles. For n <= 6 every dichotomy cut by a line is an
// arc of angles of width roughly 1/50 rad, so 4096 angles hit each arc.
inline std::vector<Mask> halfplane_family(int n) {
  std::set<Mask> fam;
  const int steps = 4096;
  for (int i = 0; i < steps; ++i) {
    const double phi = (i + 0.318309886) * 2 * std::numbers::pi / steps;
    std::vector<std::pair<double, int>> proj;
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) proj.push_back({x * std::cos(phi) + y * std::sin(phi), y * n + x});
    std::sort(proj.begin(), proj.end());
    Mask black = 0;
    fam.insert(black);
    for (auto it = proj.rbegin(); it != proj.rend(); ++it) {
      black |= Mask{1} << it->second;
      fam.insert(black);
    }
  }
  return {fam.begin(), fam.end()};
}

}  // namespace brute
