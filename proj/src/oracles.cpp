#include "tit/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "tit/errors.hpp"
#include "tit/lattice.hpp"

namespace tit::oracles {

namespace {

void check_budget(const BinaryImage& m, int budget, const char* name) {
  if (m.n() > budget)
    throw ResourceError(std::string(name) + " oracle budget is n <= " + std::to_string(budget) +
                        ", got n=" + std::to_string(m.n()));
}

std::uint32_t to_mask(const BinaryImage& m) {
  std::uint32_t mask = 0;
  for (int y = 0; y < m.n(); ++y)
    for (int x = 0; x < m.n(); ++x)
      if (m.get(x, y)) mask |= 1u << (y * m.n() + x);
  return mask;
}

double relative(std::size_t flips, int n) {
  return n == 0 ? 0.0 : static_cast<double>(flips) / (static_cast<double>(n) * n);
}

// Bit-parallel flood fill on a k x k grid packed row-major into 32 bits.
struct SmallGrid {
  int k;
  std::uint32_t full, notCol0, notColLast, border;

  explicit SmallGrid(int side) : k(side) {
    full = side * side == 32 ? ~0u : ((1u << (side * side)) - 1);
    notCol0 = notColLast = full;
    border = 0;
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x) {
        const std::uint32_t bit = 1u << (y * side + x);
        if (x == 0) notCol0 &= ~bit;
        if (x == side - 1) notColLast &= ~bit;
        if (x == 0 || y == 0 || x == side - 1 || y == side - 1) border |= bit;
      }
  }

  std::uint32_t flood(std::uint32_t seed, std::uint32_t within) const {
    std::uint32_t cur = seed & within;
    while (true) {
      std::uint32_t next = cur | ((cur << 1) & notCol0) | ((cur >> 1) & notColLast) | (cur << k) | (cur >> k);
      next &= within;
      if (next == cur) return cur;
      cur = next;
    }
  }

  bool connected(std::uint32_t mask) const {
    if (mask == 0) return true;
    return flood(mask & (~mask + 1), mask) == mask;
  }

  bool border_connected(std::uint32_t mask) const { return flood(mask & border, mask) == mask; }
};

// Smallest number of flips turning `mask` into a member of the predicate's
// class, searching flip sets in order of increasing size. Every flip set of
// size below the answer is examined, so the result is exact.
template <class Pred>
std::size_t min_flips(std::uint32_t mask, int bits, Pred pred) {
  std::vector<int> idx;
  for (int r = 0; r <= bits; ++r) {
    idx.resize(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::uint32_t flip = 0;
      for (int i : idx) flip |= 1u << i;
      if (pred(mask ^ flip)) return static_cast<std::size_t>(r);
      int i = r - 1;
      while (i >= 0 && idx[i] == bits - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return static_cast<std::size_t>(bits);
}

// Number of lattice points in the closed hull of the points of `mask`.
std::int64_t hull_lattice_count(std::uint32_t mask, int n) {
  std::vector<LatticePoint> pts;
  for (int i = 0; i < n * n; ++i)
    if (mask >> i & 1) pts.push_back({i % n, i / n});
  const auto hull = convex_hull(pts);
  if (hull.size() <= 2) return lattice_points_in_hull(hull);
  // Pick: total = A + B/2 + 1.
  return (std::llabs(twice_area(hull)) + boundary_lattice_points(hull)) / 2 + 1;
}

// All convex subsets of the n x n grid. Removing an extreme point of a convex
// lattice set leaves a convex lattice set, so growing sets one point at a time
// from the empty set reaches the whole family.
std::vector<std::uint32_t> build_convex_family(int n) {
  const int cells = n * n;
  std::unordered_set<std::uint32_t> seen{0u};
  std::vector<std::uint32_t> family{0u};
  for (std::size_t head = 0; head < family.size(); ++head) {
    const std::uint32_t c = family[head];
    const int size = std::popcount(c);
    for (int p = 0; p < cells; ++p) {
      const std::uint32_t next = c | (1u << p);
      if (next == c || seen.count(next)) continue;
      if (hull_lattice_count(next, n) != size + 1) continue;
      seen.insert(next);
      family.push_back(next);
    }
  }
  return family;
}

const std::vector<std::uint32_t>& convex_family(int n) {
  static std::array<std::once_flag, OracleBudget::convexity + 1> once;
  static std::array<std::vector<std::uint32_t>, OracleBudget::convexity + 1> families;
  std::call_once(once[n], [n] { families[n] = build_convex_family(n); });
  return families[n];
}

struct IntDir {
  std::int64_t x, y;
};

// Angular order on nonzero integer vectors, starting at the positive x axis.
bool angle_less(const IntDir& a, const IntDir& b) {
  const auto half = [](const IntDir& d) { return d.y < 0 || (d.y == 0 && d.x < 0); };
  const bool ha = half(a), hb = half(b);
  if (ha != hb) return !ha;
  return a.x * b.y - a.y * b.x > 0;
}

}  // namespace

double oracle_halfplane_distance(const BinaryImage& m) {
  check_budget(m, OracleBudget::halfplane, "half-plane");
  const int n = m.n();
  const std::size_t total = m.pixel_count();
  const std::size_t blacks = m.black_count();
  // Constant images.
  std::size_t best = std::min(blacks, total - blacks);
  if (n <= 1) return relative(best, n);

  std::vector<IntDir> normals;
  for (int dx = -(n - 1); dx <= n - 1; ++dx)
    for (int dy = -(n - 1); dy <= n - 1; ++dy) {
      if ((dx == 0 && dy == 0) || std::gcd(std::abs(dx), std::abs(dy)) != 1) continue;
      normals.push_back({-dy, dx});
    }
  std::sort(normals.begin(), normals.end(), angle_less);

  struct Pix {
    std::int64_t proj;
    bool black;
  };
  std::vector<Pix> pix(total);
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const IntDir& a = normals[i];
    const IntDir& b = normals[(i + 1) % normals.size()];
    // Consecutive critical normals are less than pi apart, so their sum lies
    // strictly inside the arc between them.
    const IntDir u{a.x + b.x, a.y + b.y};
    std::size_t k = 0;
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) pix[k++] = {u.x * x + u.y * y, m.get(x, y)};
    std::sort(pix.begin(), pix.end(), [](const Pix& p, const Pix& q) { return p.proj < q.proj; });
    // Threshold after position j: pixels [j, total) are black.
    std::size_t blackBelow = 0, whiteAbove = total - blacks;
    for (std::size_t j = 0; j <= total; ++j) {
      best = std::min(best, blackBelow + whiteAbove);
      if (j == total) break;
      if (pix[j].black) ++blackBelow;
      else --whiteAbove;
    }
  }
  return relative(best, n);
}

double oracle_convexity_distance(const BinaryImage& m) {
  check_budget(m, OracleBudget::convexity, "convexity");
  const std::uint32_t mask = to_mask(m);
  int best = m.n() * m.n();
  for (std::uint32_t c : convex_family(m.n())) best = std::min(best, std::popcount(mask ^ c));
  return relative(static_cast<std::size_t>(best), m.n());
}

double oracle_connectedness_distance(const BinaryImage& m) {
  check_budget(m, OracleBudget::connectedness, "connectedness");
  if (m.n() == 0) return 0.0;
  const SmallGrid g(m.n());
  return relative(min_flips(to_mask(m), m.n() * m.n(), [&](std::uint32_t c) { return g.connected(c); }),
                  m.n());
}

double oracle_border_connectedness_distance(const BinaryImage& s) {
  check_budget(s, OracleBudget::borderConnectedness, "border-connectedness");
  if (s.n() == 0) return 0.0;
  const SmallGrid g(s.n());
  return relative(
      min_flips(to_mask(s), s.n() * s.n(), [&](std::uint32_t c) { return g.border_connected(c); }), s.n());
}

}  // namespace tit::oracles
