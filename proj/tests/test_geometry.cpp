#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "support/brute_force.hpp"
#include "tit/geometry.hpp"
#include "tit/lattice.hpp"
#include "tit/predicates.hpp"

using namespace tit;

TEST_CASE("hull of a square drops collinear points") {
  std::vector<LatticePoint> pts;
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; y <= 3; ++y) pts.push_back({x, y});
  const auto hull = convex_hull(pts);
  CHECK(hull.size() == 4);
  CHECK(twice_area(hull) == 18);
  CHECK(boundary_lattice_points(hull) == 12);
  CHECK(lattice_points_in_hull(hull) == 16);
  CHECK(perimeter(hull) == doctest::Approx(12));
}

TEST_CASE("degenerate hulls") {
  CHECK(convex_hull({}).empty());
  CHECK(convex_hull({{2, 3}, {2, 3}}).size() == 1);
  const auto seg = convex_hull({{0, 0}, {2, 2}, {4, 4}});
  CHECK(seg.size() == 2);
  CHECK(lattice_points_in_hull(seg) == 5);
  CHECK(lattice_points_in_hull({{1, 1}}) == 1);
}

TEST_CASE("Pick's theorem holds for random hulls") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> coord(-20, 20);
  for (int t = 0; t < 300; ++t) {
    std::vector<LatticePoint> pts(3 + t % 8);
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    const auto hull = convex_hull(pts);
    if (hull.size() < 3) continue;
    const auto a2 = std::abs(twice_area(hull));
    const auto b = boundary_lattice_points(hull);
    // 2A = 2I + B - 2 with I the interior count.
    const auto interior = (a2 - b + 2) / 2;
    CHECK(lattice_points_in_hull(hull) == interior + b);
    long visited = 0;
    for_each_lattice_point_in_hull(hull, [&](std::int64_t, std::int64_t) { ++visited; });
    CHECK(visited == interior + b);
  }
}

TEST_CASE("hull intersection") {
  const std::vector<LatticePoint> tri{{0, 0}, {4, 0}, {0, 4}};
  CHECK(hulls_intersect(tri, {{2, 2}}));
  CHECK_FALSE(hulls_intersect(tri, {{3, 3}}));
  CHECK(hulls_intersect(tri, {{3, 3}, {1, 1}}));
  CHECK_FALSE(hulls_intersect(tri, {{5, 0}, {5, 5}}));
}

TEST_CASE("predicates agree with exhaustive references on small boards") {
  for (int n : {2, 3, 4}) {
    const auto hp = brute::halfplane_family(n);
    std::set<brute::Mask> hpSet(hp.begin(), hp.end());
    const brute::Mask total = brute::Mask{1} << (n * n);
    for (brute::Mask mask = 0; mask < total; ++mask) {
      const auto m = brute::from_mask(mask, n);
      CHECK(is_connected(m) == brute::connected(mask, n));
      CHECK(is_border_connected(m) == brute::border_connected(mask, n));
      CHECK(is_convex(m) == brute::convex(mask, n));
      CHECK(is_halfplane(m) == (hpSet.count(mask) == 1));
    }
  }
}

TEST_CASE("connected components partition the black pixels") {
  const auto m = BinaryImage::from_rows({{1, 0, 1}, {1, 0, 0}, {0, 0, 1}});
  const auto comps = connected_components(m);
  CHECK(comps.size() == 3);
  std::size_t total = 0;
  for (const auto& c : comps) total += c.size();
  CHECK(total == m.black_count());
}

TEST_CASE("rasterized hulls are convex") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coord(0, 15);
  for (int t = 0; t < 100; ++t) {
    std::vector<LatticePoint> pts(1 + t % 6);
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    const auto m = rasterize_hull(16, pts);
    CHECK(is_convex(m));
    for (const auto& p : pts) CHECK(m.get(static_cast<int>(p.x), static_cast<int>(p.y)));
    CHECK(static_cast<long>(m.black_count()) == lattice_points_in_hull(convex_hull(pts)));
  }
}

TEST_CASE("lines are canonical and side tests are disjoint") {
  using namespace geometry;
  const Line a = Line::through({0, 0}, {2, 1});
  const Line b = Line::through({2, 1}, {0, 0});
  CHECK(a.nx == b.nx);
  CHECK(a.ny == b.ny);
  CHECK(a.c == b.c);
  CHECK(a.positive({1, 0.5}));
  CHECK(strict_side(a, {1, 0.5}) == 0);
  const auto p = intersect(Line::from_normal(1, 0, 1), Line::from_normal(0, 2, 4));
  REQUIRE(p);
  CHECK(p->x == doctest::Approx(1));
  CHECK(p->y == doctest::Approx(2));
  CHECK_FALSE(intersect(Line::from_normal(1, 0, 1), Line::from_normal(2, 0, 5)));
  const auto pos = side_containing(a, {0, 5});
  REQUIRE(pos);
  CHECK(pos->contains({0, 5}));
  CHECK_FALSE(pos->contains({5, 0}));
  CHECK_FALSE(side_containing(a, {2, 1}));
}

TEST_CASE("triangle regions") {
  using namespace geometry;
  const Line la = Line::from_normal(0, 1, 0);  // y = 0
  const Line lb = Line::from_normal(1, 0, 0);  // x = 0
  const Region t = triangle_region(la, lb, {4, 0}, {0, 4}, {0, 0});
  CHECK_FALSE(t.empty);
  CHECK(t.contains({1, 1}));
  CHECK_FALSE(t.contains({3, 3}));
  CHECK(triangle_area({4, 0}, {0, 4}, {0, 0}) == doctest::Approx(8));
  CHECK(triangle_region(la, lb, {0, 0}, {0, 4}, {0, 0}).empty);
}
