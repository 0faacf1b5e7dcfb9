#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support/brute_force.hpp"
#include "tit/connectedness.hpp"
#include "tit/convexity.hpp"
#include "tit/errors.hpp"
#include "tit/gen.hpp"
#include "tit/halfplane.hpp"
#include "tit/oracles.hpp"
#include "tit/predicates.hpp"

using namespace tit;

namespace {

BinaryImage random_image(int n, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  BinaryImage m(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) m.set(x, y, coin(rng));
  return m;
}

double brute_distance(const BinaryImage& m, const std::vector<brute::Mask>& family) {
  return static_cast<double>(brute::min_flips(brute::to_mask(m), family)) / (m.n() * m.n());
}

}  // namespace

// ---- half-plane ----

TEST_CASE("half-plane parameter formulas") {
  CHECK(halfplane::offset_spacing(100, 0.1) == doctest::Approx(10 / std::sqrt(2.0)));
  CHECK(halfplane::sample_size(0.1) == static_cast<std::size_t>(std::ceil(600 * std::log(70.0))));
  const auto dirs = halfplane::make_directions(0.1);
  CHECK(dirs.angles.size() == static_cast<std::size_t>(std::ceil(2 * std::numbers::pi / 0.1)));
  for (std::size_t i = 0; i < dirs.angles.size(); ++i) CHECK(dirs.angles[i] == doctest::Approx(0.1 * i));
  CHECK_THROWS_AS(halfplane::estimate_halfplane_distance(BinaryImage(8), 0.25, 1), ParameterError);
  CHECK_THROWS_AS(halfplane::estimate_halfplane_distance(BinaryImage(8), 0.0, 1), ParameterError);
}

TEST_CASE("offset range spans all-black to all-white") {
  const int n = 20;
  const double a = halfplane::offset_spacing(n, 0.1);
  for (double phi : {0.0, 0.3, 1.7, 3.0, 4.4, 6.0}) {
    const auto range = halfplane::offset_range(n, phi, a);
    const auto first = halfplane::render_halfplane({phi, range.first * a, n});
    const auto last = halfplane::render_halfplane({phi, range.last * a, n});
    CHECK(first.black_count() == static_cast<std::size_t>(n * n));
    CHECK(last.black_count() == 0);
  }
}

TEST_CASE("rendered half-planes satisfy the predicate") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi), off(-10, 30);
  for (int t = 0; t < 200; ++t) CHECK(is_halfplane(halfplane::render_halfplane({ang(rng), off(rng), 16})));
}

TEST_CASE("half-plane estimate is zero on grid-aligned half-planes") {
  const int n = 40;
  const double delta = 0.2;
  const auto dirs = halfplane::make_directions(delta);
  const double a = halfplane::offset_spacing(n, delta);
  for (std::size_t i = 0; i < dirs.angles.size(); i += 3) {
    const auto m = halfplane::render_halfplane({dirs.angles[i], 2 * a, n});
    CHECK(halfplane::estimate_halfplane_distance(m, delta, i).dhat == 0);
  }
}

TEST_CASE("half-plane estimates are deterministic and bounded") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto m = random_image(30, rng);
    const auto e1 = halfplane::estimate_halfplane_distance(m, 0.2, t);
    const auto e2 = halfplane::estimate_halfplane_distance(m, 0.2, t);
    CHECK(e1.dhat == e2.dhat);
    CHECK(e1.dhat >= 0);
    CHECK(e1.dhat <= 0.5);
  }
}

TEST_CASE("half-plane hypothesis is a half-plane") {
  const auto planted = gen::add_noise(gen::gen_halfplane(32, 4), 0.05, 5);
  const auto h = halfplane::learn_halfplane(planted.noisy, 0.15, 2);
  CHECK(is_halfplane(h.hypothesis));
  CHECK(relative_distance(planted.noisy, h.hypothesis) <= 0.05 + 0.15);
}

// ---- oracles against exhaustive families ----

TEST_CASE("half-plane oracle matches the exhaustive family") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3, 4, 5}) {
    const auto family = brute::halfplane_family(n);
    for (int t = 0; t < 40; ++t) {
      const auto m = random_image(n, rng, 0.2 + 0.15 * (t % 4));
      CHECK(oracles::oracle_halfplane_distance(m) == brute_distance(m, family));
    }
  }
}

TEST_CASE("convexity oracle matches the exhaustive family") {
  std::mt19937_64 rng(12);
  for (int n : {2, 3, 4}) {
    const auto family = brute::enumerate_family(n, [n](brute::Mask x) { return brute::convex(x, n); });
    for (int t = 0; t < 40; ++t) {
      const auto m = random_image(n, rng);
      CHECK(oracles::oracle_convexity_distance(m) == brute_distance(m, family));
    }
  }
}

TEST_CASE("connectedness oracles match the exhaustive families") {
  std::mt19937_64 rng(13);
  for (int n : {2, 3, 4}) {
    const auto conn = brute::enumerate_family(n, [n](brute::Mask x) { return brute::connected(x, n); });
    const auto border = brute::enumerate_family(n, [n](brute::Mask x) { return brute::border_connected(x, n); });
    for (int t = 0; t < 40; ++t) {
      const auto m = random_image(n, rng);
      CHECK(oracles::oracle_connectedness_distance(m) == brute_distance(m, conn));
      CHECK(oracles::oracle_border_connectedness_distance(m) == brute_distance(m, border));
    }
  }
}

TEST_CASE("oracles refuse inputs beyond their budget") {
  CHECK_THROWS_AS(oracles::oracle_halfplane_distance(BinaryImage(oracles::OracleBudget::halfplane + 1)),
                  ResourceError);
  CHECK_THROWS_AS(oracles::oracle_convexity_distance(BinaryImage(oracles::OracleBudget::convexity + 1)),
                  ResourceError);
  CHECK_THROWS_AS(oracles::oracle_connectedness_distance(BinaryImage(oracles::OracleBudget::connectedness + 1)),
                  ResourceError);
}

TEST_CASE("oracle distances vanish exactly on members") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_image(5, rng);
    CHECK((oracles::oracle_halfplane_distance(m) == 0) == is_halfplane(m));
    CHECK((oracles::oracle_convexity_distance(m) == 0) == is_convex(m));
    CHECK((oracles::oracle_border_connectedness_distance(m) == 0) == is_border_connected(m));
  }
}

// ---- connectedness ----

TEST_CASE("blocks of a row coloring") {
  using connectedness::blocks_of;
  CHECK(blocks_of(0, 5).empty());
  CHECK(blocks_of(0b10110, 5) == std::vector<std::pair<int, int>>{{1, 2}, {4, 4}});
  CHECK(blocks_of(0b11111, 5) == std::vector<std::pair<int, int>>{{0, 4}});
}

TEST_CASE("status vectors encode nested components") {
  using connectedness::Status;
  using connectedness::construct_graph;
  // Three blocks, the outer two joined below this row.
  const auto g = construct_graph(0b10101, 5, {Status::Open, Status::Isolated, Status::Close});
  REQUIRE(g);
  CHECK(*g == std::vector<std::pair<int, int>>{{0, 2}});
  CHECK_FALSE(construct_graph(0b10101, 5, {Status::Open, Status::Isolated, Status::Isolated}));
  CHECK_FALSE(construct_graph(0b101, 3, {Status::Close, Status::Open}));
  CHECK_FALSE(construct_graph(0b10101, 5, {Status::Open, Status::Border, Status::Close}));
  CHECK_THROWS_AS(construct_graph(0b101, 3, {Status::Open}), ParameterError);
  CHECK(connectedness::status_symbol(Status::Middle) == 'x');
}

TEST_CASE("compute_status follows one row step") {
  using connectedness::Status;
  using connectedness::compute_status;
  // A single interior block continues into the next row.
  auto st = compute_status(0b010, {Status::Isolated}, 0b010, 3, false);
  REQUIRE(st);
  CHECK(*st == connectedness::StatusVector{Status::Isolated});
  // It dies out without touching the border: infeasible.
  CHECK_FALSE(compute_status(0b010, {Status::Isolated}, 0b000, 3, false));
  // Reaching the last row counts as border contact.
  st = compute_status(0b010, {Status::Isolated}, 0b010, 3, true);
  REQUIRE(st);
  CHECK(*st == connectedness::StatusVector{Status::Border});
  // Touching the side columns counts as border contact.
  st = compute_status(0b010, {Status::Isolated}, 0b011, 3, false);
  REQUIRE(st);
  CHECK(*st == connectedness::StatusVector{Status::Border});
}

TEST_CASE("border DP matches enumeration and reports per-row data") {
  std::mt19937_64 rng(21);
  const auto family = brute::enumerate_family(4, [](brute::Mask x) { return brute::border_connected(x, 4); });
  for (int t = 0; t < 100; ++t) {
    const auto m = random_image(4, rng, 0.3 + 0.1 * (t % 4));
    const auto r = connectedness::border_connectedness_dp(m);
    CHECK(r.cost == brute::min_flips(brute::to_mask(m), family));
    CHECK(r.distance == doctest::Approx(r.cost / 16.0));
    CHECK(r.statesPerRow.size() == 4);
    CHECK(r.minCostPerRow.size() == 4);
    for (std::size_t i = 1; i < r.minCostPerRow.size(); ++i) CHECK(r.minCostPerRow[i] >= r.minCostPerRow[i - 1]);
  }
  CHECK_THROWS_AS(connectedness::border_connectedness_dp(BinaryImage(6), 5), ResourceError);
}

TEST_CASE("padding and partition") {
  const auto p = connectedness::pad_and_partition(100, 0.5);
  CHECK(p.r == 8);
  CHECK(p.paddedN == 105);
  CHECK(p.paddedN % p.r == 1);
  CHECK(p.squaresPerSide == 13);
  CHECK(p.squareSide == 7);
  CHECK(p.deltaPrime == doctest::Approx(0.5 * 10000.0 / (105.0 * 105.0)));
  // Grid pixels plus square pixels tile the padded image.
  CHECK(p.gridPixelCount + static_cast<long>(p.squaresPerSide) * p.squaresPerSide * p.squareSide * p.squareSide ==
        static_cast<long>(p.paddedN) * p.paddedN);
  CHECK_THROWS_AS(connectedness::pad_and_partition(10, 0.6), ParameterError);
}

TEST_CASE("connectedness estimate on tiled images has a closed form") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const auto content = random_image(7, rng, 0.35);
    const auto m = gen::tile_squares(content, 97, 8);
    const auto est = connectedness::estimate_connectedness_distance(m, 0.5, t);
    const double f = (1 - 0.5 / 4) * (1 - 1.0 / 97);
    CHECK(est.dhat == doctest::Approx(std::min(0.5, f * f * connectedness::border_connectedness_distance(content))));
    CHECK(connectedness::connectedness_full_average(m, 0.5) == doctest::Approx(est.dhat));
  }
}

TEST_CASE("connectedness estimate is zero on connected images") {
  for (int t = 0; t < 10; ++t) {
    const auto m = gen::gen_connected(65, 0.3, t);
    CHECK(connectedness::estimate_connectedness_distance(m, 0.5, t).dhat == 0);
  }
}

// ---- convexity ----

TEST_CASE("convexity presets") {
  using convexity::ConvexityConstants;
  CHECK(ConvexityConstants::by_name("paper").name == "paper");
  CHECK(ConvexityConstants::by_name("practical").name == "practical");
  CHECK_THROWS_AS(ConvexityConstants::by_name("fast"), ParameterError);
  CHECK_THROWS_AS(convexity::estimate_convexity_distance(BinaryImage(16), 0.3, 1), ParameterError);
}

TEST_CASE("reference grid pairs lie on their lines") {
  const convexity::ReferenceGrid grid(24, 0.25, convexity::ConvexityConstants::practical());
  for (std::size_t i = 0; i < grid.pairs().size(); i += 7) {
    const auto& pr = grid.pairs()[i];
    const auto& line = grid.lines()[pr.line];
    CHECK(std::abs(line.line.value(pr.pos)) < 1e-6);
    CHECK(grid.pair_id(pr.line, pr.point) == static_cast<int>(i));
    CHECK(grid.param_of(pr.line, pr.pos) == doctest::Approx(pr.point).epsilon(1e-6));
  }
  for (std::size_t d = 0; d < grid.directions().size(); ++d) {
    const auto& ids = grid.lines_of(static_cast<int>(d));
    for (std::size_t i = 1; i < ids.size(); ++i)
      CHECK(grid.lines()[ids[i]].offsetIndex > grid.lines()[ids[i - 1]].offsetIndex);
  }
}

TEST_CASE("triangle counts agree with direct region counts") {
  const int n = 16;
  const auto constants = convexity::ConvexityConstants::practical();
  const convexity::ReferenceGrid grid(n, 0.25, constants);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> coord(0, n - 1);
  std::vector<convexity::LabeledPoint> samples;
  for (int i = 0; i < 300; ++i) samples.push_back({{std::round(coord(rng)), std::round(coord(rng))}, rng() % 2 == 0});
  convexity::TriangleDp dp(grid, samples, constants.heightFactor);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(grid.pairs().size()) - 1);
  int checked = 0;
  while (checked < 500) {
    const int a = pick(rng), b = pick(rng);
    const auto region = convexity::instance_region(grid, a, b);
    if (region.empty) continue;
    ++checked;
    const auto direct = convexity::count_in_region(samples, region);
    const auto fast = dp.triangle_counts(a, b);
    CHECK(fast.black == direct.black);
    CHECK(fast.white == direct.white);
    CHECK(dp.best(a, b) <= direct.black);
  }
}

TEST_CASE("full-sample convexity trace is a consistent partition") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 12; ++t) {
    const BinaryImage m = t % 2 ? random_image(12, rng, 0.4) : gen::add_noise(gen::gen_convex(12, 6, t), 0.05, t).noisy;
    convexity::ConvexityOptions opts;
    opts.mode = SampleMode::Full;
    const auto est = convexity::estimate_convexity_distance(m, 0.25, t, opts);
    long errors = 0;
    for (const auto& r : est.trace) errors += r.errors;
    CHECK(errors == est.errorCount);
    for (int y = 0; y < m.n(); ++y)
      for (int x = 0; x < m.n(); ++x) {
        int owners = 0;
        for (const auto& r : est.trace) owners += r.region.contains({double(x), double(y)});
        CHECK(owners == 1);
      }
    const auto hyp = convexity::render_trace(m.n(), est.trace);
    CHECK(static_cast<long>(hamming_distance(m, hyp)) == est.errorCount);
    CHECK(est.dhat == doctest::Approx(std::min(0.5, est.errorCount / 144.0)));
  }
}

TEST_CASE("convexity hypothesis vertices are convex") {
  const auto h = convexity::learn_convex(gen::gen_convex(32, 7, 3), 0.25, 9);
  const auto& v = h.vertices;
  for (std::size_t i = 0; i < v.size() && v.size() >= 3; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    const auto& c = v[(i + 2) % v.size()];
    CHECK(geometry::cross(b - a, c - b) >= -1e-9);
  }
}

// ---- generators ----

TEST_CASE("generators produce members of their classes") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    CHECK(is_halfplane(gen::gen_halfplane(33, seed)));
    CHECK(is_convex(gen::gen_convex(33, 3 + seed % 10, seed)));
    const auto c = gen::gen_connected(33, 0.05 + 0.02 * seed, seed);
    CHECK(is_connected(c));
    CHECK(c.black_count() == static_cast<std::size_t>(std::lround((0.05 + 0.02 * seed) * 33 * 33)));
  }
  CHECK(gen::gen_convex(20, 5, 7) == gen::gen_convex(20, 5, 7));
  CHECK_THROWS_AS(gen::gen_convex(20, 2, 7), ParameterError);
  CHECK_THROWS_AS(gen::gen_connected(20, 0, 7), ParameterError);
}

TEST_CASE("planted noise flips exactly the recorded pixels") {
  const auto clean = gen::gen_convex(40, 6, 2);
  for (double rho : {0.0, 0.01, 0.1, 0.5, 1.0}) {
    const auto p = gen::add_noise(clean, rho, 3);
    CHECK(p.flipped.size() == static_cast<std::size_t>(std::floor(rho * 1600 + 1e-9)));
    CHECK(hamming_distance(p.clean, p.noisy) == p.flipped.size());
    for (const auto& q : p.flipped)
      CHECK(p.noisy.get(int(q.x), int(q.y)) != clean.get(int(q.x), int(q.y)));
  }
  CHECK_THROWS_AS(gen::add_noise(clean, 1.5, 3), ParameterError);
}

TEST_CASE("tiling repeats the content with white grid lines") {
  const auto content = BinaryImage::from_rows({{1, 0, 1}, {0, 1, 0}, {1, 1, 1}});
  const auto m = gen::tile_squares(content, 13, 4);
  for (int y = 0; y < 13; ++y)
    for (int x = 0; x < 13; ++x) {
      if (x % 4 == 0 || y % 4 == 0)
        CHECK_FALSE(m.get(x, y));
      else
        CHECK(m.get(x, y) == content.get(x % 4 - 1, y % 4 - 1));
    }
  CHECK_THROWS_AS(gen::tile_squares(content, 12, 4), ParameterError);
}
