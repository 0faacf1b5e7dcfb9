#include <doctest.h>

#include <filesystem>
#include <random>

#include "tit/errors.hpp"
#include "tit/image.hpp"
#include "tit/pbm.hpp"

using namespace tit;

namespace {

BinaryImage random_image(int n, std::uint64_t seed, double density = 0.5) {
  Rng rng(seed);
  std::bernoulli_distribution coin(density);
  BinaryImage m(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) m.set(x, y, coin(rng));
  return m;
}

}  // namespace

TEST_CASE("image access and distances") {
  BinaryImage a(4);
  CHECK(a.black_count() == 0);
  a.set(1, 2, true);
  CHECK(a.at(1, 2));
  CHECK_FALSE(a.at(2, 1));
  CHECK_THROWS_AS(a.at(4, 0), std::out_of_range);
  BinaryImage b(4, true);
  CHECK(hamming_distance(a, b) == 15);
  CHECK(relative_distance(a, b) == doctest::Approx(15.0 / 16));
  CHECK_THROWS_AS(relative_distance(a, BinaryImage(5)), ParameterError);
}

TEST_CASE("from_rows reads row-major with y down") {
  const auto m = BinaryImage::from_rows({{0, 1}, {0, 0}});
  CHECK(m.get(1, 0));
  CHECK_FALSE(m.get(0, 1));
}

TEST_CASE("PBM round trips in both encodings") {
  for (int n : {1, 7, 8, 9, 33}) {
    const auto m = random_image(n, 100 + n);
    CHECK(parse_pbm(format_pbm(m, PbmFormat::Ascii)) == m);
    CHECK(parse_pbm(format_pbm(m, PbmFormat::Raw)) == m);
  }
}

TEST_CASE("PBM file round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "tit_unit_roundtrip.pbm").string();
  const auto m = random_image(13, 5);
  write_pbm(m, path);
  CHECK(read_pbm(path) == m);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_pbm(path), IoError);
}

TEST_CASE("PBM accepts comments and loose whitespace") {
  const auto m = parse_pbm("P1\n# a comment\n2 # trailing\n2\n1 0\n0 1\n");
  CHECK(m.get(0, 0));
  CHECK(m.get(1, 1));
  CHECK_FALSE(m.get(1, 0));
  CHECK(parse_pbm("P1 2 2 1001") == m);
}

TEST_CASE("PBM rejects malformed input") {
  CHECK_THROWS_AS(parse_pbm(""), ParseError);
  CHECK_THROWS_AS(parse_pbm("P2\n2 2\n"), ParseError);
  CHECK_THROWS_AS(parse_pbm("P1\n2 3\n1 0 1 0 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_pbm("P1\nx 2\n"), ParseError);
  CHECK_THROWS_AS(parse_pbm("P1\n2 2\n1 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_pbm("P1\n2 2\n1 0 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_pbm("P4\n9 9\n\x01"), ParseError);
}

TEST_CASE("sampling modes") {
  const auto m = random_image(20, 9);
  Rng rng(1);
  const auto u = sample_uniform(m, 300, rng);
  CHECK(u.samples.size() == 300);
  CHECK(u.normalizer == 300);
  for (const auto& s : u.samples) CHECK(s.black == m.get(s.x, s.y));

  const auto f = sample_full(m);
  CHECK(f.samples.size() == 400);
  CHECK(f.normalizer == 400);

  const auto blk = sample_block_at(m, 5, 1, 2);
  CHECK(blk.samples.size() == 25);
  for (const auto& s : blk.samples) {
    CHECK(s.x / 5 == 1);
    CHECK(s.y / 5 == 2);
  }
  CHECK_THROWS_AS(sample_block_at(m, 5, 4, 0), ParameterError);

  // Bernoulli sizes concentrate around the size parameter.
  double total = 0;
  for (int t = 0; t < 200; ++t) total += sample_bernoulli(m, 100, rng).samples.size();
  CHECK(total / 200 == doctest::Approx(100).epsilon(0.05));
}

TEST_CASE("sample mode names round trip") {
  for (auto mode : {SampleMode::Uniform, SampleMode::Bernoulli, SampleMode::Block, SampleMode::Full})
    CHECK(parse_sample_mode(to_string(mode)) == mode);
  CHECK_THROWS_AS(parse_sample_mode("sometimes"), ParameterError);
}
