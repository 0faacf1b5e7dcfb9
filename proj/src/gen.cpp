#include "tit/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "tit/errors.hpp"
#include "tit/halfplane.hpp"
#include "tit/predicates.hpp"

namespace tit::gen {

BinaryImage gen_halfplane(int n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("image side must be at least 1");
  Rng rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  const double phi = angle(rng);
  const double cs = std::cos(phi), sn = std::sin(phi);
  const double hi = n - 1;
  const double p[4] = {0.0, cs * hi, sn * hi, cs * hi + sn * hi};
  const double lo = *std::min_element(p, p + 4), up = *std::max_element(p, p + 4);
  const double c = lo == up ? lo : std::uniform_real_distribution<double>(lo, up)(rng);
  return halfplane::render_halfplane({phi, c, n});
}

BinaryImage gen_convex(int n, int vertexCount, std::uint64_t seed) {
  if (n < 1) throw ParameterError("image side must be at least 1");
  if (vertexCount < 3) throw ParameterError("vertexCount must be at least 3");
  Rng rng(seed);
  std::uniform_int_distribution<int> coord(0, n - 1);
  std::vector<LatticePoint> pts;
  for (int i = 0; i < vertexCount; ++i) {
    const int x = coord(rng);
    const int y = coord(rng);
    pts.push_back({x, y});
  }
  return rasterize_hull(n, pts);
}

BinaryImage gen_connected(int n, double targetDensity, std::uint64_t seed) {
  if (n < 1) throw ParameterError("image side must be at least 1");
  if (!(targetDensity > 0.0 && targetDensity <= 1.0)) throw ParameterError("targetDensity must lie in (0, 1]");
  Rng rng(seed);
  const std::size_t total = static_cast<std::size_t>(n) * n;
  const std::size_t target = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(targetDensity * total)));
  std::vector<std::uint8_t> bits(total, 0), queued(total, 0);
  std::vector<std::size_t> frontier;
  const auto push_neighbours = [&](std::size_t idx) {
    const int x = static_cast<int>(idx % n), y = static_cast<int>(idx / n);
    const int nx[4] = {x + 1, x - 1, x, x};
    const int ny[4] = {y, y, y + 1, y - 1};
    for (int d = 0; d < 4; ++d) {
      if (nx[d] < 0 || ny[d] < 0 || nx[d] >= n || ny[d] >= n) continue;
      const std::size_t j = static_cast<std::size_t>(ny[d]) * n + nx[d];
      if (bits[j] || queued[j]) continue;
      queued[j] = 1;
      frontier.push_back(j);
    }
  };
  const std::size_t start = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
  bits[start] = 1;
  push_neighbours(start);
  for (std::size_t grown = 1; grown < target && !frontier.empty(); ++grown) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
    const std::size_t idx = frontier[k];
    frontier[k] = frontier.back();
    frontier.pop_back();
    bits[idx] = 1;
    push_neighbours(idx);
  }
  return BinaryImage(n, std::move(bits));
}

PlantedInstance add_noise(const BinaryImage& clean, double rho, std::uint64_t seed) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in [0, 1]");
  PlantedInstance out;
  out.clean = clean;
  out.noisy = clean;
  out.rho = rho;
  const std::size_t total = clean.pixel_count();
  const auto flips = static_cast<std::size_t>(std::floor(rho * static_cast<double>(total) + 1e-9));
  Rng rng(seed);
  std::vector<std::size_t> idx(total);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  // Partial Fisher-Yates: the first `flips` entries are a uniform subset.
  for (std::size_t i = 0; i < flips; ++i) {
    const std::size_t j = std::uniform_int_distribution<std::size_t>(i, total - 1)(rng);
    std::swap(idx[i], idx[j]);
    const int x = static_cast<int>(idx[i] % clean.n()), y = static_cast<int>(idx[i] / clean.n());
    out.noisy.set(x, y, !clean.get(x, y));
    out.flipped.push_back({x, y});
  }
  return out;
}

BinaryImage tile_squares(const BinaryImage& content, int n, int r) {
  if (r < 2) throw ParameterError("block side r must be at least 2");
  if (content.n() != r - 1)
    throw ParameterError("content side " + std::to_string(content.n()) + " must equal r-1 = " + std::to_string(r - 1));
  if (n < 1 || n % r != 1 % r) throw ParameterError("n must be congruent to 1 modulo r");
  BinaryImage img(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (x % r == 0 || y % r == 0) continue;
      img.set(x, y, content.get(x % r - 1, y % r - 1));
    }
  return img;
}

}  // namespace tit::gen
