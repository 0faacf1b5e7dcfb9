#include "tit/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tit/errors.hpp"

namespace tit {

BinaryImage::BinaryImage(int n, bool black) : n_(n) {
  if (n < 0) throw ParameterError("image side must be non-negative");
  bits_.assign(static_cast<std::size_t>(n) * n, black ? 1 : 0);
}

BinaryImage::BinaryImage(int n, std::vector<std::uint8_t> bits) : n_(n), bits_(std::move(bits)) {
  if (n < 0) throw ParameterError("image side must be non-negative");
  if (bits_.size() != static_cast<std::size_t>(n) * n)
    throw ParameterError("bit count " + std::to_string(bits_.size()) + " does not equal n^2 for n=" +
                         std::to_string(n));
  for (auto& b : bits_) b = b ? 1 : 0;
}

bool BinaryImage::at(int x, int y) const {
  if (x < 0 || y < 0 || x >= n_ || y >= n_)
    throw std::out_of_range("pixel (" + std::to_string(x) + "," + std::to_string(y) +
                            ") outside image of side " + std::to_string(n_));
  return get(x, y);
}

void BinaryImage::set(int x, int y, bool black) {
  if (x < 0 || y < 0 || x >= n_ || y >= n_)
    throw std::out_of_range("pixel (" + std::to_string(x) + "," + std::to_string(y) +
                            ") outside image of side " + std::to_string(n_));
  bits_[static_cast<std::size_t>(y) * n_ + x] = black ? 1 : 0;
}

std::size_t BinaryImage::black_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BinaryImage BinaryImage::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  BinaryImage img(n);
  for (int y = 0; y < n; ++y) {
    if (static_cast<int>(rows[y].size()) != n) throw ParameterError("rows must form a square");
    for (int x = 0; x < n; ++x) img.set(x, y, rows[y][x] != 0);
  }
  return img;
}

std::size_t hamming_distance(const BinaryImage& a, const BinaryImage& b) {
  if (a.n() != b.n())
    throw ParameterError("images are incomparable: sides " + std::to_string(a.n()) + " and " +
                         std::to_string(b.n()));
  std::size_t d = 0;
  const auto& x = a.bits();
  const auto& y = b.bits();
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

double relative_distance(const BinaryImage& a, const BinaryImage& b) {
  const std::size_t d = hamming_distance(a, b);
  if (a.n() == 0) return 0.0;
  return static_cast<double>(d) / (static_cast<double>(a.n()) * a.n());
}

const char* to_string(SampleMode mode) {
  switch (mode) {
    case SampleMode::Uniform: return "uniform";
    case SampleMode::Bernoulli: return "bernoulli";
    case SampleMode::Block: return "block";
    case SampleMode::Full: return "full";
  }
  return "?";
}

SampleMode parse_sample_mode(const std::string& text) {
  if (text == "uniform") return SampleMode::Uniform;
  if (text == "bernoulli") return SampleMode::Bernoulli;
  if (text == "block") return SampleMode::Block;
  if (text == "full") return SampleMode::Full;
  throw ParameterError("unknown sample mode '" + text + "'");
}

SampleSet sample_uniform(const BinaryImage& m, std::size_t s, Rng& rng) {
  if (s < 1) throw ParameterError("sample size must be at least 1");
  if (m.n() < 1) throw ParameterError("cannot sample an empty image");
  SampleSet out;
  out.mode = SampleMode::Uniform;
  out.sizeParam = static_cast<double>(s);
  out.normalizer = static_cast<double>(s);
  out.samples.reserve(s);
  std::uniform_int_distribution<int> coord(0, m.n() - 1);
  for (std::size_t k = 0; k < s; ++k) {
    const int x = coord(rng);
    const int y = coord(rng);
    out.samples.push_back({x, y, m.get(x, y)});
  }
  return out;
}

SampleSet sample_bernoulli(const BinaryImage& m, double s, Rng& rng) {
  if (!(s >= 1)) throw ParameterError("bernoulli size parameter must be at least 1");
  SampleSet out;
  out.mode = SampleMode::Bernoulli;
  out.sizeParam = s;
  const std::size_t total = m.pixel_count();
  const double p = std::min(1.0, s / static_cast<double>(total));
  out.normalizer = p * static_cast<double>(total);
  if (p >= 1.0) {
    out.samples = sample_full(m).samples;
    return out;
  }
  // Skip over non-selected pixels with geometric gaps so the cost is
  // proportional to the number of selected pixels.
  std::geometric_distribution<std::size_t> gap(p);
  std::size_t idx = gap(rng);
  while (idx < total) {
    const int x = static_cast<int>(idx % m.n());
    const int y = static_cast<int>(idx / m.n());
    out.samples.push_back({x, y, m.get(x, y)});
    idx += 1 + gap(rng);
  }
  return out;
}

SampleSet sample_block_at(const BinaryImage& m, int r, int bx, int by) {
  if (r < 1 || r > m.n()) throw ParameterError("block side must lie in [1, n]");
  const int blocks = (m.n() + r - 1) / r;
  if (bx < 0 || by < 0 || bx >= blocks || by >= blocks) throw ParameterError("block index out of range");
  SampleSet out;
  out.mode = SampleMode::Block;
  out.sizeParam = r;
  const int x1 = std::min(m.n(), (bx + 1) * r);
  const int y1 = std::min(m.n(), (by + 1) * r);
  for (int y = by * r; y < y1; ++y)
    for (int x = bx * r; x < x1; ++x) out.samples.push_back({x, y, m.get(x, y)});
  out.normalizer = static_cast<double>(out.samples.size());
  return out;
}

SampleSet sample_block(const BinaryImage& m, int r, Rng& rng) {
  if (r < 1 || r > m.n()) throw ParameterError("block side must lie in [1, n]");
  const int blocks = (m.n() + r - 1) / r;
  std::uniform_int_distribution<int> pick(0, blocks - 1);
  const int bx = pick(rng);
  const int by = pick(rng);
  return sample_block_at(m, r, bx, by);
}

SampleSet sample_full(const BinaryImage& m) {
  SampleSet out;
  out.mode = SampleMode::Full;
  out.sizeParam = static_cast<double>(m.pixel_count());
  out.normalizer = out.sizeParam;
  out.samples.reserve(m.pixel_count());
  for (int y = 0; y < m.n(); ++y)
    for (int x = 0; x < m.n(); ++x) out.samples.push_back({x, y, m.get(x, y)});
  return out;
}

}  // namespace tit
