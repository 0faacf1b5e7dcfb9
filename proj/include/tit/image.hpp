#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tit {

using Rng = std::mt19937_64;

// Square binary image. Pixel (x, y) has x = column and y = row, with the
// origin at the top-left corner, so "below" means larger y.
class BinaryImage {
 public:
  BinaryImage() = default;
  explicit BinaryImage(int n, bool black = false);
  BinaryImage(int n, std::vector<std::uint8_t> bits);

  int n() const { return n_; }
  std::size_t pixel_count() const { return bits_.size(); }

  // Bounds-checked access; throws std::out_of_range.
  bool at(int x, int y) const;
  // Unchecked access for hot loops.
  bool get(int x, int y) const { return bits_[static_cast<std::size_t>(y) * n_ + x] != 0; }
  void set(int x, int y, bool black);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::size_t black_count() const;

  static BinaryImage from_rows(const std::vector<std::vector<int>>& rows);

  friend bool operator==(const BinaryImage& a, const BinaryImage& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

// Dist(a, b) / n^2. Throws ParameterError if the sides differ.
double relative_distance(const BinaryImage& a, const BinaryImage& b);
std::size_t hamming_distance(const BinaryImage& a, const BinaryImage& b);

struct PixelSample {
  int x = 0;
  int y = 0;
  bool black = false;
};

enum class SampleMode { Uniform, Bernoulli, Block, Full };

const char* to_string(SampleMode mode);
SampleMode parse_sample_mode(const std::string& text);

struct SampleSet {
  std::vector<PixelSample> samples;
  SampleMode mode = SampleMode::Uniform;
  // Intended sample count s (uniform), the size parameter (bernoulli), the
  // block side (block) or n^2 (full).
  double sizeParam = 0;
  // Expected number of samples; estimators divide error counts by this.
  double normalizer = 0;
};

SampleSet sample_uniform(const BinaryImage& m, std::size_t s, Rng& rng);
SampleSet sample_bernoulli(const BinaryImage& m, double s, Rng& rng);
SampleSet sample_block(const BinaryImage& m, int r, Rng& rng);
// Deterministic variant used when the block is chosen by the caller.
SampleSet sample_block_at(const BinaryImage& m, int r, int bx, int by);
SampleSet sample_full(const BinaryImage& m);

}  // namespace tit
