#pragma once

#include <cstdint>
#include <vector>

#include "tit/image.hpp"
#include "tit/lattice.hpp"

namespace tit::gen {

// Random half-plane: angle uniform in [0, 2*pi), offset uniform over the
// projection range of the image corners.
BinaryImage gen_halfplane(int n, std::uint64_t seed);

// Lattice points of the closed hull of `vertexCount` random pixel centers.
BinaryImage gen_convex(int n, int vertexCount, std::uint64_t seed);

// Randomized region growth from a random seed pixel until round(density*n^2)
// pixels are black.
BinaryImage gen_connected(int n, double targetDensity, std::uint64_t seed);

struct PlantedInstance {
  BinaryImage clean;
  BinaryImage noisy;
  double rho = 0;
  std::vector<LatticePoint> flipped;
};

// Flips exactly floor(rho*n^2) distinct uniformly chosen pixels.
PlantedInstance add_noise(const BinaryImage& clean, double rho, std::uint64_t seed);

// n x n image whose every r-square equals `content` (side r-1) and whose
// grid pixels are white. Requires n = 1 (mod r).
BinaryImage tile_squares(const BinaryImage& content, int n, int r);

}  // namespace tit::gen
