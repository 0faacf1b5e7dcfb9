#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tit/image.hpp"

namespace tit::halfplane {

// Directions i*delta for i < ceil(2*pi/delta).
struct DirectionSet {
  double delta = 0;
  std::vector<double> angles;
};
DirectionSet make_directions(double delta);

// A half-plane {x cos(phi) + y sin(phi) >= c} on an n x n image. Reference
// half-planes carry their direction and offset indices; c is offsetIndex*a.
struct HalfPlaneRef {
  double phi = 0;
  double c = 0;
  int n = 0;
  int directionIndex = -1;
  long offsetIndex = 0;
};

BinaryImage render_halfplane(const HalfPlaneRef& ref);

// Offset spacing a = delta*n/sqrt(2).
double offset_spacing(int n, double delta);
// Number of uniform samples ceil((6/delta^2) ln(7/delta)).
std::size_t sample_size(double delta);

// Range [first, last] of offset indices examined for one direction. The
// first renders all-black and the last all-white.
struct OffsetRange {
  long first = 0;
  long last = 0;
  long count() const { return last - first + 1; }
};
OffsetRange offset_range(int n, double phi, double spacing);

struct HalfPlaneEstimate {
  double dhat = 0;
  HalfPlaneRef argmin;
  std::size_t sampleSize = 0;
  std::size_t candidateCount = 0;
  std::vector<std::string> warnings;
};

struct HalfPlaneOptions {
  SampleMode mode = SampleMode::Uniform;
};

// Throws ParameterError unless 0 < delta < 1/4.
HalfPlaneEstimate estimate_halfplane_distance(const BinaryImage& m, double delta, std::uint64_t seed,
                                              HalfPlaneOptions options = {});
// Runs the candidate scan on an externally drawn sample.
HalfPlaneEstimate estimate_halfplane_from_samples(int n, double delta, const SampleSet& samples);

struct HalfPlaneHypothesis {
  HalfPlaneRef ref;
  BinaryImage hypothesis;
  HalfPlaneEstimate estimate;
};
HalfPlaneHypothesis learn_halfplane(const BinaryImage& m, double delta, std::uint64_t seed,
                                    HalfPlaneOptions options = {});

}  // namespace tit::halfplane
