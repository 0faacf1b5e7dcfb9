#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tit/image.hpp"

namespace tit::connectedness {

// Per-block status symbol of the row DP.
//   Border: the block's component already reaches the square border.
//   Isolated: the block is alone in its component, which has no border contact.
//   Open / Middle / Close: first, interior and last block of a multi-block
//   component without border contact, read left to right.
enum class Status : std::uint8_t { Isolated = 0, Border = 1, Open = 2, Middle = 3, Close = 4 };

char status_symbol(Status s);
using StatusVector = std::vector<Status>;

// Maximal runs of set bits of a k-bit row as inclusive [first, last] columns.
// Bit x of the coloring is column x.
std::vector<std::pair<int, int>> blocks_of(std::uint32_t coloring, int k);

// Edges between 1-blocks (0-based) encoded by a status vector, or nullopt
// when the vector is not a well-formed nesting.
std::optional<std::vector<std::pair<int, int>>> construct_graph(std::uint32_t coloring, int k,
                                                                 const StatusVector& status);

// Status vector of the next row given the current row's configuration, or
// nullopt when some component without border contact ends at the current row.
// `nextIsLast` marks the bottom row of the square.
std::optional<StatusVector> compute_status(std::uint32_t coloring, const StatusVector& status,
                                           std::uint32_t nextColoring, int k, bool nextIsLast);

inline constexpr int kDefaultSideCap = 16;

struct BorderDpResult {
  double distance = 0;      // relative to k^2
  long cost = 0;            // absolute flips
  std::vector<std::size_t> statesPerRow;
  std::vector<long> minCostPerRow;
};

// Exact distance of a k x k image to the border-connected class.
// Throws ResourceError when k exceeds `sideCap`.
BorderDpResult border_connectedness_dp(const BinaryImage& s, int sideCap = kDefaultSideCap);
double border_connectedness_distance(const BinaryImage& s, int sideCap = kDefaultSideCap);

struct SquarePartition {
  int r = 0;              // block side
  int originalN = 0;
  int paddedN = 0;        // least n' >= n with n' = 1 (mod r)
  int squaresPerSide = 0; // (n' - 1) / r
  int squareSide = 0;     // r - 1
  double delta = 0;
  double deltaPrime = 0;  // delta * n^2 / n'^2
  long gridPixelCount = 0;
};

SquarePartition pad_and_partition(int n, double delta);

// Square (sx, sy) of the padded image: pixels (sx*r + 1 + u, sy*r + 1 + v).
BinaryImage extract_square(const BinaryImage& m, const SquarePartition& part, int sx, int sy);

struct ConnectednessOptions {
  int sideCap = kDefaultSideCap;
};

struct ConnectednessEstimate {
  double dhat = 0;
  std::vector<double> perSquareDistances;
  double scaling = 0;
  std::size_t squareSamples = 0;
  SquarePartition partition;
  std::vector<std::string> warnings;
};

std::size_t square_sample_count(double delta);

// Throws ParameterError unless 0 < delta <= 1/2.
ConnectednessEstimate estimate_connectedness_distance(const BinaryImage& m, double delta, std::uint64_t seed,
                                                      ConnectednessOptions options = {});

// Deterministic variant averaging over every square instead of a sample.
double connectedness_full_average(const BinaryImage& m, double delta, ConnectednessOptions options = {});

}  // namespace tit::connectedness
