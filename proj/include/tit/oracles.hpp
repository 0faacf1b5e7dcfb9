#pragma once

#include "tit/image.hpp"

namespace tit::oracles {

// Largest image side each exact oracle accepts. Larger inputs raise
// ResourceError rather than being approximated.
struct OracleBudget {
  static constexpr int halfplane = 24;
  static constexpr int convexity = 5;
  static constexpr int connectedness = 4;
  static constexpr int borderConnectedness = 5;
};

// Exact distance to the nearest half-plane image. Every dichotomy cut out of
// the pixel centers by a closed half-plane is also cut out by a direction
// that is not perpendicular to any difference of two centers, and such
// directions are grouped into arcs between consecutive perpendiculars. One
// representative per arc, with a full threshold sweep, therefore covers all
// half-plane images including the two constant ones.
double oracle_halfplane_distance(const BinaryImage& m);

// Exact distance to the nearest convex image, minimised over the complete
// family of convex subsets of the n x n grid.
double oracle_convexity_distance(const BinaryImage& m);

// Exact distance to the nearest 4-connected image.
double oracle_connectedness_distance(const BinaryImage& m);

// Exact distance to the nearest border-connected image.
double oracle_border_connectedness_distance(const BinaryImage& s);

}  // namespace tit::oracles
