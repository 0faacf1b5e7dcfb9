#pragma once

#include <vector>

#include "tit/image.hpp"
#include "tit/lattice.hpp"

namespace tit {

// Structural predicates. The empty black set satisfies all of them.

// True iff some closed half-plane {x cos(phi) + y sin(phi) >= c} contains
// exactly the black pixel centers. Decided exactly by testing whether the
// convex hulls of the black and the white centers are disjoint.
bool is_halfplane(const BinaryImage& m);

// True iff every lattice point of the closed convex hull of the black
// pixel centers is black.
bool is_convex(const BinaryImage& m);

// 4-neighbour components of the black pixels, each as a list of (x, y).
std::vector<std::vector<LatticePoint>> connected_components(const BinaryImage& m);
bool is_connected(const BinaryImage& m);

// True iff every black component touches row/column 0 or n-1.
bool is_border_connected(const BinaryImage& m);

std::vector<LatticePoint> black_points(const BinaryImage& m);

// Closed-hull rasterization: black iff the pixel center lies in conv(pts).
BinaryImage rasterize_hull(int n, const std::vector<LatticePoint>& pts);

}  // namespace tit
