#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tit/convexity.hpp"
#include "tit/errors.hpp"

namespace tit::convexity {

ConvexityConstants ConvexityConstants::paper() { return {144, 6, 6, "paper"}; }
ConvexityConstants ConvexityConstants::practical() { return {4, 6, 6, "practical"}; }

ConvexityConstants ConvexityConstants::by_name(const std::string& name) {
  if (name == "paper") return paper();
  if (name == "practical") return practical();
  throw ParameterError("unknown constants preset '" + name + "'");
}

std::size_t sample_size(double delta, const ConvexityConstants& constants) {
  return static_cast<std::size_t>(std::ceil(constants.sampleConst / (delta * delta) * std::log(1.0 / delta)));
}

ReferenceGrid::ReferenceGrid(int n, double delta, const ConvexityConstants& constants, std::size_t maxPairs)
    : n_(n), delta_(delta) {
  if (n < 1) throw ParameterError("image side must be at least 1");
  if (!(constants.deltaDivisor > 0 && constants.heightFactor > 0 && constants.sampleConst > 0))
    throw ParameterError("convexity constants must be strictly positive");
  step_ = delta / constants.deltaDivisor;
  spacing_ = step_ * n;
  if (spacing_ < 0.25)
    throw ParameterError("grid too fine for image size: reference spacing " + std::to_string(spacing_) +
                         " px is below 1/4 pixel");

  const auto count = static_cast<long>(std::ceil(2 * std::numbers::pi / step_));
  horizontal_ = -1;
  for (long i = 0; i < count; ++i) {
    const double phi = static_cast<double>(i) * step_;
    if (std::fabs(phi - std::numbers::pi / 2) < 1e-12) horizontal_ = static_cast<int>(i);
    directions_.push_back({phi});
  }
  if (horizontal_ < 0) {
    horizontal_ = static_cast<int>(directions_.size());
    directions_.push_back({std::numbers::pi / 2});
  }

  // Lines and points live in the pixel-center square padded by one spacing,
  // so every pixel row and column has a reference line strictly beyond it.
  const double lo0 = -spacing_;
  const double hi = n - 1 + spacing_;
  const double eps = 1e-9;
  byDirection_.resize(directions_.size());
  firstOffset_.assign(directions_.size(), 0);
  std::size_t pairCount = 0;
  for (int d = 0; d < static_cast<int>(directions_.size()); ++d) {
    const double cs = std::cos(directions_[d].phi);
    const double sn = std::sin(directions_[d].phi);
    double lo = 0, up = 0;
    bool first = true;
    for (double cx : {lo0, hi})
      for (double cy : {lo0, hi}) {
        const double p = cs * cx + sn * cy;
        lo = first ? p : std::min(lo, p);
        up = first ? p : std::max(up, p);
        first = false;
      }
    const long kLo = static_cast<long>(std::ceil(lo / spacing_ - eps));
    const long kHi = static_cast<long>(std::floor(up / spacing_ + eps));
    firstOffset_[d] = kLo;
    for (long k = kLo; k <= kHi; ++k) {
      RefLine rl;
      rl.direction = d;
      rl.offsetIndex = k;
      rl.line = Line::from_normal(cs, sn, static_cast<double>(k) * spacing_);
      Point dir{-rl.line.ny, rl.line.nx};
      if (dir.x < 0 || (dir.x == 0 && dir.y < 0)) dir = {-dir.x, -dir.y};
      const Point foot{rl.line.c * rl.line.nx, rl.line.c * rl.line.ny};
      double tMin = -1e300, tMax = 1e300;
      bool crosses = true;
      for (int axis = 0; axis < 2; ++axis) {
        const double f = axis == 0 ? foot.x : foot.y;
        const double g = axis == 0 ? dir.x : dir.y;
        if (std::fabs(g) < 1e-12) {
          if (f < lo0 - eps || f > hi + eps) crosses = false;
          continue;
        }
        double t0 = (lo0 - f) / g, t1 = (hi - f) / g;
        if (t0 > t1) std::swap(t0, t1);
        tMin = std::max(tMin, t0);
        tMax = std::min(tMax, t1);
      }
      if (!crosses || tMin > tMax + eps) {
        // Keep the offset table dense; a line that misses the square has no points.
        rl.pointCount = 0;
      } else {
        rl.start = foot + tMin * dir;
        rl.start.x = std::clamp(rl.start.x, lo0, hi);
        rl.start.y = std::clamp(rl.start.y, lo0, hi);
        rl.length = std::max(0.0, tMax - tMin);
        rl.step = spacing_ * dir;
        rl.pointCount = static_cast<int>(std::floor(rl.length / spacing_ + eps)) + 1;
      }
      rl.firstPair = static_cast<int>(pairCount);
      pairCount += rl.pointCount;
      if (pairCount > maxPairs)
        throw ResourceError("reference grid exceeds " + std::to_string(maxPairs) +
                            " line-point pairs; use a larger delta or smaller constants");
      byDirection_[d].push_back(static_cast<int>(lines_.size()));
      lines_.push_back(rl);
    }
  }
  pairs_.reserve(pairCount);
  for (int li = 0; li < static_cast<int>(lines_.size()); ++li) {
    const RefLine& rl = lines_[li];
    const Point unit{rl.step.x / spacing_, rl.step.y / spacing_};
    for (int j = 0; j < rl.pointCount; ++j) {
      Point p = rl.start + (static_cast<double>(j) * spacing_) * unit;
      p.x = std::clamp(p.x, lo0, hi);
      p.y = std::clamp(p.y, lo0, hi);
      pairs_.push_back({li, j, p});
    }
  }
}

int ReferenceGrid::line_at(int direction, long offsetIndex) const {
  const auto& ls = byDirection_[direction];
  const long i = offsetIndex - firstOffset_[direction];
  if (i < 0 || i >= static_cast<long>(ls.size())) return -1;
  return ls[i];
}

double ReferenceGrid::param_of(int line, Point p) const {
  const RefLine& rl = lines_[line];
  return geometry::dot(p - rl.start, rl.step) / (spacing_ * spacing_);
}

Counts count_in_region(const std::vector<LabeledPoint>& samples, const Region& region) {
  Counts c;
  if (region.empty) return c;
  for (const auto& s : samples)
    if (region.contains(s.p)) (s.black ? c.black : c.white) += 1;
  return c;
}

Region instance_region(const ReferenceGrid& grid, int pairA, int pairB) {
  const auto& A = grid.pairs()[pairA];
  const auto& B = grid.pairs()[pairB];
  Region r;
  r.empty = true;
  if (A.line == B.line) return r;
  const Line& la = grid.lines()[A.line].line;
  const Line& lb = grid.lines()[B.line].line;
  const auto apex = geometry::intersect(la, lb);
  if (!apex) return r;
  return geometry::triangle_region(la, lb, A.pos, B.pos, *apex);
}

}  // namespace tit::convexity
