#include <algorithm>
#include <climits>
#include <cmath>

#include "tit/convexity.hpp"
#include "tit/errors.hpp"

namespace tit::convexity {

using geometry::kSideTolerance;
using geometry::SideConstraint;

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta <= 0.25))
    throw ParameterError("delta must lie in (0, 1/4] for the convexity estimator, got " + std::to_string(delta));
}

// Cumulative black/white counts over (horizontal band index, vertical band
// index), where a sample's band index is the number of lines of that family
// having it on their positive side.
class BandTable {
 public:
  // `rows` and `cols` are the numbers of distinct band indices.
  BandTable(int rows, int cols)
      : rows_(rows), cols_(cols), black_((rows + 1) * static_cast<std::size_t>(cols + 1), 0), white_(black_.size(), 0) {}

  void add(int h, int v, bool black) { (black ? black_ : white_)[idx(h + 1, v + 1)] += 1; }

  void finish() {
    for (auto* t : {&black_, &white_})
      for (int h = 1; h <= rows_; ++h)
        for (int v = 1; v <= cols_; ++v) (*t)[idx(h, v)] += (*t)[idx(h - 1, v)] + (*t)[idx(h, v - 1)] - (*t)[idx(h - 1, v - 1)];
  }

  // Inclusive index ranges; empty ranges give zero.
  Counts rect(int h0, int h1, int v0, int v1) const {
    h0 = std::max(h0, 0);
    v0 = std::max(v0, 0);
    h1 = std::min(h1, rows_ - 1);
    v1 = std::min(v1, cols_ - 1);
    if (h0 > h1 || v0 > v1) return {};
    const auto sum = [&](const std::vector<long>& t) {
      return t[idx(h1 + 1, v1 + 1)] - t[idx(h0, v1 + 1)] - t[idx(h1 + 1, v0)] + t[idx(h0, v0)];
    };
    return {sum(black_), sum(white_)};
  }

 private:
  std::size_t idx(int h, int v) const { return static_cast<std::size_t>(h) * (cols_ + 1) + v; }
  int rows_, cols_;
  std::vector<long> black_, white_;
};

struct Box {
  int a = -1, b = -1;          // indices into the horizontal lines (top, bottom)
  int p0 = -1, p2 = -1;        // pair ids on the top and bottom lines
  int e = -1, p1 = -1;         // left vertical line index and its pair id
  int f = -1, p3 = -1;         // right vertical line index and its pair id
};

std::vector<Point> hull_of(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point p, Point q) { return std::fabs(p.x - q.x) < 1e-9 && std::fabs(p.y - q.y) < 1e-9; }),
            pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  const auto turn = [](Point o, Point a, Point b) { return geometry::cross(a - o, b - o); };
  for (const auto& p : pts) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], p) <= 1e-12) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(h[k - 2], h[k - 1], pts[i]) <= 1e-12) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

ConvexityEstimate estimate_convexity_from_samples(int n, double delta, const SampleSet& samples,
                                                  const ConvexityOptions& options) {
  check_delta(delta);
  ConvexityEstimate out;
  out.sampleSize = samples.mode == SampleMode::Full ? static_cast<std::size_t>(n) * n
                                                    : static_cast<std::size_t>(std::llround(samples.sizeParam));
  out.drawnSamples = samples.samples.size();
  out.normalizer = samples.normalizer > 0 ? samples.normalizer : 1.0;
  if (delta <= std::pow(static_cast<double>(n), -1.0 / 6.0))
    out.warnings.push_back("delta <= n^(-1/6): outside the regime where the accuracy guarantee is proven");

  std::vector<LabeledPoint> pts;
  pts.reserve(samples.samples.size());
  long blacks = 0;
  for (const auto& s : samples.samples) {
    pts.push_back({{static_cast<double>(s.x), static_cast<double>(s.y)}, s.black});
    blacks += s.black;
  }

  const auto all_white = [&] {
    out.trace.push_back({"empty-polygon", Region{}, false, blacks});
    out.errorCount = blacks;
  };

  ReferenceGrid grid(n, delta, options.constants, options.maxLinePointPairs);
  out.linePointPairs = grid.pairs().size();
  if (blacks == 0) {
    all_white();
    return out;
  }

  const auto& lines = grid.lines();
  std::vector<int> H, V;
  for (int li : grid.lines_of(grid.horizontal_direction()))
    if (lines[li].pointCount > 0) H.push_back(li);
  for (int li : grid.lines_of(grid.vertical_direction()))
    if (lines[li].pointCount > 0) V.push_back(li);
  const int NH = static_cast<int>(H.size()), NV = static_cast<int>(V.size());

  std::vector<int> hb(pts.size(), 0), vb(pts.size(), 0);
  BandTable table(NH + 1, NV + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int li : H) hb[i] += lines[li].line.positive(pts[i].p);
    for (int li : V) vb[i] += lines[li].line.positive(pts[i].p);
    table.add(hb[i], vb[i], pts[i].black);
  }
  table.finish();

  TriangleDp dp(grid, pts, options.constants.heightFactor);

  // g(p, q) = best(p, q) - white(triangle(p, q)), cached densely over
  // (horizontal pair, vertical pair).
  const int hFirst = lines[H.front()].firstPair;
  const int hLast = lines[H.back()].firstPair + lines[H.back()].pointCount;
  const int vFirst = lines[V.front()].firstPair;
  const int vLast = lines[V.back()].firstPair + lines[V.back()].pointCount;
  const int vSpan = vLast - vFirst;
  std::vector<int> gCache(static_cast<std::size_t>(hLast - hFirst) * vSpan, INT_MIN);
  const auto g = [&](int hp, int vp) {
    int& slot = gCache[static_cast<std::size_t>(hp - hFirst) * vSpan + (vp - vFirst)];
    if (slot == INT_MIN) slot = static_cast<int>(dp.best(hp, vp) - dp.triangle_counts(hp, vp).white);
    return slot;
  };

  const double tol = kSideTolerance;
  const double sp = grid.spacing();
  long bestTotal = blacks;
  Box box;

  std::vector<std::pair<double, int>> bandSorted;
  std::vector<Counts> trap;
  std::vector<long> w1(NV), w3(NV);
  for (int a = 0; a < NH; ++a) {
    const double cA = lines[H[a]].line.c;
    // Widest bands first: they tend to give a good incumbent early.
    for (int b = NH - 1; b > a; --b) {
      const double cB = lines[H[b]].line.c;
      const long outside = table.rect(0, a, 0, NV).black + table.rect(b + 1, NH, 0, NV).black;
      if (outside >= bestTotal) continue;
      const Counts band = table.rect(a + 1, b, 0, NV);
      for (int e = 0; e < NV; ++e) {
        const Counts c1 = table.rect(a + 1, b, 0, e);
        const Counts c3 = table.rect(a + 1, b, e + 1, NV);
        w1[e] = c1.black - c1.white;
        w3[e] = c3.black - c3.white;
      }
      // Vertical points with y in [cA, cB].
      const auto point_range = [&](const RefLine& rl) {
        const int lo = static_cast<int>(std::ceil((cA - rl.start.y - tol) / sp));
        const int hi = static_cast<int>(std::floor((cB - rl.start.y + tol) / sp));
        return std::pair{std::max(lo, 0), std::min(hi, rl.pointCount - 1)};
      };

      std::vector<int> bandIdx;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (hb[i] >= a + 1 && hb[i] <= b) bandIdx.push_back(static_cast<int>(i));

      const RefLine& top = lines[H[a]];
      const RefLine& bottom = lines[H[b]];
      for (int i0 = 0; i0 < top.pointCount; ++i0) {
        const int p0 = top.firstPair + i0;
        const Point b0 = grid.pairs()[p0].pos;
        // Samples of the band that lie left of line(b0, b2), for every b2.
        bandSorted.clear();
        for (int i : bandIdx) {
          const Point q = pts[i].p;
          bandSorted.push_back({std::atan2(std::max(0.0, q.y - b0.y), -(q.x - b0.x)), i});
        }
        std::sort(bandSorted.begin(), bandSorted.end());
        trap.assign(bottom.pointCount, Counts{});
        {
          std::size_t ptr = 0;
          Counts acc;
          for (int i2 = 0; i2 < bottom.pointCount; ++i2) {
            const Line cut = Line::through(b0, grid.pairs()[bottom.firstPair + i2].pos);
            while (ptr < bandSorted.size() && !cut.positive(pts[bandSorted[ptr].second].p)) {
              (pts[bandSorted[ptr].second].black ? acc.black : acc.white) += 1;
              ++ptr;
            }
            trap[i2] = acc;
          }
        }
        for (int i2 = 0; i2 < bottom.pointCount; ++i2) {
          const int p2 = bottom.firstPair + i2;
          const Point b2 = grid.pairs()[p2].pos;
          const long leftWhite = trap[i2].white;
          const long rightWhite = band.white - leftWhite;
          const double xMin = std::min(b0.x, b2.x), xMax = std::max(b0.x, b2.x);

          long bestLeft = LONG_MAX;
          int argE = -1, argP1 = -1;
          for (int e = 0; e < NV && lines[V[e]].line.c <= xMin + tol; ++e) {
            const auto [lo, hi] = point_range(lines[V[e]]);
            for (int j = lo; j <= hi; ++j) {
              const int p1 = lines[V[e]].firstPair + j;
              // g(p, q) >= -white(triangle(p, q)) bounds the candidate from below.
              const long bound = w1[e] - dp.triangle_counts(p0, p1).white - dp.triangle_counts(p2, p1).white;
              if (bound >= bestLeft || outside + leftWhite + bound >= bestTotal) continue;
              const long val = w1[e] + g(p0, p1) + g(p2, p1);
              if (val < bestLeft) {
                bestLeft = val;
                argE = e;
                argP1 = p1;
              }
            }
          }
          // Each half of the band contributes a nonnegative error count.
          if (argE < 0) continue;
          const long leftCost = leftWhite + bestLeft;
          if (outside + leftCost >= bestTotal) continue;

          long bestRight = LONG_MAX;
          int argF = -1, argP3 = -1;
          int fStart = 0;
          while (fStart < NV && lines[V[fStart]].line.c < xMax - tol) ++fStart;
          for (int f = fStart; f < NV; ++f) {
            const auto [lo, hi] = point_range(lines[V[f]]);
            for (int j = lo; j <= hi; ++j) {
              const int p3 = lines[V[f]].firstPair + j;
              const long bound = w3[f] - dp.triangle_counts(p0, p3).white - dp.triangle_counts(p2, p3).white;
              if (bound >= bestRight || outside + leftCost + rightWhite + bound >= bestTotal) continue;
              const long val = w3[f] + g(p0, p3) + g(p2, p3);
              if (val < bestRight) {
                bestRight = val;
                argF = f;
                argP3 = p3;
              }
            }
          }
          if (argF < 0) continue;
          const long total = outside + leftCost + rightWhite + bestRight;
          if (total < bestTotal) {
            bestTotal = total;
            box = {a, b, p0, p2, argE, argP1, argF, argP3};
          }
        }
      }
    }
  }

  out.memoEntries = dp.memo_entries();
  if (box.a < 0) {
    all_white();
  } else {
    const Line& l0 = lines[H[box.a]].line;
    const Line& l2 = lines[H[box.b]].line;
    const Line& l1 = lines[V[box.e]].line;
    const Line& l3 = lines[V[box.f]].line;
    const Point b0 = grid.pairs()[box.p0].pos, b1 = grid.pairs()[box.p1].pos;
    const Point b2 = grid.pairs()[box.p2].pos, b3 = grid.pairs()[box.p3].pos;
    const Point v0 = *geometry::intersect(l0, l1), v1 = *geometry::intersect(l0, l3);
    const Point v2 = *geometry::intersect(l2, l1), v3 = *geometry::intersect(l2, l3);
    const Line diagonal = Line::through(b0, b2);
    const SideConstraint inBandTop{l0, true}, inBandBottom{l2, false};

    const auto push = [&](std::string label, Region r, bool black) {
      if (r.empty) return;
      const Counts c = count_in_region(pts, r);
      out.trace.push_back({std::move(label), std::move(r), black, black ? c.white : c.black});
    };
    push("above-box", Region{{SideConstraint{l0, false}}}, false);
    push("below-box", Region{{SideConstraint{l2, true}}}, false);
    push("left-of-box", Region{{inBandTop, inBandBottom, SideConstraint{l1, false}}}, false);
    push("right-of-box", Region{{inBandTop, inBandBottom, SideConstraint{l3, true}}}, false);

    const auto corner_cut = [&](Region& r, int pa, int pb, Point apex) {
      if (instance_region(grid, pa, pb).empty) return;
      r.constraints.push_back(
          *geometry::side_excluding(Line::through(grid.pairs()[pa].pos, grid.pairs()[pb].pos), apex));
    };
    Region left{{inBandTop, inBandBottom, SideConstraint{diagonal, false}, SideConstraint{l1, true}}};
    corner_cut(left, box.p0, box.p1, v0);
    corner_cut(left, box.p1, box.p2, v2);
    push("box-left-triangle", std::move(left), true);
    Region right{{inBandTop, inBandBottom, SideConstraint{diagonal, true}, SideConstraint{l3, false}}};
    corner_cut(right, box.p0, box.p3, v1);
    corner_cut(right, box.p3, box.p2, v3);
    push("box-right-triangle", std::move(right), true);

    std::vector<Point> vertices{b0, b1, b2, b3};
    dp.trace_best(box.p0, box.p1, out.trace, &out.subdivisions, &vertices);
    dp.trace_best(box.p1, box.p2, out.trace, &out.subdivisions, &vertices);
    dp.trace_best(box.p0, box.p3, out.trace, &out.subdivisions, &vertices);
    dp.trace_best(box.p3, box.p2, out.trace, &out.subdivisions, &vertices);
    out.hypothesisVertices = hull_of(vertices);
    out.errorCount = bestTotal;
    out.memoEntries = dp.memo_entries();
  }
  out.dhat = std::clamp(static_cast<double>(out.errorCount) / out.normalizer, 0.0, 0.5);
  return out;
}

ConvexityEstimate estimate_convexity_distance(const BinaryImage& m, double delta, std::uint64_t seed,
                                              const ConvexityOptions& options) {
  check_delta(delta);
  Rng rng(seed);
  const std::size_t s = sample_size(delta, options.constants);
  SampleSet samples;
  switch (options.mode) {
    case SampleMode::Bernoulli: samples = sample_bernoulli(m, static_cast<double>(s), rng); break;
    case SampleMode::Uniform: samples = sample_uniform(m, s, rng); break;
    case SampleMode::Full: samples = sample_full(m); break;
    case SampleMode::Block: throw ParameterError("block sampling is not supported for the convexity estimator");
  }
  ConvexityEstimate est = estimate_convexity_from_samples(m.n(), delta, samples, options);
  if (options.mode != SampleMode::Full) est.sampleSize = s;
  return est;
}

BinaryImage render_trace(int n, const std::vector<TraceRegion>& trace) {
  BinaryImage img(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      const Point p{static_cast<double>(x), static_cast<double>(y)};
      for (const auto& r : trace)
        if (r.black && r.region.contains(p)) {
          img.set(x, y, true);
          break;
        }
    }
  return img;
}

ConvexHypothesis learn_convex(const BinaryImage& m, double delta, std::uint64_t seed, const ConvexityOptions& options) {
  ConvexHypothesis out;
  out.estimate = estimate_convexity_distance(m, delta, seed, options);
  out.vertices = out.estimate.hypothesisVertices;
  out.hypothesis = render_trace(m.n(), out.estimate.trace);
  return out;
}

}  // namespace tit::convexity
