#include <algorithm>
#include <climits>
#include <cmath>
#include <numbers>
#include <tuple>
#include <unordered_map>

#include "tit/convexity.hpp"

namespace tit::convexity {

using geometry::kSideTolerance;
using geometry::SideConstraint;

namespace {

constexpr int kUnset = INT_MIN;
constexpr int kBusy = INT_MIN + 1;  // fixed-base value under evaluation

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

double circular_distance(double a, double b) {
  double d = std::fmod(std::fabs(a - b), 2 * std::numbers::pi);
  return std::min(d, 2 * std::numbers::pi - d);
}

}  // namespace

struct TriangleDp::Impl {
  // Compact counts for the sweep tables, which dominate memory.
  struct SmallCounts {
    std::int32_t black = 0;
    std::int32_t white = 0;
  };
  struct Entry {
    int best = kUnset;
    int sm = kUnset;     // min over base pairs of fixedBase - white(base triangle)
    int fixedBase = kUnset;
    int smA = -1, smB = -1;
    int subPair = -1;  // apex of the chosen subdivision, or -1
  };

  const ReferenceGrid& grid;
  std::vector<LabeledPoint> samples;
  double heightLimit;
  std::unordered_map<std::uint64_t, Entry> memo;
  std::unordered_map<std::uint64_t, std::vector<SmallCounts>> fanTables;
  std::unordered_map<std::uint64_t, std::vector<Counts>> apexTables;

  Impl(const ReferenceGrid& g, std::vector<LabeledPoint> s, double heightFactor)
      : grid(g), samples(std::move(s)), heightLimit(heightFactor * g.spacing()) {}

  const LinePointPair& pair(int id) const { return grid.pairs()[id]; }
  const Line& line_of(int id) const { return grid.lines()[pair(id).line].line; }

  // Counts of the triangles (pa, p, apex) for every reference point p of
  // line lineB, where pa is the point of pair `a`. A sample q of the wedge
  // lies in the triangle exactly when the ray from pa through q meets lineB
  // between p and the apex, so samples are bucketed by that crossing and
  // prefix-summed away from the apex. Crossings within rounding distance of a
  // reference point are settled with the same side test the regions use.
  const std::vector<SmallCounts>& fan(int a, int lineB) {
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(lineB);
    auto it = fanTables.find(key);
    if (it != fanTables.end()) return it->second;
    const RefLine& rb = grid.lines()[lineB];
    const int count = rb.pointCount;
    std::vector<SmallCounts> out(count);
    const LinePointPair& A = pair(a);
    const Line& la = grid.lines()[A.line].line;
    const Line& lb = rb.line;
    const auto apex = A.line == lineB ? std::nullopt : geometry::intersect(la, lb);
    const auto sb = apex ? geometry::side_containing(lb, A.pos) : std::nullopt;
    if (apex && sb) {
      const Point pa = A.pos;
      const double tv = grid.param_of(lineB, *apex);
      // Side of la holding the reference points with parameter above tv.
      const Point probe = rb.start + (tv + 1.0) * rb.step;
      const bool upperPositive = la.value(probe) > la.value(*apex);
      const double snap = 1e-6;
      const auto inside = [&](int j, Point q) {
        const Point pb = grid.pairs()[rb.firstPair + j].pos;
        const auto sc = geometry::side_containing(Line::through(pa, pb), *apex);
        return sc && sc->contains(q);
      };
      // bucket[j + 1] collects samples first covered at index j.
      std::vector<SmallCounts> bucket(count + 2);
      const double denomScale = 1.0 / (grid.spacing() * grid.spacing());
      std::vector<const LabeledPoint*> degenerate;  // samples at pa itself
      for (const auto& smp : samples) {
        const Point q = smp.p;
        if (!sb->contains(q)) continue;
        const bool upper = la.positive(q) == upperPositive;
        const Point w = q - pa;
        const double along = lb.nx * w.x + lb.ny * w.y;
        const double va = lb.value(pa);
        if (std::fabs(w.x) + std::fabs(w.y) < snap) {
          degenerate.push_back(&smp);
          continue;
        }
        if (along == 0.0 || -va / along <= 0.0) continue;  // ray misses lineB
        const Point hit = pa + (-va / along) * w;
        const double t = geometry::dot(hit - rb.start, rb.step) * denomScale;
        int first;
        if (upper) {
          if (t > count - 1 + snap) continue;
          first = static_cast<int>(std::ceil(t - snap));
          if (std::fabs(t - std::round(t)) <= snap) {
            const int j = static_cast<int>(std::round(t));
            first = (j >= 0 && j < count && j > tv && inside(j, q)) ? j : j + 1;
          }
          first = std::max({first, static_cast<int>(std::floor(tv)) + 1, 0});
          if (first > count - 1) continue;
          auto& c = bucket[first + 1];
          (smp.black ? c.black : c.white) += 1;
        } else {
          if (t < -snap) continue;
          first = static_cast<int>(std::floor(t + snap));
          if (std::fabs(t - std::round(t)) <= snap) {
            const int j = static_cast<int>(std::round(t));
            first = (j >= 0 && j < count && j < tv && inside(j, q)) ? j : j - 1;
          }
          first = std::min({first, static_cast<int>(std::ceil(tv)) - 1, count - 1});
          if (first < 0) continue;
          auto& c = bucket[first + 1];
          (smp.black ? c.black : c.white) += 1;
        }
      }
      SmallCounts acc;
      for (int j = 0; j < count; ++j) {
        if (j <= tv) continue;
        acc.black += bucket[j + 1].black;
        acc.white += bucket[j + 1].white;
        if (geometry::strict_side(la, grid.pairs()[rb.firstPair + j].pos) != 0) out[j] = acc;
      }
      acc = {};
      for (int j = count - 1; j >= 0; --j) {
        if (j >= tv) continue;
        acc.black += bucket[j + 1].black;
        acc.white += bucket[j + 1].white;
        if (geometry::strict_side(la, grid.pairs()[rb.firstPair + j].pos) != 0) out[j] = acc;
      }
      for (const LabeledPoint* q : degenerate)
        for (int j = 0; j < count; ++j) {
          const Point pb = grid.pairs()[rb.firstPair + j].pos;
          if (geometry::strict_side(la, pb) == 0 || la.positive(q->p) != la.positive(pb) || !inside(j, q->p)) continue;
          (q->black ? out[j].black : out[j].white) += 1;
        }
    }
    return fanTables.emplace(key, std::move(out)).first->second;
  }

  Counts triangle(int a, int b) {
    const int lb = pair(b).line, la = pair(a).line;
    auto it = fanTables.find((static_cast<std::uint64_t>(b) << 32) | static_cast<std::uint32_t>(la));
    const SmallCounts c = it != fanTables.end() ? it->second[pair(a).point] : fan(a, lb)[pair(b).point];
    return {c.black, c.white};
  }

  // Counts of the apex triangles cut from the wedge (lineA side sA, lineB
  // side sB) by every line of direction `dir` that leaves the apex on its
  // positive-projection side.
  const std::vector<Counts>& apex_table(int lineA, int lineB, bool sA, bool sB, int dir) {
    if (lineA > lineB) {
      std::swap(lineA, lineB);
      std::swap(sA, sB);
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(lineA) << 39) | (static_cast<std::uint64_t>(lineB) << 18) |
                              (static_cast<std::uint64_t>(sA) << 17) | (static_cast<std::uint64_t>(sB) << 16) |
                              static_cast<std::uint64_t>(dir);
    auto it = apexTables.find(key);
    if (it != apexTables.end()) return it->second;
    const auto& ids = grid.lines_of(dir);
    std::vector<Counts> out(ids.size());
    const Line& la = grid.lines()[lineA].line;
    const Line& lb = grid.lines()[lineB].line;
    const auto apex = geometry::intersect(la, lb);
    if (apex) {
      const double phi = grid.directions()[dir].phi;
      const Point u{std::cos(phi), std::sin(phi)};
      const double top = geometry::dot(u, *apex);
      std::vector<std::pair<double, int>> wedge;
      for (int i = 0; i < static_cast<int>(samples.size()); ++i) {
        const Point q = samples[i].p;
        if (la.positive(q) == sA && lb.positive(q) == sB) wedge.push_back({-geometry::dot(u, q), i});
      }
      std::sort(wedge.begin(), wedge.end());
      std::size_t ptr = 0;
      Counts acc;
      for (int t = static_cast<int>(ids.size()) - 1; t >= 0; --t) {
        const RefLine& rl = grid.lines()[ids[t]];
        if (static_cast<double>(rl.offsetIndex) * grid.spacing() >= top - kSideTolerance) continue;
        const auto vs = geometry::side_containing(rl.line, *apex);
        if (!vs) continue;
        while (ptr < wedge.size() && vs->contains(samples[wedge[ptr].second].p)) {
          (samples[wedge[ptr].second].black ? acc.black : acc.white) += 1;
          ++ptr;
        }
        out[t] = acc;
      }
    }
    return apexTables.emplace(key, std::move(out)).first->second;
  }

  // Next reference point from `id` toward `target` along its line, or -1.
  int next_toward(int id, Point target) const {
    const LinePointPair& P = pair(id);
    const double tol = kSideTolerance / grid.spacing();
    const double tv = grid.param_of(P.line, target);
    const int count = grid.lines()[P.line].pointCount;
    if (tv > P.point + tol) {
      const int j = P.point + 1;
      return (j < count && j <= tv + tol) ? grid.pair_id(P.line, j) : -1;
    }
    if (tv < P.point - tol) {
      const int j = P.point - 1;
      return (j >= 0 && j >= tv - tol) ? grid.pair_id(P.line, j) : -1;
    }
    return -1;
  }

  Point apex_of(int a, int b) const {
    return *geometry::intersect(line_of(a), line_of(b));
  }

  int nearest_direction(double phi) const {
    const auto& dirs = grid.directions();
    const double step = grid.angle_step();
    const long m = static_cast<long>(std::ceil(2 * std::numbers::pi / step));
    const long base = static_cast<long>(std::floor(phi / step));
    int bestIdx = -1;
    double bestDist = 0;
    auto consider = [&](long i) {
      const int idx = static_cast<int>(((i % m) + m) % m);
      const double d = circular_distance(dirs[idx].phi, phi);
      if (bestIdx < 0 || d < bestDist || (d == bestDist && idx < bestIdx)) {
        bestIdx = idx;
        bestDist = d;
      }
    };
    for (long i = base - 1; i <= base + 2; ++i) consider(i);
    if (grid.horizontal_direction() >= m) {
      const int idx = grid.horizontal_direction();
      const double d = circular_distance(dirs[idx].phi, phi);
      if (d < bestDist) {
        bestIdx = idx;
        bestDist = d;
      }
    }
    return bestIdx;
  }

  Entry& entry(int a, int b) { return memo[pair_key(a, b)]; }

  // Base pair attaining sm(a, b); call after sm(a, b).
  std::pair<int, int> sm_argmin(int a, int b) {
    auto it = memo.find(pair_key(a, b));
    if (it == memo.end() || it->second.sm == kUnset) return {a, b};
    return {it->second.smA, it->second.smB};
  }

  // Triangles without black samples are answered from the sweep tables and
  // never stored: whitening them is free and nothing smaller can beat that.
  int best(int a, int b) {
    if (auto it = memo.find(pair_key(a, b)); it != memo.end() && it->second.best != kUnset) return it->second.best;
    const Counts t = triangle(a, b);
    if (t.black == 0) return 0;
    const int value = static_cast<int>(t.white) + sm(a, b);
    entry(a, b).best = value;
    return value;
  }

  int sm(int a, int b) {
    if (auto it = memo.find(pair_key(a, b)); it != memo.end() && it->second.sm != kUnset) return it->second.sm;
    const Counts t = triangle(a, b);
    if (t.black == 0) return -static_cast<int>(t.white);
    int value, argA = a, argB = b;
    {
      value = fixed_base(a, b) - static_cast<int>(t.white);
      const Point v = apex_of(a, b);
      const int na = next_toward(a, v);
      const int nb = next_toward(b, v);
      if (na >= 0) {
        const int c = sm(na, b);
        if (c < value) {
          value = c;
          std::tie(argA, argB) = sm_argmin(na, b);
        }
      }
      if (nb >= 0) {
        const int c = sm(a, nb);
        if (c < value) {
          value = c;
          std::tie(argA, argB) = sm_argmin(a, nb);
        }
      }
    }
    Entry& e = entry(a, b);
    e.sm = value;
    e.smA = argA;
    e.smB = argB;
    return value;
  }

  int fixed_base(int a, int b) {
    {
      Entry& e = entry(a, b);
      if (e.fixedBase == kBusy) return static_cast<int>(triangle(a, b).black);
      if (e.fixedBase != kUnset) return e.fixedBase;
      e.fixedBase = kBusy;
    }
    const Counts t0 = triangle(a, b);
    int cost = static_cast<int>(t0.black);
    int choicePair = -1;
    const Point pa = pair(a).pos, pb = pair(b).pos;
    const bool degenerate = instance_region(grid, a, b).empty;
    if (cost > 0 && !degenerate) {
      const Point v = apex_of(a, b);
      const Line base = Line::through(pa, pb);
      const double h = base.value(v);
      if (std::fabs(h) > heightLimit) {
        const double sign = h > 0 ? 1.0 : -1.0;
        double phi = std::atan2(sign * base.ny, sign * base.nx);
        if (phi < 0) phi += 2 * std::numbers::pi;
        const int dir = nearest_direction(phi);
        const double dphi = grid.directions()[dir].phi;
        const Point u{std::cos(dphi), std::sin(dphi)};
        const double low = std::max(geometry::dot(u, pa), geometry::dot(u, pb));
        const double top = geometry::dot(u, v);
        const long kLo = static_cast<long>(std::ceil((low - kSideTolerance) / grid.spacing()));
        const long kHi = static_cast<long>(std::ceil((top - kSideTolerance) / grid.spacing())) - 1;
        const int lineA = pair(a).line, lineB = pair(b).line;
        const bool sA = geometry::strict_side(line_of(a), pb) > 0;
        const bool sB = geometry::strict_side(line_of(b), pa) > 0;
        const auto& apexCounts = apex_table(lineA, lineB, sA, sB, dir);
        const auto& dirLines = grid.lines_of(dir);
        for (long k = kLo; k <= kHi; ++k) {
          const int li = grid.line_at(dir, k);
          if (li < 0) continue;
          const long slot = k - grid.lines()[dirLines.front()].offsetIndex;
          const Counts ap = apexCounts[slot];
          if (ap.black >= cost) continue;
          const RefLine& rl = grid.lines()[li];
          const auto v1 = geometry::intersect(line_of(a), rl.line);
          const auto v2 = geometry::intersect(line_of(b), rl.line);
          if (!v1 || !v2) continue;
          const double tol = kSideTolerance / grid.spacing();
          const double t1 = grid.param_of(li, *v1), t2 = grid.param_of(li, *v2);
          const int jLo = std::max(0, static_cast<int>(std::ceil(std::min(t1, t2) - tol)));
          const int jHi = std::min(rl.pointCount - 1, static_cast<int>(std::floor(std::max(t1, t2) + tol)));
          if (jLo > jHi) continue;
          const auto& fanA = fan(a, li);
          const auto& fanB = fan(b, li);
          for (int j = jLo; j <= jHi; ++j) {
            const auto ca = fanA[j], cb = fanB[j];
            const long mid = t0.white - ap.white - ca.white - cb.white;
            long total = ap.black + mid;
            if (total >= cost) continue;
            const int bp = grid.pair_id(li, j);
            total += best(a, bp);
            if (total >= cost) continue;
            total += best(b, bp);
            if (total < cost) {
              cost = static_cast<int>(total);
              choicePair = bp;
            }
          }
        }
      }
    }
    Entry& e = entry(a, b);
    e.fixedBase = cost;
    e.subPair = choicePair;
    return cost;
  }

  void push_region(std::vector<TraceRegion>& out, std::string label, Region r, bool black) {
    if (r.empty) return;
    const Counts c = count_in_region(samples, r);
    out.push_back({std::move(label), std::move(r), black, black ? c.white : c.black});
  }

  void trace_best(int a, int b, std::vector<TraceRegion>& out, std::vector<SubdivisionRecord>* subs,
                  std::vector<Point>* vertices) {
    best(a, b);
    const auto [a0, b0] = sm_argmin(a, b);
    Region whole = instance_region(grid, a, b);
    if (whole.empty) return;
    if (!(a0 == a && b0 == b) && !(a0 == b && b0 == a)) {
      Region quad = whole;
      if (!instance_region(grid, a0, b0).empty) {
        const Point v = apex_of(a, b);
        quad.constraints.push_back(*geometry::side_excluding(Line::through(pair(a0).pos, pair(b0).pos), v));
      }
      push_region(out, "base-change", std::move(quad), true);
      if (vertices) {
        vertices->push_back(pair(a0).pos);
        vertices->push_back(pair(b0).pos);
      }
    }
    trace_fixed_base(a0, b0, out, subs, vertices);
  }

  void trace_fixed_base(int a, int b, std::vector<TraceRegion>& out, std::vector<SubdivisionRecord>* subs,
                        std::vector<Point>* vertices) {
    fixed_base(a, b);
    const Entry e = entry(a, b);
    Region whole = instance_region(grid, a, b);
    if (whole.empty) return;
    if (e.subPair < 0) {
      push_region(out, "end-of-processing", std::move(whole), false);
      return;
    }
    const Point pa = pair(a).pos, pb = pair(b).pos, v = apex_of(a, b);
    const Line& cut = line_of(e.subPair);
    const Point p = pair(e.subPair).pos;
    const Point v1 = *geometry::intersect(line_of(a), cut);
    const Point v2 = *geometry::intersect(line_of(b), cut);

    Region apexRegion;
    apexRegion.constraints = {*geometry::side_containing(line_of(a), pb), *geometry::side_containing(line_of(b), pa),
                              *geometry::side_containing(cut, v)};
    push_region(out, "subdivision-apex", std::move(apexRegion), false);

    Region mid = whole;
    mid.constraints.push_back(*geometry::side_excluding(cut, v));
    if (!instance_region(grid, a, e.subPair).empty)
      mid.constraints.push_back(*geometry::side_excluding(Line::through(pa, p), v1));
    if (!instance_region(grid, b, e.subPair).empty)
      mid.constraints.push_back(*geometry::side_excluding(Line::through(pb, p), v2));
    push_region(out, "subdivision-middle", std::move(mid), true);

    if (subs) {
      SubdivisionRecord r;
      r.area = geometry::triangle_area(pa, pb, v);
      r.areaLeft = geometry::triangle_area(pa, p, v1);
      r.areaRight = geometry::triangle_area(p, pb, v2);
      const auto angle_at = [](Point o, Point x, Point y) {
        const Point s = x - o, t = y - o;
        return std::atan2(std::fabs(geometry::cross(s, t)), geometry::dot(s, t));
      };
      r.baseAngleLeft = angle_at(pa, pb, v);
      r.baseAngleRight = angle_at(pb, pa, v);
      subs->push_back(r);
    }
    if (vertices) vertices->push_back(p);
    trace_best(a, e.subPair, out, subs, vertices);
    trace_best(b, e.subPair, out, subs, vertices);
  }
};

TriangleDp::TriangleDp(const ReferenceGrid& grid, std::vector<LabeledPoint> samples, double heightFactor)
    : impl_(std::make_unique<Impl>(grid, std::move(samples), heightFactor)) {}
TriangleDp::~TriangleDp() = default;

long TriangleDp::best(int a, int b) { return impl_->best(a, b); }
long TriangleDp::best_for_fixed_base(int a, int b) { return impl_->fixed_base(a, b); }
Counts TriangleDp::triangle_counts(int a, int b) { return impl_->triangle(a, b); }
void TriangleDp::trace_best(int a, int b, std::vector<TraceRegion>& out, std::vector<SubdivisionRecord>* subs,
                            std::vector<Point>* vertices) {
  impl_->trace_best(a, b, out, subs, vertices);
}
std::size_t TriangleDp::memo_entries() const { return impl_->memo.size(); }
const ReferenceGrid& TriangleDp::grid() const { return impl_->grid; }
const std::vector<LabeledPoint>& TriangleDp::samples() const { return impl_->samples; }

}  // namespace tit::convexity
