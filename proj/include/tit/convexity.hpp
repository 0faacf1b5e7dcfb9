#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tit/geometry.hpp"
#include "tit/image.hpp"

namespace tit::convexity {

using geometry::Line;
using geometry::Point;
using geometry::Region;

struct ConvexityConstants {
  double deltaDivisor = 4;  // grid angle step is delta / deltaDivisor
  double heightFactor = 6;  // subdivide triangles taller than heightFactor * spacing
  double sampleConst = 6;   // s = ceil(sampleConst / delta^2 * ln(1/delta))
  std::string name = "practical";

  static ConvexityConstants paper();
  static ConvexityConstants practical();
  static ConvexityConstants by_name(const std::string& name);
};

std::size_t sample_size(double delta, const ConvexityConstants& constants);

struct Direction {
  double phi = 0;
};

// A reference line with its reference points, which start where the line
// enters the image square and are spaced exactly `spacing` apart.
struct RefLine {
  int direction = 0;
  long offsetIndex = 0;  // raw offset is offsetIndex * spacing along (cos phi, sin phi)
  Line line;
  Point start;
  Point step;            // spacing times the unit direction along the line
  double length = 0;     // length of the chord inside the image square
  int firstPair = 0;     // global id of the line's first line-point pair
  int pointCount = 0;
};

struct LinePointPair {
  int line = 0;
  int point = 0;
  Point pos;
};

class ReferenceGrid {
 public:
  // Throws ParameterError if the spacing drops below a quarter pixel and
  // ResourceError if the grid exceeds `maxPairs` line-point pairs.
  ReferenceGrid(int n, double delta, const ConvexityConstants& constants, std::size_t maxPairs = 1u << 21);

  int n() const { return n_; }
  double delta() const { return delta_; }
  double angle_step() const { return step_; }
  double spacing() const { return spacing_; }
  const std::vector<Direction>& directions() const { return directions_; }
  const std::vector<RefLine>& lines() const { return lines_; }
  const std::vector<LinePointPair>& pairs() const { return pairs_; }
  int horizontal_direction() const { return horizontal_; }
  int vertical_direction() const { return 0; }
  // Line indices of one direction in increasing offset order.
  const std::vector<int>& lines_of(int direction) const { return byDirection_[direction]; }
  // Line of the given direction and raw offset index, or -1.
  int line_at(int direction, long offsetIndex) const;
  int pair_id(int line, int point) const { return lines_[line].firstPair + point; }
  // Position of a point on its line, in units of `spacing` from the start.
  double param_of(int line, Point p) const;

 private:
  int n_;
  double delta_, step_, spacing_;
  int horizontal_ = 0;
  std::vector<Direction> directions_;
  std::vector<RefLine> lines_;
  std::vector<LinePointPair> pairs_;
  std::vector<std::vector<int>> byDirection_;
  std::vector<long> firstOffset_;
};

struct LabeledPoint {
  Point p;
  bool black = false;
};

struct Counts {
  long black = 0;
  long white = 0;
};

Counts count_in_region(const std::vector<LabeledPoint>& samples, const Region& region);

// Triangle spanned by two line-point pairs and the intersection of their lines.
Region instance_region(const ReferenceGrid& grid, int pairA, int pairB);

// Executed subdivision step, kept for the contraction check.
struct SubdivisionRecord {
  double area = 0;       // triangle being subdivided
  double areaLeft = 0;   // the two triangles left gray afterwards
  double areaRight = 0;
  double baseAngleLeft = 0;
  double baseAngleRight = 0;
};

struct TraceRegion {
  std::string label;
  Region region;
  bool black = false;
  long errors = 0;  // samples whose color disagrees with the decision
};

// Memoised triangle costs over one sample. Costs are integer sample counts.
class TriangleDp {
 public:
  TriangleDp(const ReferenceGrid& grid, std::vector<LabeledPoint> samples, double heightFactor);
  ~TriangleDp();
  TriangleDp(const TriangleDp&) = delete;
  TriangleDp& operator=(const TriangleDp&) = delete;

  // Cheapest decomposition of the triangle of two line-point pairs: a
  // black strip next to the base followed by the fixed-base recursion.
  long best(int pairA, int pairB);
  // Fixed-base cost: whiten everything, or subdivide when the triangle is tall.
  long best_for_fixed_base(int pairA, int pairB);
  // Sample counts of an instance triangle, answered from the sweep tables.
  Counts triangle_counts(int pairA, int pairB);

  // Appends the regions of the optimal decomposition; optionally records the
  // executed subdivisions and the polygon vertices chosen along the way.
  void trace_best(int pairA, int pairB, std::vector<TraceRegion>& out, std::vector<SubdivisionRecord>* subs = nullptr,
                  std::vector<Point>* vertices = nullptr);
  std::size_t memo_entries() const;

  const ReferenceGrid& grid() const;
  const std::vector<LabeledPoint>& samples() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct ConvexityOptions {
  SampleMode mode = SampleMode::Bernoulli;
  ConvexityConstants constants = ConvexityConstants::practical();
  std::size_t maxLinePointPairs = 1u << 21;
};

struct ConvexityEstimate {
  double dhat = 0;
  long errorCount = 0;
  std::size_t sampleSize = 0;    // intended size parameter s (n^2 in full mode)
  std::size_t drawnSamples = 0;
  double normalizer = 0;
  std::vector<Point> hypothesisVertices;
  std::vector<TraceRegion> trace;
  std::vector<SubdivisionRecord> subdivisions;
  std::size_t linePointPairs = 0;
  std::size_t memoEntries = 0;
  std::vector<std::string> warnings;
};

// Throws ParameterError unless 0 < delta <= 1/4.
ConvexityEstimate estimate_convexity_distance(const BinaryImage& m, double delta, std::uint64_t seed,
                                              const ConvexityOptions& options = {});
ConvexityEstimate estimate_convexity_from_samples(int n, double delta, const SampleSet& samples,
                                                  const ConvexityOptions& options = {});

// Black iff the pixel center lies in a black trace region.
BinaryImage render_trace(int n, const std::vector<TraceRegion>& trace);

struct ConvexHypothesis {
  std::vector<Point> vertices;
  BinaryImage hypothesis;
  ConvexityEstimate estimate;
};
ConvexHypothesis learn_convex(const BinaryImage& m, double delta, std::uint64_t seed,
                              const ConvexityOptions& options = {});

}  // namespace tit::convexity
