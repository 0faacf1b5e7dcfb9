#include "tit/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tit/errors.hpp"

namespace tit::halfplane {

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 0.25))
    throw ParameterError("delta must lie in (0, 1/4), got " + std::to_string(delta));
}

double projection(int x, int y, double cs, double sn) { return x * cs + y * sn; }

// Bucket index j with j*a <= p < (j+1)*a, computed so that it agrees with the
// comparison p >= j*a used by the renderer.
long bucket_of(double p, double a) {
  long j = static_cast<long>(std::floor(p / a));
  while (p < static_cast<double>(j) * a) --j;
  while (p >= static_cast<double>(j + 1) * a) ++j;
  return j;
}

}  // namespace

DirectionSet make_directions(double delta) {
  DirectionSet d;
  d.delta = delta;
  const auto count = static_cast<long>(std::ceil(2 * std::numbers::pi / delta));
  d.angles.reserve(count);
  for (long i = 0; i < count; ++i) d.angles.push_back(static_cast<double>(i) * delta);
  return d;
}

double offset_spacing(int n, double delta) { return delta * n / std::numbers::sqrt2; }

std::size_t sample_size(double delta) {
  return static_cast<std::size_t>(std::ceil(6.0 / (delta * delta) * std::log(7.0 / delta)));
}

OffsetRange offset_range(int n, double phi, double spacing) {
  const double cs = std::cos(phi), sn = std::sin(phi);
  double lo = 0, hi = 0;
  bool first = true;
  for (int cx : {0, n - 1})
    for (int cy : {0, n - 1}) {
      const double p = projection(cx, cy, cs, sn);
      lo = first ? p : std::min(lo, p);
      hi = first ? p : std::max(hi, p);
      first = false;
    }
  return {bucket_of(lo, spacing), bucket_of(hi, spacing) + 1};
}

BinaryImage render_halfplane(const HalfPlaneRef& ref) {
  if (ref.n < 1) throw ParameterError("half-plane image side must be at least 1");
  BinaryImage img(ref.n);
  const double cs = std::cos(ref.phi), sn = std::sin(ref.phi);
  for (int y = 0; y < ref.n; ++y)
    for (int x = 0; x < ref.n; ++x) img.set(x, y, projection(x, y, cs, sn) >= ref.c);
  return img;
}

HalfPlaneEstimate estimate_halfplane_from_samples(int n, double delta, const SampleSet& samples) {
  check_delta(delta);
  if (n < 1) throw ParameterError("image side must be at least 1");
  const double a = offset_spacing(n, delta);
  const DirectionSet dirs = make_directions(delta);
  const double norm = samples.normalizer > 0 ? samples.normalizer : 1.0;

  HalfPlaneEstimate best;
  best.sampleSize = samples.mode == SampleMode::Full ? static_cast<std::size_t>(n) * n
                                                     : static_cast<std::size_t>(std::llround(samples.sizeParam));
  bool have = false;
  long bestErrors = 0;
  std::vector<long> black, white;
  for (std::size_t di = 0; di < dirs.angles.size(); ++di) {
    const double phi = dirs.angles[di];
    const double cs = std::cos(phi), sn = std::sin(phi);
    const OffsetRange range = offset_range(n, phi, a);
    best.candidateCount += static_cast<std::size_t>(range.count());
    black.assign(range.count(), 0);
    white.assign(range.count(), 0);
    for (const auto& s : samples.samples) {
      const long j = bucket_of(projection(s.x, s.y, cs, sn), a) - range.first;
      (s.black ? black : white)[j] += 1;
    }
    // Candidate j renders buckets >= j black. Its errors are black samples
    // below j plus white samples at or above j.
    long whiteAbove = 0;
    for (long w : white) whiteAbove += w;
    long blackBelow = 0;
    for (long j = 0; j < range.count(); ++j) {
      const long errors = blackBelow + whiteAbove;
      if (!have || errors < bestErrors) {
        have = true;
        bestErrors = errors;
        best.argmin = {phi, static_cast<double>(j + range.first) * a, n, static_cast<int>(di),
                       j + range.first};
      }
      blackBelow += black[j];
      whiteAbove -= white[j];
    }
  }
  best.dhat = std::clamp(static_cast<double>(bestErrors) / norm, 0.0, 0.5);
  if (delta <= 90.0 / n)
    best.warnings.push_back("delta <= 90/n: outside the regime where the accuracy guarantee is proven");
  return best;
}

HalfPlaneEstimate estimate_halfplane_distance(const BinaryImage& m, double delta, std::uint64_t seed,
                                              HalfPlaneOptions options) {
  check_delta(delta);
  Rng rng(seed);
  const std::size_t s = sample_size(delta);
  SampleSet samples;
  switch (options.mode) {
    case SampleMode::Uniform: samples = sample_uniform(m, s, rng); break;
    case SampleMode::Bernoulli: samples = sample_bernoulli(m, static_cast<double>(s), rng); break;
    case SampleMode::Full: samples = sample_full(m); break;
    case SampleMode::Block: throw ParameterError("block sampling is not supported for the half-plane estimator");
  }
  return estimate_halfplane_from_samples(m.n(), delta, samples);
}

HalfPlaneHypothesis learn_halfplane(const BinaryImage& m, double delta, std::uint64_t seed,
                                    HalfPlaneOptions options) {
  HalfPlaneHypothesis out;
  out.estimate = estimate_halfplane_distance(m, delta, seed, options);
  out.ref = out.estimate.argmin;
  out.hypothesis = render_halfplane(out.ref);
  return out;
}

}  // namespace tit::halfplane
