#include "tit/runner.hpp"

#include <chrono>

#include "tit/connectedness.hpp"
#include "tit/convexity.hpp"
#include "tit/errors.hpp"
#include "tit/halfplane.hpp"

namespace tit {

Property parse_property(const std::string& name) {
  if (name == "halfplane") return Property::HalfPlane;
  if (name == "convex") return Property::Convex;
  if (name == "connected") return Property::Connected;
  throw ParameterError("unknown property '" + name + "' (expected halfplane, convex or connected)");
}

const char* to_string(Property p) {
  switch (p) {
    case Property::HalfPlane: return "halfplane";
    case Property::Convex: return "convex";
    case Property::Connected: return "connected";
  }
  return "?";
}

std::string default_mode(Property p) {
  switch (p) {
    case Property::HalfPlane: return "uniform";
    case Property::Convex: return "bernoulli";
    case Property::Connected: return "block";
  }
  return "uniform";
}

RunReport run_estimate(const BinaryImage& m, const EstimateRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  r.property = to_string(req.property);
  r.n = m.n();
  r.delta = req.delta;
  r.seed = req.seed;
  r.mode = req.mode.empty() ? default_mode(req.property) : req.mode;
  const SampleMode mode = parse_sample_mode(r.mode);
  switch (req.property) {
    case Property::HalfPlane: {
      r.constantsPreset = "n/a";
      const auto est = halfplane::estimate_halfplane_distance(m, req.delta, req.seed, {mode});
      r.estimate = est.dhat;
      r.sampleCount = est.sampleSize;
      r.warnings = est.warnings;
      break;
    }
    case Property::Convex: {
      convexity::ConvexityOptions opts;
      opts.mode = mode;
      opts.constants = convexity::ConvexityConstants::by_name(req.constants);
      r.constantsPreset = opts.constants.name;
      const auto est = convexity::estimate_convexity_distance(m, req.delta, req.seed, opts);
      r.estimate = est.dhat;
      r.sampleCount = est.sampleSize;
      r.warnings = est.warnings;
      break;
    }
    case Property::Connected: {
      r.constantsPreset = "n/a";
      if (mode == SampleMode::Block) {
        const auto est = connectedness::estimate_connectedness_distance(m, req.delta, req.seed);
        r.estimate = est.dhat;
        r.sampleCount = est.squareSamples;
        r.warnings = est.warnings;
      } else if (mode == SampleMode::Full) {
        const auto part = connectedness::pad_and_partition(m.n(), req.delta);
        r.estimate = connectedness::connectedness_full_average(m, req.delta);
        r.sampleCount = static_cast<std::uint64_t>(part.squaresPerSide) * part.squaresPerSide;
      } else {
        throw ParameterError("connectedness supports modes block and full, got " + r.mode);
      }
      break;
    }
  }
  r.wallMillis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace tit
