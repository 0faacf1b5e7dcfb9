#pragma once

#include <cstdint>
#include <string>

#include "tit/image.hpp"
#include "tit/report.hpp"

namespace tit {

enum class Property { HalfPlane, Convex, Connected };

// Accepts "halfplane", "convex" and "connected".
Property parse_property(const std::string& name);
const char* to_string(Property p);

struct EstimateRequest {
  Property property = Property::HalfPlane;
  double delta = 0.1;
  std::uint64_t seed = 0;
  // Empty selects the estimator's default mode.
  std::string mode;
  std::string constants = "practical";
};

// Default modes: uniform (half-plane), bernoulli (convex), block
// (connected, meaning sampled squares; "full" averages every square).
std::string default_mode(Property p);

// Runs one estimator and fills a report. sampleCount is the intended sample
// size s, or the number of sampled squares for connectedness.
RunReport run_estimate(const BinaryImage& m, const EstimateRequest& request);

}  // namespace tit
