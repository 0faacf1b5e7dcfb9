#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace tit {

// Summary of one estimator run. The JSON key order is fixed so that two runs
// with the same flags differ only in wallMillis.
struct RunReport {
  std::string property;
  int n = 0;
  double delta = 0;
  std::uint64_t seed = 0;
  std::string constantsPreset;
  std::string mode;
  double estimate = 0;
  std::uint64_t sampleCount = 0;
  double wallMillis = 0;
  std::vector<std::string> warnings;
};

inline nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "tit.run_report/1";
  j["property"] = r.property;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["seed"] = r.seed;
  j["constantsPreset"] = r.constantsPreset;
  j["mode"] = r.mode;
  j["estimate"] = r.estimate;
  j["sampleCount"] = r.sampleCount;
  j["wallMillis"] = r.wallMillis;
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace tit
