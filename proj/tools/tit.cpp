// tit: command-line front end for the distance estimators.
//
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success,
// 1 I/O or malformed input, 2 invalid parameters, 3 resource limit.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tit/connectedness.hpp"
#include "tit/convexity.hpp"
#include "tit/errors.hpp"
#include "tit/gen.hpp"
#include "tit/halfplane.hpp"
#include "tit/oracles.hpp"
#include "tit/pbm.hpp"
#include "tit/predicates.hpp"
#include "tit/runner.hpp"

using nlohmann::ordered_json;
using namespace tit;

namespace {

constexpr const char* kBenchSchema = "tit.bench/1";

struct Common {
  double delta = 0.1;
  std::uint64_t seed = 0;
  std::string mode;
  std::string constants = "practical";
  bool json = false;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool withMode = true) {
  cmd->add_option("--delta", c.delta, "Error parameter delta");
  cmd->add_option("--seed", c.seed, "Random seed");
  if (withMode) {
    cmd->add_option("--mode", c.mode, "Sampling mode: uniform, bernoulli, block or full");
    cmd->add_option("--constants", c.constants, "Convexity constants preset: paper or practical");
  }
  cmd->add_flag("--json", c.json, "Print machine-readable JSON");
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("failed writing '" + path + "'");
}

int cmd_estimate(const std::string& property, const std::string& path, const Common& c) {
  const BinaryImage m = read_pbm(path);
  EstimateRequest req;
  req.property = parse_property(property);
  req.delta = c.delta;
  req.seed = c.seed;
  req.mode = c.mode;
  req.constants = c.constants;
  const RunReport r = run_estimate(m, req);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  if (c.json) {
    print_json(to_json(r));
  } else {
    std::printf("%s estimate %.6f (n=%d, delta=%g, samples=%llu, %.1f ms)\n", r.property.c_str(), r.estimate, r.n,
                r.delta, static_cast<unsigned long long>(r.sampleCount), r.wallMillis);
  }
  return 0;
}

int cmd_learn(const std::string& property, const std::string& path, const Common& c) {
  const BinaryImage m = read_pbm(path);
  const SampleMode mode = parse_sample_mode(c.mode.empty() ? (property == "convex" ? "bernoulli" : "uniform") : c.mode);
  ordered_json j;
  j["schema"] = "tit.learn/1";
  j["property"] = property;
  j["n"] = m.n();
  j["delta"] = c.delta;
  j["seed"] = c.seed;
  BinaryImage hypothesis;
  if (property == "halfplane") {
    const auto h = halfplane::learn_halfplane(m, c.delta, c.seed, {mode});
    hypothesis = h.hypothesis;
    j["estimate"] = h.estimate.dhat;
    j["phi"] = h.ref.phi;
    j["c"] = h.ref.c;
  } else if (property == "convex") {
    convexity::ConvexityOptions opts;
    opts.mode = mode;
    opts.constants = convexity::ConvexityConstants::by_name(c.constants);
    const auto h = convexity::learn_convex(m, c.delta, c.seed, opts);
    hypothesis = h.hypothesis;
    j["estimate"] = h.estimate.dhat;
    j["constantsPreset"] = opts.constants.name;
    ordered_json verts = ordered_json::array();
    for (const auto& v : h.vertices) verts.push_back({v.x, v.y});
    j["vertices"] = verts;
  } else {
    throw ParameterError("learn supports halfplane and convex, got '" + property + "'");
  }
  j["hypothesisDistance"] = relative_distance(m, hypothesis);
  if (!c.out.empty()) {
    write_pbm(hypothesis, c.out);
    j["hypothesis"] = c.out;
  }
  print_json(j);
  return 0;
}

double oracle_for(const std::string& property, const BinaryImage& m) {
  if (property == "halfplane") return oracles::oracle_halfplane_distance(m);
  if (property == "convex") return oracles::oracle_convexity_distance(m);
  if (property == "connected") return oracles::oracle_connectedness_distance(m);
  if (property == "border-connected") return oracles::oracle_border_connectedness_distance(m);
  throw ParameterError("unknown oracle property '" + property + "'");
}

int cmd_oracle(const std::string& property, const std::string& path, bool json) {
  const BinaryImage m = read_pbm(path);
  const double d = oracle_for(property, m);
  if (json) {
    ordered_json j;
    j["schema"] = "tit.oracle/1";
    j["property"] = property;
    j["n"] = m.n();
    j["distance"] = d;
    print_json(j);
  } else {
    std::printf("%.17g\n", d);
  }
  return 0;
}

struct GenParams {
  int n = 64;
  double rho = 0;
  int vertices = 8;
  double density = 0.3;
};

BinaryImage generate_clean(Property p, const GenParams& g, std::uint64_t seed) {
  switch (p) {
    case Property::HalfPlane: return gen::gen_halfplane(g.n, seed);
    case Property::Convex: return gen::gen_convex(g.n, g.vertices, seed);
    case Property::Connected: return gen::gen_connected(g.n, g.density, seed);
  }
  throw ParameterError("unknown property");
}

int cmd_gen(const std::string& property, const GenParams& g, const Common& c) {
  if (c.out.empty()) throw ParameterError("gen requires --out <path.pbm>");
  const Property p = parse_property(property);
  const BinaryImage clean = generate_clean(p, g, c.seed);
  const auto planted = gen::add_noise(clean, g.rho, c.seed + 1);
  write_pbm(planted.noisy, c.out);
  ordered_json j;
  j["schema"] = "tit.gen/1";
  j["property"] = property;
  j["n"] = g.n;
  j["rho"] = g.rho;
  j["seed"] = c.seed;
  j["flipCount"] = planted.flipped.size();
  j["image"] = c.out;
  write_text(c.out + ".json", j.dump(2) + "\n");
  if (c.json) print_json(j);
  return 0;
}

// "n=24,48;delta=0.15;rho=0,0.05" -> lists; missing keys keep defaults.
struct BenchGrid {
  std::vector<int> n{24};
  std::vector<double> delta{0.15};
  std::vector<double> rho{0.0};
};

BenchGrid parse_grid(const std::string& text, double defaultDelta) {
  BenchGrid g;
  g.delta = {defaultDelta};
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ParameterError("grid entry '" + part + "' lacks '='");
    const std::string key = part.substr(0, eq);
    std::stringstream vs(part.substr(eq + 1));
    std::string v;
    std::vector<double> values;
    while (std::getline(vs, v, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(v, &used));
        if (used != v.size()) throw std::invalid_argument(v);
      } catch (const std::exception&) {
        throw ParameterError("grid value '" + v + "' for key '" + key + "' is not a number");
      }
    }
    if (values.empty()) throw ParameterError("grid key '" + key + "' has no values");
    if (key == "n") {
      g.n.clear();
      for (double x : values) g.n.push_back(static_cast<int>(x));
    } else if (key == "delta") {
      g.delta = values;
    } else if (key == "rho") {
      g.rho = values;
    } else {
      throw ParameterError("unknown grid key '" + key + "' (expected n, delta, rho)");
    }
  }
  return g;
}

struct BenchRow {
  int n = 0;
  double delta = 0, rho = 0;
  long trial = 0;
  std::uint64_t seed = 0;
  double estimate = 0;
  double reference = 0;
  std::string referenceKind;
  bool hit = false;
  std::exception_ptr error;
};

int oracle_budget(Property p) {
  switch (p) {
    case Property::HalfPlane: return oracles::OracleBudget::halfplane;
    case Property::Convex: return oracles::OracleBudget::convexity;
    case Property::Connected: return oracles::OracleBudget::connectedness;
  }
  return 0;
}

BenchRow run_trial(Property p, const GenParams& base, double delta, const Common& c, long trial,
                   std::uint64_t seed) {
  BenchRow row;
  row.n = base.n;
  row.delta = delta;
  row.rho = base.rho;
  row.trial = trial;
  row.seed = seed;
  const BinaryImage clean = generate_clean(p, base, seed);
  const auto planted = gen::add_noise(clean, base.rho, seed + 1);
  EstimateRequest req;
  req.property = p;
  req.delta = delta;
  req.seed = seed;
  req.mode = c.mode;
  req.constants = c.constants;
  row.estimate = run_estimate(planted.noisy, req).estimate;
  if (base.n <= oracle_budget(p)) {
    row.reference = oracle_for(to_string(p), planted.noisy);
    row.referenceKind = "oracle";
    row.hit = std::abs(row.estimate - row.reference) <= delta;
  } else {
    // The clean image is in the class, so the distance is at most the flip fraction.
    row.reference = static_cast<double>(planted.flipped.size()) / static_cast<double>(planted.noisy.pixel_count());
    row.referenceKind = "planted-bound";
    row.hit = row.estimate <= row.reference + delta;
  }
  return row;
}

unsigned thread_cap() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw ParameterError("TIT_THREADS must be a positive integer");
    threads = static_cast<unsigned>(v);
  }
  return threads;
}

int cmd_bench(const std::string& property, const std::string& gridText, int trials, const GenParams& gp,
              const Common& c) {
  if (trials < 1) throw ParameterError("--trials must be at least 1");
  const Property p = parse_property(property);
  const BenchGrid grid = parse_grid(gridText, c.delta);
  struct Job {
    GenParams params;
    double delta;
    long trial;
  };
  std::vector<Job> jobs;
  for (int n : grid.n)
    for (double d : grid.delta)
      for (double rho : grid.rho)
        for (int t = 0; t < trials; ++t) {
          GenParams g = gp;
          g.n = n;
          g.rho = rho;
          jobs.push_back({g, d, static_cast<long>(jobs.size())});
        }
  std::vector<BenchRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(job.trial);
      try {
        rows[i] = run_trial(p, job.params, job.delta, c, job.trial, seed);
      } catch (...) {
        rows[i].error = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(thread_cap(), jobs.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // The first failing trial decides the exit status, independent of scheduling.
  for (const auto& r : rows)
    if (r.error) std::rethrow_exception(r.error);

  std::ostringstream csv;
  csv << "schema,property,n,delta,rho,trial,seed,estimate,reference,reference_kind,hit\n";
  long hits = 0;
  char buf[64];
  const auto num = [&](double v) {
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  };
  for (const auto& r : rows) {
    hits += r.hit;
    csv << kBenchSchema << ',' << property << ',' << r.n << ',' << num(r.delta) << ',' << num(r.rho) << ','
        << r.trial << ',' << r.seed << ',' << num(r.estimate) << ',' << num(r.reference) << ',' << r.referenceKind
        << ',' << (r.hit ? 1 : 0) << '\n';
  }
  if (c.out.empty()) {
    std::cout << csv.str();
  } else {
    write_text(c.out, csv.str());
  }
  std::fprintf(stderr, "bench: %zu trials, hit rate %.4f\n", rows.size(),
               static_cast<double>(hits) / static_cast<double>(rows.size()));
  return 0;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance estimators for half-plane, convexity and connectedness of binary images"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  std::string property, image;

  auto* estimate = app.add_subcommand("estimate", "Estimate the distance of a PBM image to a property");
  estimate->add_option("property", property, "halfplane, convex or connected")->required();
  estimate->add_option("image", image, "PBM image (P1 or P4)")->required();
  add_common(estimate, common);

  auto* learn = app.add_subcommand("learn", "Learn a hypothesis image (halfplane or convex)");
  learn->add_option("property", property, "halfplane or convex")->required();
  learn->add_option("image", image, "PBM image")->required();
  add_common(learn, common);
  learn->add_option("--out", common.out, "Write the hypothesis image here (PBM)");

  auto* oracle = app.add_subcommand("oracle", "Exact distance on small images");
  oracle->add_option("property", property, "halfplane, convex, connected or border-connected")->required();
  oracle->add_option("image", image, "PBM image")->required();
  oracle->add_flag("--json", common.json, "Print machine-readable JSON");

  GenParams gp;
  auto* gen = app.add_subcommand("gen", "Generate a planted instance (PBM plus JSON sidecar)");
  gen->add_option("property", property, "halfplane, convex or connected")->required();
  gen->add_option("--n", gp.n, "Image side");
  gen->add_option("--rho", gp.rho, "Noise fraction in [0, 1]");
  gen->add_option("--vertices", gp.vertices, "Random points spanning a convex image");
  gen->add_option("--density", gp.density, "Target density of a connected image");
  gen->add_option("--seed", common.seed, "Random seed");
  gen->add_option("--out", common.out, "Output PBM path; the sidecar is <out>.json")->required();
  gen->add_flag("--json", common.json, "Also print the sidecar JSON");

  int trials = 10;
  std::string gridText;
  auto* bench = app.add_subcommand("bench", "Seeded benchmark over a grid of n, delta and rho; writes CSV");
  bench->add_option("property", property, "halfplane, convex or connected")->required();
  bench->add_option("--trials", trials, "Trials per grid point");
  bench->add_option("--grid", gridText, "Grid such as 'n=24,48;delta=0.15;rho=0,0.05'");
  bench->add_option("--vertices", gp.vertices, "Random points spanning a convex image");
  bench->add_option("--density", gp.density, "Target density of a connected image");
  bench->add_option("--out", common.out, "CSV output path (default stdout)");
  add_common(bench, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: parameter: " << one_line(e.what()) << '\n';
    return 2;
  }

  try {
    if (*estimate) return cmd_estimate(property, image, common);
    if (*learn) return cmd_learn(property, image, common);
    if (*oracle) return cmd_oracle(property, image, common.json);
    if (*gen) return cmd_gen(property, gp, common);
    if (*bench) return cmd_bench(property, gridText, trials, gp, common);
  } catch (const ParameterError& e) {
    std::cerr << "error: parameter: " << one_line(e.what()) << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: resource: " << one_line(e.what()) << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: input: " << one_line(e.what()) << '\n';
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: io: " << one_line(e.what()) << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << one_line(e.what()) << '\n';
    return 1;
  }
  return 0;
}
