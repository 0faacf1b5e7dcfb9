// Python bindings. Images cross the boundary as square uint8 numpy arrays
// indexed [row, column] with nonzero meaning black.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tit/connectedness.hpp"
#include "tit/convexity.hpp"
#include "tit/errors.hpp"
#include "tit/gen.hpp"
#include "tit/halfplane.hpp"
#include "tit/oracles.hpp"
#include "tit/pbm.hpp"
#include "tit/predicates.hpp"
#include "tit/runner.hpp"

namespace py = pybind11;
using namespace tit;

namespace {

using Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

BinaryImage to_image(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw ParameterError("image must be a square 2-D array");
  const int n = static_cast<int>(a.shape(0));
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * n);
  const auto* src = a.data();
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = src[i] != 0;
  return BinaryImage(n, std::move(bits));
}

Array to_array(const BinaryImage& m) {
  Array out({m.n(), m.n()});
  std::copy(m.bits().begin(), m.bits().end(), out.mutable_data());
  return out;
}

py::dict report_dict(const RunReport& r) {
  py::dict d;
  d["property"] = r.property;
  d["n"] = r.n;
  d["delta"] = r.delta;
  d["seed"] = r.seed;
  d["constantsPreset"] = r.constantsPreset;
  d["mode"] = r.mode;
  d["estimate"] = r.estimate;
  d["sampleCount"] = r.sampleCount;
  d["wallMillis"] = r.wallMillis;
  d["warnings"] = r.warnings;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tit, m) {
  m.doc() = "Distance estimators for half-plane, convexity and connectedness of binary images";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def(
      "estimate",
      [](const std::string& property, const Array& image, double delta, std::uint64_t seed, const std::string& mode,
         const std::string& constants) {
        EstimateRequest req;
        req.property = parse_property(property);
        req.delta = delta;
        req.seed = seed;
        req.mode = mode;
        req.constants = constants;
        const BinaryImage img = to_image(image);
        RunReport r;
        {
          py::gil_scoped_release release;
          r = run_estimate(img, req);
        }
        return report_dict(r);
      },
      py::arg("property"), py::arg("image"), py::arg("delta") = 0.1, py::arg("seed") = 0, py::arg("mode") = "",
      py::arg("constants") = "practical", "Run one estimator and return its report as a dict.");

  m.def(
      "oracle",
      [](const std::string& property, const Array& image) {
        const BinaryImage img = to_image(image);
        if (property == "halfplane") return oracles::oracle_halfplane_distance(img);
        if (property == "convex") return oracles::oracle_convexity_distance(img);
        if (property == "connected") return oracles::oracle_connectedness_distance(img);
        if (property == "border-connected") return oracles::oracle_border_connectedness_distance(img);
        throw ParameterError("unknown oracle property '" + property + "'");
      },
      py::arg("property"), py::arg("image"), "Exact distance for small images.");

  m.def(
      "learn_halfplane",
      [](const Array& image, double delta, std::uint64_t seed) {
        const auto h = halfplane::learn_halfplane(to_image(image), delta, seed);
        return py::make_tuple(to_array(h.hypothesis), h.ref.phi, h.ref.c, h.estimate.dhat);
      },
      py::arg("image"), py::arg("delta"), py::arg("seed") = 0,
      "Returns (hypothesis, phi, c, estimate).");

  m.def(
      "learn_convex",
      [](const Array& image, double delta, std::uint64_t seed, const std::string& constants) {
        convexity::ConvexityOptions opts;
        opts.constants = convexity::ConvexityConstants::by_name(constants);
        const BinaryImage img = to_image(image);
        convexity::ConvexHypothesis h;
        {
          py::gil_scoped_release release;
          h = convexity::learn_convex(img, delta, seed, opts);
        }
        std::vector<std::pair<double, double>> verts;
        for (const auto& v : h.vertices) verts.emplace_back(v.x, v.y);
        return py::make_tuple(to_array(h.hypothesis), verts, h.estimate.dhat);
      },
      py::arg("image"), py::arg("delta"), py::arg("seed") = 0, py::arg("constants") = "practical",
      "Returns (hypothesis, vertices, estimate).");

  m.def("is_halfplane", [](const Array& a) { return is_halfplane(to_image(a)); });
  m.def("is_convex", [](const Array& a) { return is_convex(to_image(a)); });
  m.def("is_connected", [](const Array& a) { return is_connected(to_image(a)); });
  m.def("is_border_connected", [](const Array& a) { return is_border_connected(to_image(a)); });

  m.def("gen_halfplane", [](int n, std::uint64_t seed) { return to_array(gen::gen_halfplane(n, seed)); },
        py::arg("n"), py::arg("seed") = 0);
  m.def(
      "gen_convex",
      [](int n, int vertices, std::uint64_t seed) { return to_array(gen::gen_convex(n, vertices, seed)); },
      py::arg("n"), py::arg("vertices") = 8, py::arg("seed") = 0);
  m.def(
      "gen_connected",
      [](int n, double density, std::uint64_t seed) { return to_array(gen::gen_connected(n, density, seed)); },
      py::arg("n"), py::arg("density") = 0.3, py::arg("seed") = 0);
  m.def(
      "add_noise",
      [](const Array& image, double rho, std::uint64_t seed) {
        const auto p = gen::add_noise(to_image(image), rho, seed);
        return py::make_tuple(to_array(p.noisy), static_cast<long>(p.flipped.size()));
      },
      py::arg("image"), py::arg("rho"), py::arg("seed") = 0, "Returns (noisy, flip_count).");

  m.def("read_pbm", [](const std::string& path) { return to_array(read_pbm(path)); });
  m.def(
      "write_pbm",
      [](const Array& image, const std::string& path, bool ascii) {
        write_pbm(to_image(image), path, ascii ? PbmFormat::Ascii : PbmFormat::Raw);
      },
      py::arg("image"), py::arg("path"), py::arg("ascii") = false);
}
