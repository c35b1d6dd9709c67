#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcd/asymptotics.hpp"
#include "pcd/cli.hpp"
#include "pcd/domination.hpp"
#include "pcd/io.hpp"
#include "pcd/sim.hpp"

namespace py = pybind11;
using namespace pcd;

namespace {

py::dict law_dict(const Factor& r, const GammaLaw& law) {
  const auto [mean, var] = law_moments(law);
  py::dict d;
  d["r"] = r.str();
  d["law"] = law.name();
  d["q"] = law.q;
  d["pmf"] = std::vector<double>{law.pmf(1), law.pmf(2), law.pmf(3)};
  d["mean"] = mean;
  d["variance"] = var;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pcd, m) {
  m.attr("__version__") = kVersion;

  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def(
      "p_r",
      [](double r, double tol) {
        const PrValue p = p_r(r, tol);
        return std::pair{p.value, p.error};
      },
      py::arg("r"), py::arg("tol") = 1e-6, "(value, error estimate) of the vertex-center limit P(gamma = 2).");

  m.def(
      "law",
      [](const std::string& r, const std::string& center) {
        const Factor f = parse_factor(r);
        return law_dict(f, asymptotic_law(f, MSpec::parse(center).resolve(f)));
      },
      py::arg("r"), py::arg("M") = "centroid");

  m.def(
      "gamma",
      [](const std::vector<std::pair<double, double>>& points, const std::string& r, const std::string& center,
         const std::string& triangle) {
        const Triangle2 tri = parse_triangle(triangle);
        const Factor f = parse_factor(r);
        std::vector<Point2> pts;
        for (auto [x, y] : points) pts.push_back(make_point(x, y));
        const PcdInstance inst(tri, ProximityParams::make(f, MSpec::parse(center).resolve(f, tri)), pts);
        const DominationResult res = domination_exact(inst);
        return std::pair{res.gamma, res.witness};
      },
      py::arg("points"), py::arg("r"), py::arg("M") = "centroid", py::arg("triangle") = "equilateral",
      "(gamma, witness indices) for points inside the triangle.");

  m.def(
      "tr_vertices",
      [](double r) -> std::optional<std::vector<std::pair<double, double>>> {
        const TrTriangle tr = tr_triangle(r, BasicTriangleParams::equilateral());
        if (tr.empty) return std::nullopt;
        std::vector<std::pair<double, double>> v;
        for (const Point2& t : tr.t) v.emplace_back(t.x, t.y);
        return v;
      },
      py::arg("r"));

  m.def(
      "simulate_json",
      [](const std::string& config_json, unsigned threads) {
        McConfig c = config_from_json(nlohmann::json::parse(config_json));
        c.threads = threads;
        McReport rep;
        {
          py::gil_scoped_release release;
          rep = run_mc(c);
        }
        return report_json(rep, false).dump();
      },
      py::arg("config_json"), py::arg("threads") = 0);
}
