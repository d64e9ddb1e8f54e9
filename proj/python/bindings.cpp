// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kazhdan/certificate.hpp"
#include "kazhdan/errors.hpp"
#include "kazhdan/graph_io.hpp"
#include "kazhdan/p_laplacian.hpp"
#include "kazhdan/poincare.hpp"
#include "kazhdan/projective_plane.hpp"
#include "kazhdan/spectral.hpp"

namespace py = pybind11;
using namespace kazhdan;

namespace {

py::dict estimate_dict(const PoincareEstimate& e) {
  py::dict d;
  d["p"] = e.p;
  d["lower"] = e.lower;
  d["upper"] = e.upper;
  d["method"] = std::string(to_string(e.method));
  d["resolution"] = e.resolution;
  if (e.witness) d["witness"] = *e.witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Poincare constants, spectral gaps and fixed-point certificates on link graphs";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_IOError);

  py::class_<WeightedGraph>(m, "WeightedGraph")
      .def(py::init([](std::vector<std::string> vertices,
                       const std::vector<std::tuple<std::string, std::string, double>>& edges) {
             return WeightedGraph::from_labels(std::move(vertices), edges);
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_static("from_json", [](const std::string& text) { return parse_graph_document(text).graph(); })
      .def("to_json", [](const WeightedGraph& g) { return dump_graph_document(GraphDocument::from_graph(g)); })
      .def_property_readonly("vertices", &WeightedGraph::labels)
      .def_property_readonly("vertex_count", &WeightedGraph::vertex_count)
      .def_property_readonly("edge_count", &WeightedGraph::edge_count)
      .def_property_readonly("total_weight", &WeightedGraph::total_weight)
      .def("degree", [](const WeightedGraph& g, const std::string& v) { return g.degree(g.index_of(v)); })
      .def("is_connected", [](const WeightedGraph& g) { return is_connected(g); });

  m.def("incidence_graph", py::overload_cast<std::uint64_t>(&incidence_graph), py::arg("q"));
  m.def("lambda1", &lambda1, py::arg("graph"));
  m.def("kappa2", &kappa2, py::arg("graph"));
  m.def("spectrum", [](const WeightedGraph& g) { return spectrum(g).eigenvalues; }, py::arg("graph"));
  m.def("feit_higman_kappa2", &feit_higman_kappa2, py::arg("q"));

  m.def("poincare_ratio",
        [](const WeightedGraph& g, const std::vector<double>& f, double p) { return poincare_ratio(g, f, p); },
        py::arg("graph"), py::arg("f"), py::arg("p"));
  m.def(
      "kappa_p_optimize",
      [](const WeightedGraph& g, double p, int restarts, std::uint64_t seed, double tol) {
        return estimate_dict(kappa_p_optimize(g, p, {restarts, seed, tol}));
      },
      py::arg("graph"), py::arg("p"), py::arg("restarts") = 32, py::arg("seed") = 0,
      py::arg("tol") = 1e-10);
  m.def(
      "kappa_p_brute",
      [](const WeightedGraph& g, double p, int mesh) { return estimate_dict(kappa_p_brute(g, p, mesh)); },
      py::arg("graph"), py::arg("p"), py::arg("mesh") = 41);
  m.def("kappa_p_interp_upper", &kappa_p_interp_upper, py::arg("degree"), py::arg("omega_E"),
        py::arg("kappa2"), py::arg("p"));

  m.def(
      "certify_fixed_point",
      [](double kappa_p, const std::string& method_p, double kappa_pstar, const std::string& method_pstar,
         double p) {
        const Certificate c = certify_fixed_point({kappa_p, method_from_string(method_p)},
                                                  {kappa_pstar, method_from_string(method_pstar)}, p);
        py::dict d;
        d["p"] = c.p;
        d["pstar"] = c.pstar;
        d["condition_p"] = c.condition_p;
        d["condition_pstar"] = c.condition_pstar;
        d["verdict"] = std::string(to_string(c.verdict));
        return d;
      },
      py::arg("kappa_p"), py::arg("method_p"), py::arg("kappa_pstar"), py::arg("method_pstar"),
      py::arg("p"));
  m.def("kazhdan_constant", &kazhdan_constant, py::arg("kappa_pstar"), py::arg("pstar"));

  m.def("a2_p_max", py::overload_cast<std::uint64_t>(&a2_p_max), py::arg("q"));
  m.def(
      "a2_p_max_prime_power",
      [](std::uint64_t prime, unsigned exponent) { return a2_p_max(make_prime_power(prime, exponent)); },
      py::arg("prime"), py::arg("exponent"));
  m.def(
      "a2_report",
      [](std::uint64_t q) {
        const A2Report r = a2_report(q);
        py::dict d;
        d["q"] = r.q.to_string();
        d["lambda1"] = r.lambda1;
        d["kappa2"] = r.kappa2;
        d["p_branch"] = r.p_branch;
        d["dual_branch"] = r.dual_branch;
        d["p_max"] = r.p_max;
        d["alpha_threshold"] = r.alpha;
        d["rep_norm_threshold"] = r.rep_norm;
        return d;
      },
      py::arg("q"));
  m.def(
      "hyperbolic_p_bounds",
      [](double degree, std::size_t num_edges, std::size_t num_vertices, double k2) {
        const PRangeReport r = hyperbolic_p_bounds(degree, num_edges, num_vertices, k2);
        py::dict d;
        d["p0"] = r.p0;
        d["pbar0"] = r.pbar0;
        d["pbar0_star"] = r.pbar0_star;
        d["p_max"] = r.p_max;
        d["certified"] = r.certified;
        return d;
      },
      py::arg("degree"), py::arg("num_edges"), py::arg("num_vertices"), py::arg("kappa2"));
  m.def("circle_alpha_threshold", py::overload_cast<std::uint64_t>(&circle_alpha_threshold), py::arg("q"));
  m.def("ub_rep_threshold", &ub_rep_threshold, py::arg("kappa2"));

  m.def(
      "lambda1_p",
      [](const WeightedGraph& g, double p, int restarts, std::uint64_t seed) {
        PLaplacianOptions opt;
        opt.restarts = restarts;
        opt.seed = seed;
        const RayleighResult r = lambda1_p(g, p, opt);
        py::dict d;
        d["p"] = r.p;
        d["value"] = r.value;
        d["alpha_star"] = r.alpha_star;
        d["witness"] = r.witness;
        return d;
      },
      py::arg("graph"), py::arg("p"), py::arg("restarts") = 32, py::arg("seed") = 0);
  m.def(
      "apply_p_laplacian",
      [](const WeightedGraph& g, const std::vector<double>& f, double p) { return apply_p_laplacian(g, f, p); },
      py::arg("graph"), py::arg("f"), py::arg("p"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
