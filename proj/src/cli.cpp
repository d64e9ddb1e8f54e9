// SPDX-License-Identifier: Apache-2.0

#include "kazhdan/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kazhdan/certificate.hpp"
#include "kazhdan/errors.hpp"
#include "kazhdan/graph_io.hpp"
#include "kazhdan/p_laplacian.hpp"
#include "kazhdan/poincare.hpp"
#include "kazhdan/projective_plane.hpp"
#include "kazhdan/spectral.hpp"

namespace kazhdan::cli {

using Json = nlohmann::ordered_json;

namespace {

double round_significant(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

// Floats are rounded to 9 significant digits; non-finite values become strings.
Json to_structured(const Json& node) {
  if (node.is_number_float()) {
    const double x = node.get<double>();
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return round_significant(x, 9);
  }
  if (node.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : node.items()) out[k] = to_structured(v);
    return out;
  }
  if (node.is_array()) {
    Json out = Json::array();
    for (const auto& v : node) out.push_back(to_structured(v));
    return out;
  }
  return node;
}

std::string human_scalar(const Json& node) {
  if (node.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", node.get<double>());
    return buf;
  }
  if (node.is_string()) return node.get<std::string>();
  return node.dump();
}

void render_human(const Json& node, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : node.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_human(value, out, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        out << pad << "  -\n";
        render_human(item, out, indent + 4);
      }
    } else if (value.is_array()) {
      out << pad << key << ": [";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << human_scalar(value[i]);
      out << "]\n";
    } else {
      out << pad << key << ": " << human_scalar(value) << '\n';
    }
  }
}

void emit(const Json& report, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == OutputFormat::structured) {
    out << to_structured(report).dump(2) << '\n';
  } else {
    render_human(report, out, 0);
  }
}

Json config_json(const RunConfig& cfg) {
  Json c;
  c["command"] = cfg.command;
  c["inputs"] = cfg.inputs;
  c["p"] = cfg.p;
  c["q"] = cfg.q;
  c["q_max"] = cfg.q_max;
  c["method"] = cfg.method;
  c["kappa_method"] = cfg.kappa_method;
  c["restarts"] = cfg.restarts;
  c["seed"] = cfg.seed;
  c["tol"] = cfg.tol;
  c["mesh"] = cfg.mesh;
  c["weight"] = cfg.weight;
  c["link"] = cfg.link;
  c["emit_graph"] = cfg.emit_graph;
  c["output"] = cfg.output;
  c["check_bound"] = cfg.check_bound;
  c["allow_irregular"] = cfg.allow_irregular;
  c["witness"] = cfg.witness;
  c["format"] = cfg.format == OutputFormat::human ? "human" : "structured";
  return c;
}

Json vertex_function(const WeightedGraph& g, const std::vector<double>& f) {
  Json out = Json::object();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out[g.label(v)] = f[v];
  return out;
}

PrimePower parse_q(const std::string& text) {
  const auto caret = text.find('^');
  try {
    if (caret == std::string::npos) return factor_prime_power(std::stoull(text));
    return make_prime_power(std::stoull(text.substr(0, caret)),
                            static_cast<unsigned>(std::stoul(text.substr(caret + 1))));
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const DomainError*>(&e)) throw;
    throw DomainError("cannot read q from '" + text + "'");
  }
}

Json estimate_json(const WeightedGraph& g, const PoincareEstimate& est, bool with_witness) {
  Json r;
  r["p"] = est.p;
  r["lower"] = est.lower;
  r["upper"] = est.upper;
  r["method"] = std::string(to_string(est.method));
  if (est.upper_method) r["upper_method"] = std::string(to_string(*est.upper_method));
  if (est.method == Method::brute) r["resolution"] = est.resolution;
  if (est.method == Method::optimize) r["iterations"] = est.iterations;
  if (with_witness && est.witness) r["witness"] = vertex_function(g, *est.witness);
  return r;
}

PoincareEstimate estimate_kappa(const WeightedGraph& g, double p, Method method, const RunConfig& cfg) {
  switch (method) {
    case Method::eigen:
      if (p != 2.0) throw DomainError("method eigen needs p = 2");
      return kappa_p_eigen(g);
    case Method::optimize:
      return kappa_p_optimize(g, p, {cfg.restarts, cfg.seed, cfg.tol});
    case Method::brute:
      return kappa_p_brute(g, p, cfg.mesh);
    case Method::interp:
      return kappa_p_interp(g, p);
    case Method::path:
      break;
  }
  throw DomainError("method path is only available for p = infinity");
}

KappaBound bound_for_certificate(const PoincareEstimate& est) {
  if (certifies_upper(est.method)) return {est.upper, est.method};
  if (est.upper_method && std::isfinite(est.upper)) return {est.upper, *est.upper_method};
  return {est.lower, est.method};
}

Json certificate_json(const Certificate& c) {
  Json r;
  r["p"] = c.p;
  r["pstar"] = c.pstar;
  r["kappa_p"] = c.kappa_p.value;
  r["kappa_p_method"] = std::string(to_string(c.kappa_p.method));
  r["kappa_pstar"] = c.kappa_pstar.value;
  r["kappa_pstar_method"] = std::string(to_string(c.kappa_pstar.method));
  r["condition_p"] = c.condition_p;
  r["condition_pstar"] = c.condition_pstar;
  r["verdict"] = std::string(to_string(c.verdict));
  r["kazhdan_constant"] = kazhdan_constant(c.kappa_pstar.value, c.pstar);
  return r;
}

Json a2_json(const A2Report& a) {
  Json r;
  r["q"] = a.q.to_string();
  r["lambda1"] = a.lambda1;
  r["kappa2"] = a.kappa2;
  r["p_branch"] = a.p_branch;
  r["dual_branch"] = a.dual_branch;
  r["p_max"] = a.p_max;
  r["alpha_threshold"] = a.alpha;
  r["rep_norm_threshold"] = a.rep_norm;
  return r;
}

Json p_range_json(const PRangeReport& r) {
  Json j;
  j["p0"] = r.p0;
  j["pbar0"] = r.pbar0;
  j["pbar0_star"] = r.pbar0_star;
  j["p_max"] = r.p_max;
  j["certified"] = r.certified;
  j["closed_form"] = r.closed_form;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json stats_json(const GraphStats& s) {
  Json j;
  j["vertices"] = s.vertex_count;
  j["edges"] = s.edge_count;
  j["omega_E"] = s.total_weight;
  j["degree_min"] = s.degree_min;
  j["degree_max"] = s.degree_max;
  j["regular"] = s.regular;
  return j;
}

const std::string& single_input(const RunConfig& cfg) {
  if (cfg.inputs.empty()) throw ParseError("missing input file");
  return cfg.inputs.front();
}

Json cmd_a2(const RunConfig& cfg) {
  const PrimePower q = parse_q(cfg.q);
  Json r = a2_json(a2_report(q));
  if (!cfg.emit_graph.empty()) {
    if (q.value() > 1024.0) throw DomainError("--emit-graph supports q <= 1024");
    const WeightedGraph g = incidence_graph(static_cast<std::uint64_t>(q.value()));
    write_graph_document(cfg.emit_graph, GraphDocument::from_graph(g));
    r["graph"] = stats_json(graph_stats(g));
  }
  return r;
}

Json cmd_scan_a2(const RunConfig& cfg) {
  if (cfg.q_max < 2) throw DomainError("--q-max must be at least 2");
  Json rows = Json::array();
  std::uint64_t argmax = 0;
  double best = -1.0;
  for (std::uint64_t q : prime_powers_up_to(cfg.q_max)) {
    const double p = a2_p_max(q);
    Json row;
    row["q"] = q;
    row["p_max"] = p;
    row["alpha_threshold"] = circle_alpha_threshold(q);
    rows.push_back(std::move(row));
    if (p > best) {
      best = p;
      argmax = q;
    }
  }
  Json r;
  r["argmax_q"] = argmax;
  r["max_p"] = best;
  r["rows"] = std::move(rows);
  return r;
}

Json cmd_kappa(const RunConfig& cfg) {
  const WeightedGraph g = read_graph_document(single_input(cfg)).graph();
  const Method method = method_from_string(cfg.method);
  const PoincareEstimate est = estimate_kappa(g, cfg.p, method, cfg);
  Json r = estimate_json(g, est, cfg.witness);
  if (method == Method::eigen) {
    const SpectrumResult s = spectrum(g);
    r["lambda1"] = s.lambda1;
    r["kappa2"] = est.upper;
    if (cfg.witness) r["spectrum"] = s.eigenvalues;
  }
  return r;
}

Json cmd_certify(const RunConfig& cfg) {
  const WeightedGraph g = read_graph_document(single_input(cfg)).graph();
  if (!is_connected(g)) throw DomainError("link graph is disconnected");
  const double pstar = conjugate_exponent(cfg.p);
  const Method method = cfg.kappa_method.empty()
                            ? (cfg.p == 2.0 ? Method::eigen : Method::interp)
                            : method_from_string(cfg.kappa_method);
  const PoincareEstimate kp = estimate_kappa(g, cfg.p, method, cfg);
  const PoincareEstimate kps = pstar == cfg.p ? kp : estimate_kappa(g, pstar, method, cfg);
  const Certificate c = certify_fixed_point(bound_for_certificate(kp), bound_for_certificate(kps), cfg.p);
  Json r = certificate_json(c);
  r["obstruction"] = obstruction_check({kp.lower, kp.method}, {kps.lower, kps.method}, cfg.p);
  return r;
}

Json cmd_confdim(const RunConfig& cfg) {
  const WeightedGraph g = read_graph_document(single_input(cfg)).graph();
  const double k2 = kappa2(g);
  const PRangeReport rep = hyperbolic_p_bounds(g, k2, cfg.allow_irregular);
  Json r;
  r["graph"] = stats_json(graph_stats(g));
  r["kappa2"] = k2;
  r["range"] = p_range_json(rep);
  r["confdim_lower_bound"] = confdim_lower_bound(rep);
  r["rep_norm_threshold"] = ub_rep_threshold(k2);
  return r;
}

Json cmd_plaplacian(const RunConfig& cfg) {
  const WeightedGraph g = read_graph_document(single_input(cfg)).graph();
  PLaplacianOptions opt;
  opt.restarts = cfg.restarts;
  opt.seed = cfg.seed;
  const RayleighResult res = lambda1_p(g, cfg.p, opt);
  Json r;
  r["p"] = res.p;
  r["lambda1_p"] = res.value;
  r["alpha_star"] = res.alpha_star;
  r["best_restart"] = res.best_restart;
  r["iterations"] = res.iterations;
  r["eigen_residual"] = res.eigen_residual;
  if (cfg.witness) r["witness"] = vertex_function(g, res.witness);
  return r;
}

Json cmd_cayley(const RunConfig& cfg) {
  const GroupDocument gd = read_group_document(single_input(cfg));
  if (cfg.link.empty()) throw ParseError("cayley needs --link <graph-file>");
  const GraphDocument ld = read_graph_document(cfg.link);
  const WeightedGraph link = ld.graph();
  const FiniteGroup group(gd.elements, gd.table);
  std::map<std::string, double> degrees;
  for (VertexIndex v = 0; v < link.vertex_count(); ++v) degrees[link.label(v)] = link.degree(v);
  const CayleyGraph cay = cayley_graph(group, gd.images, degrees, link.total_weight(),
                                       ld.inverse.value_or(std::map<std::string, std::string>{}));
  Json r;
  r["graph"] = stats_json(graph_stats(cay.graph));
  if (!cfg.emit_graph.empty()) write_graph_document(cfg.emit_graph, GraphDocument::from_graph(cay.graph));
  if (cfg.check_bound) {
    const double pstar = conjugate_exponent(cfg.p);
    // Upper-certified kappa_p for the link: exact at p = 2, interpolation otherwise.
    const PoincareEstimate kp = cfg.p == 2.0 ? kappa_p_eigen(link) : kappa_p_interp(link, cfg.p);
    PLaplacianOptions opt;
    opt.restarts = cfg.restarts;
    opt.seed = cfg.seed;
    const QuotientBoundReport q = check_quotient_bound({kp.upper, kp.method}, cay, cfg.p, opt);
    Json b;
    b["p"] = q.p;
    b["pstar"] = pstar;
    b["link_kappa_p"] = kp.upper;
    b["link_kappa_method"] = std::string(to_string(kp.method));
    b["condition"] = q.condition;
    b["claimed"] = q.claimed;
    if (!q.note.empty()) b["note"] = q.note;
    if (q.claimed) {
      b["bound_stated"] = q.bound_stated;
      b["lambda1_p"] = q.lambda_p;
      b["holds_stated"] = q.holds_stated;
      b["margin_stated"] = q.margin_stated;
      b["bound_derived"] = q.bound_derived;
      b["lambda1_pstar"] = q.lambda_pstar;
      b["holds_derived"] = q.holds_derived;
      b["margin_derived"] = q.margin_derived;
    }
    r["quotient_bound"] = std::move(b);
  }
  return r;
}

Json cmd_link_graph(const RunConfig& cfg) {
  const GraphDocument doc = read_graph_document(single_input(cfg));
  const GeneratingSetSpec spec = doc.spec();
  const WeightedGraph link = build_link_graph(spec, cfg.weight);
  if (!cfg.output.empty()) write_graph_document(cfg.output, GraphDocument::from_spec(spec, link));
  Json r;
  r["graph"] = stats_json(graph_stats(link));
  r["connected"] = link.vertex_count() > 0 && is_connected(link);
  Json edges = Json::array();
  for (const Edge& e : link.edges()) {
    edges.push_back({{"u", link.label(e.u)}, {"v", link.label(e.v)}, {"w", e.weight}});
  }
  r["edges"] = std::move(edges);
  return r;
}

Json cmd_check_admissible(const RunConfig& cfg) {
  const GraphDocument doc = read_graph_document(single_input(cfg));
  const AdmissibilityReport rep = verify_admissible(doc.spec(), doc.graph());
  Json r;
  r["admissible"] = rep.admissible;
  Json v = Json::array();
  for (const auto& x : rep.violations) {
    v.push_back({{"condition", x.condition}, {"element", x.element}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  }
  r["violations"] = std::move(v);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "structured";
  CLI::App app{"Poincare-constant certificates for fixed-point properties on Banach spaces",
               "kazhdan"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "human or structured")
      ->check(CLI::IsMember({"human", "structured"}));

  auto add_graph_input = [&](CLI::App* sub, const char* name) {
    sub->add_option(name, cfg.inputs, "input file")->required()->expected(1);
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--restarts", cfg.restarts, "random restarts")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
  };

  auto* a2 = app.add_subcommand("a2", "p-range and thresholds for the A~2 group G_q");
  a2->add_option("--q", cfg.q, "prime power, decimal or k^n")->required();
  a2->add_option("--emit-graph", cfg.emit_graph, "write the incidence graph here");

  auto* scan = app.add_subcommand("scan-a2", "tabulate p_max over prime powers");
  scan->add_option("--q-max", cfg.q_max, "largest q")->required();

  auto* kappa = app.add_subcommand("kappa", "estimate the p-Poincare constant of a graph");
  add_graph_input(kappa, "graph");
  kappa->add_option("--p", cfg.p, "exponent");
  kappa->add_option("--method", cfg.method, "eigen|optimize|brute|interp")
      ->check(CLI::IsMember({"eigen", "optimize", "brute", "interp"}));
  add_search(kappa);
  kappa->add_option("--tol", cfg.tol, "relative improvement tolerance");
  kappa->add_option("--mesh", cfg.mesh, "brute-force mesh nodes per axis");
  kappa->add_flag("--witness", cfg.witness, "include witness function / spectrum");

  auto* certify = app.add_subcommand("certify", "evaluate the fixed-point criterion");
  add_graph_input(certify, "graph");
  certify->add_option("--p", cfg.p, "exponent");
  certify->add_option("--kappa-method", cfg.kappa_method, "eigen|interp|brute|optimize")
      ->check(CLI::IsMember({"eigen", "interp", "brute", "optimize"}));
  add_search(certify);
  certify->add_option("--tol", cfg.tol, "optimizer tolerance");
  certify->add_option("--mesh", cfg.mesh, "brute-force mesh nodes per axis");

  auto* confdim = app.add_subcommand("confdim", "conformal-dimension lower bound from a link graph");
  add_graph_input(confdim, "graph");
  confdim->add_flag("--allow-irregular", cfg.allow_irregular, "use the min/max-degree variant");

  auto* plap = app.add_subcommand("plaplacian", "variational p-spectral gap");
  add_graph_input(plap, "graph");
  plap->add_option("--p", cfg.p, "exponent");
  add_search(plap);
  plap->add_flag("--witness", cfg.witness, "include the minimizing function");

  auto* cayley = app.add_subcommand("cayley", "Cayley graph of a finite quotient");
  add_graph_input(cayley, "group");
  cayley->add_option("--link", cfg.link, "link graph file")->required();
  cayley->add_flag("--check-bound", cfg.check_bound, "evaluate the quotient spectral-gap bound");
  cayley->add_option("--p", cfg.p, "exponent");
  add_search(cayley);
  cayley->add_option("--emit-graph", cfg.emit_graph, "write the Cayley graph here");

  auto* link = app.add_subcommand("link-graph", "build the link graph of a generating set");
  add_graph_input(link, "spec");
  link->add_option("--weight", cfg.weight, "edge weight")->check(CLI::PositiveNumber);
  link->add_option("--output", cfg.output, "write the graph document here");

  auto* adm = app.add_subcommand("check-admissible", "verify admissibility of edge weights");
  add_graph_input(adm, "graph");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  cfg.format = format == "human" ? OutputFormat::human : OutputFormat::structured;
  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();

  try {
    Json result;
    if (sub == a2) result = cmd_a2(cfg);
    else if (sub == scan) result = cmd_scan_a2(cfg);
    else if (sub == kappa) result = cmd_kappa(cfg);
    else if (sub == certify) result = cmd_certify(cfg);
    else if (sub == confdim) result = cmd_confdim(cfg);
    else if (sub == plap) result = cmd_plaplacian(cfg);
    else if (sub == cayley) result = cmd_cayley(cfg);
    else if (sub == link) result = cmd_link_graph(cfg);
    else result = cmd_check_admissible(cfg);
    Json report;
    report["command"] = cfg.command;
    report["config"] = config_json(cfg);
    report["result"] = std::move(result);
    emit(report, cfg, out);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace kazhdan::cli
