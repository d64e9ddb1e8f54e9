// SPDX-License-Identifier: Apache-2.0

#include "kazhdan/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "kazhdan/errors.hpp"
#include "kazhdan/spectral.hpp"

namespace kazhdan {

namespace {

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("p must satisfy 1 < p < infinity");
}

double signed_pow(double a, double e) { return std::copysign(std::pow(std::abs(a), e), a); }

// sum_v |f(v) - Qf|^p deg(v), with Qf supplied.
double deviation_mass(const WeightedGraph& g, std::span<const double> f, double mean, double p) {
  double s = 0.0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    s += std::pow(std::abs(f[v] - mean), p) * g.degree(v);
  }
  return s;
}

// sum over unordered edges of |f(u) - f(v)|^p w(u,v).
double gradient_mass(const WeightedGraph& g, std::span<const double> f, double p) {
  double s = 0.0;
  for (const Edge& e : g.edges()) s += std::pow(std::abs(f[e.u] - f[e.v]), p) * e.weight;
  return s;
}

// Euclidean projection onto {v : sum v deg = 0}.
void project_mean_zero(const WeightedGraph& g, std::vector<double>& v) {
  double dot = 0.0, norm2 = 0.0;
  for (VertexIndex i = 0; i < v.size(); ++i) {
    dot += v[i] * g.degree(i);
    norm2 += g.degree(i) * g.degree(i);
  }
  for (VertexIndex i = 0; i < v.size(); ++i) v[i] -= dot / norm2 * g.degree(i);
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void normalize(std::vector<double>& v) {
  const double n = norm2(v);
  for (double& x : v) x /= n;
}

// log of the ratio for a mean-zero f; -inf when the gradient vanishes.
double log_ratio(const WeightedGraph& g, std::span<const double> f, double p) {
  const double num = deviation_mass(g, f, weighted_mean(g, f), p);
  const double den = gradient_mass(g, f, p);
  if (!(den > 0.0)) return -kInfinity;
  return (std::log(num) - std::log(den)) / p;
}

struct RunResult {
  double value;
  std::vector<double> f;
  std::size_t iterations;
};

RunResult ascend(const WeightedGraph& g, double p, std::vector<double> f,
                 const OptimizeOptions& opt) {
  const std::size_t n = g.vertex_count();
  project_mean_zero(g, f);
  normalize(f);
  double value = log_ratio(g, f, p);
  std::size_t it = 0;
  std::vector<double> grad(n), cand(n);
  for (; it < opt.max_iterations; ++it) {
    const double mean = weighted_mean(g, f);
    const double num = deviation_mass(g, f, mean, p);
    const double den = gradient_mass(g, f, p);
    for (VertexIndex v = 0; v < n; ++v) grad[v] = signed_pow(f[v] - mean, p - 1) * g.degree(v) / num;
    for (const Edge& e : g.edges()) {
      const double d = signed_pow(f[e.u] - f[e.v], p - 1) * e.weight / den;
      grad[e.u] -= d;
      grad[e.v] += d;
    }
    project_mean_zero(g, grad);
    double radial = 0.0;
    for (VertexIndex v = 0; v < n; ++v) radial += grad[v] * f[v];
    for (VertexIndex v = 0; v < n; ++v) grad[v] -= radial * f[v];
    const double gnorm = norm2(grad);
    if (!(gnorm > 1e-15)) break;

    bool accepted = false;
    double cand_value = value;
    for (double step = 1.0; step > 1e-16; step *= 0.5) {
      for (VertexIndex v = 0; v < n; ++v) cand[v] = f[v] + step * grad[v] / gnorm;
      project_mean_zero(g, cand);
      normalize(cand);
      cand_value = log_ratio(g, cand, p);
      if (cand_value >= value + 1e-4 * step * gnorm) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    const double improvement = std::expm1(cand_value - value);
    f.swap(cand);
    value = cand_value;
    if (improvement < opt.tol) {
      ++it;
      break;
    }
  }
  return {std::exp(value), std::move(f), it};
}

std::vector<double> random_start(const WeightedGraph& g, std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> f(g.vertex_count());
  for (double& x : f) x = normal(rng);
  project_mean_zero(g, f);
  return f;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::eigen: return "eigen";
    case Method::optimize: return "optimize";
    case Method::brute: return "brute";
    case Method::interp: return "interp";
    case Method::path: return "path";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  for (Method m : {Method::eigen, Method::optimize, Method::brute, Method::interp, Method::path}) {
    if (to_string(m) == name) return m;
  }
  throw DomainError("unknown method '" + std::string(name) + "'");
}

bool certifies_upper(Method m) {
  return m == Method::eigen || m == Method::brute || m == Method::interp;
}

bool certifies_lower(Method m) {
  return m == Method::eigen || m == Method::brute || m == Method::optimize || m == Method::path;
}

double weighted_mean(const WeightedGraph& graph, std::span<const double> f) {
  double s = 0.0;
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) s += f[v] * graph.degree(v);
  return s / graph.total_weight();
}

double poincare_ratio(const WeightedGraph& graph, std::span<const double> f, double p) {
  require_p(p);
  if (f.size() != graph.vertex_count()) throw DomainError("function size does not match graph");
  const double den = gradient_mass(graph, f, p);
  if (!(den > 0.0)) throw DomainError("test function has zero gradient (constant on components)");
  const double num = deviation_mass(graph, f, weighted_mean(graph, f), p);
  return std::pow(num, 1.0 / p) / std::pow(den, 1.0 / p);
}

PoincareEstimate kappa_p_optimize(const WeightedGraph& graph, double p,
                                  const OptimizeOptions& options) {
  require_p(p);
  if (!is_connected(graph)) throw DomainError("graph is disconnected");
  if (graph.vertex_count() < 2) throw DomainError("graph needs at least two vertices");
  if (options.restarts < 1) throw DomainError("restarts must be positive");

  std::vector<RunResult> runs;
  runs.reserve(static_cast<std::size_t>(options.restarts));
  for (int r = 0; r < options.restarts; ++r) {
    runs.push_back(ascend(graph, p, random_start(graph, options.seed, r), options));
  }
  std::size_t best = 0;
  std::size_t iterations = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    iterations += runs[r].iterations;
    if (runs[r].value > runs[best].value) best = r;
  }

  PoincareEstimate est;
  est.p = p;
  est.method = Method::optimize;
  est.lower = runs[best].value;
  est.witness = std::move(runs[best].f);
  est.iterations = iterations;
  if (p == 2.0) {
    est.upper = kappa2(graph);
    est.upper_method = Method::eigen;
  }
  return est;
}

PoincareEstimate kappa_p_brute(const WeightedGraph& graph, double p, int mesh) {
  require_p(p);
  const std::size_t n = graph.vertex_count();
  if (n > 5) throw DomainError("brute force is limited to graphs with at most 5 vertices");
  if (n < 2) throw DomainError("graph needs at least two vertices");
  if (!is_connected(graph)) throw DomainError("graph is disconnected");
  if (mesh < 2) throw DomainError("mesh must have at least 2 nodes per axis");

  // Orthonormal basis of the deg-mean-zero hyperplane.
  const auto dim = static_cast<Eigen::Index>(n - 1);
  Eigen::VectorXd deg(static_cast<Eigen::Index>(n));
  for (VertexIndex v = 0; v < n; ++v) deg(static_cast<Eigen::Index>(v)) = graph.degree(v);
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(deg).householderQ();
  const Eigen::MatrixXd basis = q.rightCols(dim);

  auto embed = [&](const Eigen::VectorXd& coords) {
    const Eigen::VectorXd x = basis * (coords / coords.norm());
    return std::vector<double>(x.data(), x.data() + x.size());
  };

  // Seminorm bounds on unit vectors of the hyperplane:
  //   numerator   <= w(E)^{1/p}
  //   denominator <= sqrt(2) (w(E)/2)^{1/p}
  const double omega_E = graph.total_weight();
  const double num_lip = std::pow(omega_E, 1.0 / p);
  const double den_lip = std::sqrt(2.0) * std::pow(omega_E / 2.0, 1.0 / p);
  const double spacing = 2.0 / (mesh - 1);
  const double cover = 0.5 * spacing * std::sqrt(static_cast<double>(dim - 1));

  double best_value = -1.0;
  double certified_upper = 0.0;
  Eigen::VectorXd best_coords;
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  Eigen::VectorXd coords(dim);
  for (bool more = true; more;) {
    bool on_surface = false;
    for (Eigen::Index k = 0; k < dim; ++k) {
      const int i = idx[static_cast<std::size_t>(k)];
      coords(k) = -1.0 + spacing * i;
      if (i == 0 || i == mesh - 1) on_surface = true;
    }
    if (on_surface) {
      const std::vector<double> f = embed(coords);
      const double num = std::pow(deviation_mass(graph, f, weighted_mean(graph, f), p), 1.0 / p);
      const double den = std::pow(gradient_mass(graph, f, p), 1.0 / p);
      const double value = num / den;
      if (value > best_value) {
        best_value = value;
        best_coords = coords;
      }
      const double slack_den = den - den_lip * cover;
      certified_upper = slack_den > 0.0
                            ? std::max(certified_upper, (num + num_lip * cover) / slack_den)
                            : kInfinity;
    }
    more = false;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (++idx[k] < mesh) {
        more = true;
        break;
      }
      idx[k] = 0;
    }
  }

  // Pattern search on the sphere from the best mesh node.
  Eigen::VectorXd x = best_coords / best_coords.norm();
  double value = best_value;
  for (double step = spacing; step > 1e-13;) {
    bool improved = false;
    for (Eigen::Index k = 0; k < dim; ++k) {
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd trial = x;
        trial(k) += sign * step;
        const std::vector<double> f = embed(trial);
        const double v = poincare_ratio(graph, f, p);
        if (v > value) {
          value = v;
          x = trial / trial.norm();
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }

  PoincareEstimate est;
  est.p = p;
  est.method = Method::brute;
  est.lower = value;
  est.upper = std::max(certified_upper, value);
  est.resolution = est.upper / est.lower - 1.0;
  est.witness = embed(x);
  return est;
}

double kappa_p_interp_upper(double degree, double omega_E, double kappa2, double p) {
  if (!(p >= 2.0)) throw DomainError("interpolation bound needs p >= 2");
  return std::pow(degree, 1.0 / p - 0.5) * kappa2 * std::pow(omega_E / 2.0, 0.5 - 1.0 / p);
}

double kappa_p_interp_dual_upper(double omega_E, double kappa2, double p) {
  if (!(p > 1.0) || p > 2.0) throw DomainError("dual interpolation bound needs 1 < p <= 2");
  return std::pow(omega_E, 1.0 / p - 0.5) * kappa2;
}

PoincareEstimate kappa_p_interp(const WeightedGraph& graph, double p) {
  require_p(p);
  const GraphStats stats = graph_stats(graph);
  if (!stats.regular) throw DomainError("interpolation bound needs a regular graph");
  const double k2 = kappa2(graph);
  PoincareEstimate est;
  est.p = p;
  est.method = Method::interp;
  est.upper = p >= 2.0 ? kappa_p_interp_upper(stats.degree_max, stats.total_weight, k2, p)
                       : kappa_p_interp_dual_upper(stats.total_weight, k2, p);
  return est;
}

PoincareEstimate kappa_p_eigen(const WeightedGraph& graph) {
  PoincareEstimate est;
  est.p = 2.0;
  est.method = Method::eigen;
  est.lower = est.upper = kappa2(graph);
  return est;
}

InfinityBound kappa_inf_lower(const GeneratingSetSpec& spec, const WeightedGraph& graph) {
  InfinityBound out;
  std::size_t best = 0;
  bool have = false;
  std::vector<std::optional<std::size_t>> from_s, from_inv;
  for (const auto& s : spec.elements()) {
    const VertexIndex vs = graph.index_of(s);
    const VertexIndex vi = graph.index_of(spec.inverse(s));
    auto ds = bfs_distances(graph, vs);
    if (!ds[vi]) throw DomainError("'" + s + "' and its inverse lie in different components");
    if (!have || *ds[vi] > best) {
      have = true;
      best = *ds[vi];
      out.generator = s;
      from_s = std::move(ds);
      from_inv = bfs_distances(graph, vi);
    }
  }
  if (!have) throw DomainError("generating set is empty");
  out.value = static_cast<double>(best);
  out.witness.assign(graph.vertex_count(), 0.0);
  if (best > 0) {
    const double half = static_cast<double>(best) / 2.0;
    for (VertexIndex t = 0; t < graph.vertex_count(); ++t) {
      double f = 0.0;
      if (from_s[t]) f += std::max(0.0, 1.0 - static_cast<double>(*from_s[t]) / half);
      if (from_inv[t]) f -= std::max(0.0, 1.0 - static_cast<double>(*from_inv[t]) / half);
      out.witness[t] = f;
    }
    for (const Edge& e : graph.edges()) {
      out.witness_sup_gradient =
          std::max(out.witness_sup_gradient, std::abs(out.witness[e.u] - out.witness[e.v]));
    }
  }
  return out;
}

}  // namespace kazhdan
