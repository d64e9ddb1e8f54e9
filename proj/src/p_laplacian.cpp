// SPDX-License-Identifier: Apache-2.0

#include "kazhdan/p_laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>

#include "kazhdan/errors.hpp"

namespace kazhdan {

namespace {

double signed_pow(double a, double e) { return std::copysign(std::pow(std::abs(a), e), a); }

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("p must satisfy 1 < p < infinity");
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Shift to the inner minimizer and scale to unit Euclidean norm; the
// quotient is invariant under both.
void renormalize(std::vector<double>& f, double alpha) {
  for (double& x : f) x -= alpha;
  const double n = norm2(f);
  if (n > 0.0) {
    for (double& x : f) x /= n;
  }
}

std::vector<double> random_start(std::size_t n, std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart), 0x70u};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> f(n);
  for (double& x : f) x = normal(rng);
  return f;
}

struct Descent {
  double value;
  std::vector<double> f;
  double alpha;
  std::size_t iterations;
};

Descent descend(const WeightedGraph& g, double p, std::vector<double> f,
                const PLaplacianOptions& opt) {
  const std::size_t n = g.vertex_count();
  PRayleigh cur = p_rayleigh_quotient(g, f, p);
  renormalize(f, cur.alpha);
  cur = p_rayleigh_quotient(g, f, p);

  std::deque<double> history{cur.value};
  std::vector<double> grad(n), cand(n);
  double step = 1.0;
  std::size_t it = 0;
  for (; it < opt.max_iterations; ++it) {
    // d/df log R = 2p Delta_p f / N - p deg (f - alpha*)^{[p]} / D.
    const std::vector<double> lap = apply_p_laplacian(g, f, p);
    for (VertexIndex x = 0; x < n; ++x) {
      grad[x] = 2.0 * lap[x] / cur.numerator -
                g.degree(x) * signed_pow(f[x] - cur.alpha, p - 1.0) / cur.denominator;
    }
    const double gnorm = norm2(grad);
    if (!(gnorm > 1e-15)) break;

    bool accepted = false;
    PRayleigh next;
    const double log_value = std::log(cur.value);
    for (step = std::min(1.0, 2.0 * step); step > 1e-16; step *= 0.5) {
      for (VertexIndex x = 0; x < n; ++x) cand[x] = f[x] - step * grad[x] / gnorm;
      const double spread = *std::max_element(cand.begin(), cand.end()) -
                            *std::min_element(cand.begin(), cand.end());
      if (!(spread > 0.0)) continue;
      next = p_rayleigh_quotient(g, cand, p);
      if (std::log(next.value) <= log_value - 1e-4 * step * gnorm) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    f.swap(cand);
    renormalize(f, next.alpha);
    cur = p_rayleigh_quotient(g, f, p);

    history.push_back(cur.value);
    if (history.size() > opt.window + 1) history.pop_front();
    if (history.size() == opt.window + 1 &&
        (history.front() - history.back()) <= opt.tol * history.back()) {
      ++it;
      break;
    }
  }
  return {cur.value, std::move(f), cur.alpha, it};
}

}  // namespace

std::vector<double> apply_p_laplacian(const WeightedGraph& graph, std::span<const double> f,
                                      double p) {
  require_p(p);
  if (f.size() != graph.vertex_count()) throw DomainError("function size does not match graph");
  std::vector<double> out(graph.vertex_count(), 0.0);
  for (const Edge& e : graph.edges()) {
    const double d = signed_pow(f[e.u] - f[e.v], p - 1.0) * e.weight;
    out[e.u] += d;
    out[e.v] -= d;
  }
  return out;
}

double inner_alpha(std::span<const double> f, double p, std::span<const double> degrees) {
  require_p(p);
  if (f.empty() || f.size() != degrees.size()) throw DomainError("bad function/degree sizes");
  // slope(a) = sum deg (f - a)^{[p]} is decreasing; its root is the minimizer.
  auto slope = [&](double a) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += degrees[i] * signed_pow(f[i] - a, p - 1.0);
    return s;
  };
  double lo = *std::min_element(f.begin(), f.end());
  double hi = *std::max_element(f.begin(), f.end());
  if (lo == hi) return lo;
  // Bisect down to adjacent doubles. A relative slope tolerance would
  // depend on the shift of f and cost the denominator its affine invariance.
  double mid = 0.5 * (lo + hi);
  while (true) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double s = slope(mid);
    if (s == 0.0) break;
    (s > 0.0 ? lo : hi) = mid;
  }
  return mid;
}

PRayleigh p_rayleigh_quotient(const WeightedGraph& graph, std::span<const double> f, double p) {
  require_p(p);
  if (f.size() != graph.vertex_count()) throw DomainError("function size does not match graph");
  PRayleigh r;
  for (const Edge& e : graph.edges()) {
    r.numerator += 2.0 * std::pow(std::abs(f[e.u] - f[e.v]), p) * e.weight;
  }
  r.alpha = inner_alpha(f, p, graph.degrees());
  for (VertexIndex x = 0; x < graph.vertex_count(); ++x) {
    r.denominator += std::pow(std::abs(f[x] - r.alpha), p) * graph.degree(x);
  }
  if (!(r.denominator > 0.0)) throw DomainError("p-Rayleigh quotient of a constant function");
  r.value = r.numerator / r.denominator;
  return r;
}

RayleighResult lambda1_p(const WeightedGraph& graph, double p, const PLaplacianOptions& options) {
  require_p(p);
  if (graph.vertex_count() < 2) throw DomainError("graph needs at least two vertices");
  if (!is_connected(graph)) throw DomainError("graph is disconnected; the p-spectral gap is 0");
  if (options.restarts < 1) throw DomainError("restarts must be positive");

  RayleighResult best;
  best.p = p;
  best.value = std::numeric_limits<double>::infinity();
  best.restarts = options.restarts;
  for (int r = 0; r < options.restarts; ++r) {
    Descent d = descend(graph, p, random_start(graph.vertex_count(), options.seed, r), options);
    best.iterations += d.iterations;
    if (d.value < best.value) {
      best.value = d.value;
      best.witness = std::move(d.f);
      best.alpha_star = d.alpha;
      best.best_restart = r;
    }
  }
  const std::vector<double> lap = apply_p_laplacian(graph, best.witness, p);
  double res = 0.0, ref = 0.0;
  for (VertexIndex x = 0; x < graph.vertex_count(); ++x) {
    const double rhs = 0.5 * best.value * graph.degree(x) *
                       signed_pow(best.witness[x] - best.alpha_star, p - 1.0);
    res += (lap[x] - rhs) * (lap[x] - rhs);
    ref += lap[x] * lap[x];
  }
  best.eigen_residual = ref > 0.0 ? std::sqrt(res / ref) : 0.0;
  return best;
}

FiniteGroup::FiniteGroup(std::vector<std::string> elements,
                         std::vector<std::vector<std::size_t>> table)
    : elements_(std::move(elements)), table_(std::move(table)) {
  const std::size_t n = elements_.size();
  if (n == 0) throw StructuralError("group has no elements");
  if (table_.size() != n) throw StructuralError("multiplication table must be n x n");
  for (const auto& row : table_) {
    if (row.size() != n) throw StructuralError("multiplication table must be n x n");
    std::vector<bool> seen(n, false);
    for (std::size_t x : row) {
      if (x >= n) throw StructuralError("multiplication table entry out of range");
      if (seen[x]) throw StructuralError("multiplication table row repeats an element");
      seen[x] = true;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[table_[a][b]]) throw StructuralError("multiplication table column repeats an element");
      seen[table_[a][b]] = true;
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw StructuralError("multiplication table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw StructuralError("multiplication table is not associative");
        }
      }
    }
  }
  inverses_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_) inverses_[a] = b;
    }
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(names), std::move(table));
}

CayleyGraph cayley_graph(const FiniteGroup& group, const std::map<std::string, std::size_t>& images,
                         const std::map<std::string, double>& link_degrees, double omega_E,
                         const std::map<std::string, std::string>& inverse) {
  if (!(omega_E > 0.0)) throw DomainError("w(E) must be positive");
  if (images.empty()) throw StructuralError("no generator images given");
  for (const auto& [s, img] : images) {
    if (img >= group.order()) throw StructuralError("image of '" + s + "' is out of range");
    if (img == group.identity()) throw StructuralError("generator '" + s + "' maps to the identity");
    if (!link_degrees.count(s)) throw StructuralError("no link degree for generator '" + s + "'");
  }
  for (const auto& [s, t] : inverse) {
    auto is = images.find(s);
    auto it = images.find(t);
    if (is == images.end() || it == images.end()) continue;
    if (group.inverse(is->second) != it->second) {
      throw StructuralError("image of '" + t + "' is not the inverse of the image of '" + s + "'");
    }
  }

  const std::size_t n = group.order();
  std::map<std::pair<std::size_t, std::size_t>, double> weights;
  for (std::size_t g = 0; g < n; ++g) {
    for (const auto& [s, img] : images) {
      const std::size_t h = group.multiply(g, img);
      double& w = weights[std::minmax(g, h)];
      w = std::max(w, link_degrees.at(s) / omega_E);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(weights.size());
  for (const auto& [key, w] : weights) edges.push_back({key.first, key.second, w});
  CayleyGraph out{WeightedGraph(group.elements(), std::move(edges)), images};
  if (!is_connected(out.graph)) {
    throw StructuralError("generator images do not generate the group");
  }
  return out;
}

CayleyGraph cayley_graph(const FiniteGroup& group, const std::map<std::string, std::size_t>& images,
                         const GeneratingSetSpec& spec, const WeightedGraph& link) {
  std::map<std::string, double> degrees;
  for (VertexIndex v = 0; v < link.vertex_count(); ++v) degrees[link.label(v)] = link.degree(v);
  return cayley_graph(group, images, degrees, link.total_weight(), spec.inverse_map());
}

QuotientBoundReport check_quotient_bound(KappaBound link_kappa_p, const CayleyGraph& cayley, double p,
                                         const PLaplacianOptions& options) {
  require_p(p);
  QuotientBoundReport r;
  r.p = p;
  r.pstar = conjugate_exponent(p);
  r.condition = std::pow(2.0, -1.0 / p) * link_kappa_p.value;
  if (!certifies_upper(link_kappa_p.method)) {
    r.note = "no bound claimed: kappa_p is not a certified upper bound";
    return r;
  }
  if (!(r.condition < 1.0)) {
    r.note = "no bound claimed: 2^{-1/p} kappa_p >= 1";
    return r;
  }
  r.claimed = true;
  r.bound_stated = 2.0 * (1.0 - r.condition);
  r.bound_derived = std::pow(r.bound_stated, r.pstar);
  r.lambda_p = lambda1_p(cayley.graph, p, options).value;
  r.lambda_pstar = r.pstar == p ? r.lambda_p : lambda1_p(cayley.graph, r.pstar, options).value;
  r.margin_stated = r.lambda_p - r.bound_stated;
  r.margin_derived = r.lambda_pstar - r.bound_derived;
  r.holds_stated = r.margin_stated >= 0.0;
  r.holds_derived = r.margin_derived >= 0.0;
  return r;
}

}  // namespace kazhdan
