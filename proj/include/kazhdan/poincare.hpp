// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kazhdan/graph.hpp"

namespace kazhdan {

/// How a kappa value was obtained. Determines which side of the estimate
/// may be trusted:
///   eigen  - exact p = 2 value, certifies both sides
///   brute  - mesh search with a covering-radius bound, both sides
///   interp - norm-interpolation bound, upper only
///   optimize, path - attained test functions, lower only
enum class Method { eigen, optimize, brute, interp, path };

std::string_view to_string(Method m);
/// Throws DomainError on an unknown name.
Method method_from_string(std::string_view name);

bool certifies_upper(Method m);
bool certifies_lower(Method m);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PoincareEstimate {
  double p = 2.0;
  double lower = 0.0;
  double upper = kInfinity;
  Method method = Method::optimize;
  /// Source of `upper` when it differs from `method` (eigen for p = 2 runs
  /// of the optimizer).
  std::optional<Method> upper_method;
  std::optional<std::vector<double>> witness;
  /// Brute force only: relative gap between certified upper and lower.
  double resolution = 0.0;
  std::size_t iterations = 0;
};

/// Weighted mean Qf = (1/w(E)) sum_v f(v) deg(v).
double weighted_mean(const WeightedGraph& graph, std::span<const double> f);

/// [sum_v |f(v) - Qf|^p deg(v)]^{1/p} / [sum_{edges} |f(u) - f(v)|^p w(u,v)]^{1/p}.
/// The denominator runs over unordered edges. Throws DomainError for
/// p <= 1, a size mismatch, or a vanishing gradient.
double poincare_ratio(const WeightedGraph& graph, std::span<const double> f, double p);

struct OptimizeOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::size_t max_iterations = 100000;
};

/// Lower bound on kappa_p by projected gradient ascent of the ratio on the
/// unit sphere of deg-mean-zero functions, from `restarts` seeded starts.
/// The best ratio (ties to the lowest restart index) and its witness are
/// returned. At p = 2 the eigen value is attached as the upper bound.
PoincareEstimate kappa_p_optimize(const WeightedGraph& graph, double p,
                                  const OptimizeOptions& options = {});

/// Two-sided bracket for graphs with at most five vertices: every point of
/// a cube-surface mesh with `mesh` nodes per axis is evaluated, the best one
/// is refined by pattern search, and the mesh covering radius turns the
/// mesh maximum into a certified upper bound.
PoincareEstimate kappa_p_brute(const WeightedGraph& graph, double p, int mesh = 41);

/// Upper bound deg^{1/p-1/2} kappa2 (w(E)/2)^{1/2-1/p} on a regular graph,
/// p >= 2. Throws DomainError for p < 2.
double kappa_p_interp_upper(double degree, double omega_E, double kappa2, double p);

/// Dual-side bound w(E)^{1/p-1/2} kappa2 on a regular graph, 1 < p <= 2.
/// Throws DomainError for p outside (1, 2].
double kappa_p_interp_dual_upper(double omega_E, double kappa2, double p);

/// Interpolation bound fed from the graph and its eigen kappa2; uses the
/// dual-side form below p = 2. Throws DomainError on irregular graphs.
PoincareEstimate kappa_p_interp(const WeightedGraph& graph, double p);

/// Exact p = 2 estimate from the normalized Laplacian.
PoincareEstimate kappa_p_eigen(const WeightedGraph& graph);

struct InfinityBound {
  double value = 0.0;       // max_s d_S(s, s^-1)
  std::string generator;    // maximizing s (first in declaration order)
  std::vector<double> witness;
  double witness_sup_gradient = 0.0;
};

/// p = infinity lower bound from path distances between s and s^-1. The
/// witness is +1 at s, -1 at s^-1, decaying linearly to 0 at half the
/// distance. Throws DomainError if the pair is not connected.
InfinityBound kappa_inf_lower(const GeneratingSetSpec& spec, const WeightedGraph& graph);

}  // namespace kazhdan
