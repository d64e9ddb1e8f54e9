// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kazhdan/certificate.hpp"
#include "kazhdan/graph.hpp"

namespace kazhdan {

/// (Delta_p f)(x) = sum_{y ~ x} (f(x) - f(y))^{[p]} w(x,y), a^{[p]} = |a|^{p-1} sign(a).
std::vector<double> apply_p_laplacian(const WeightedGraph& graph, std::span<const double> f,
                                      double p);

/// Minimizer of alpha -> sum_x |f(x) - alpha|^p deg(x) by bisection on the
/// derivative over [min f, max f].
double inner_alpha(std::span<const double> f, double p, std::span<const double> degrees);

struct PRayleigh {
  double value = 0.0;
  double numerator = 0.0;    // ordered double sum over x and y ~ x
  double denominator = 0.0;  // inf over alpha
  double alpha = 0.0;
};

/// p-Rayleigh quotient whose infimum over nonconstant f is lambda_1^(p).
/// The numerator counts every edge twice. DomainError for constant f.
PRayleigh p_rayleigh_quotient(const WeightedGraph& graph, std::span<const double> f, double p);

struct PLaplacianOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  double tol = 1e-10;          // relative change over `window` iterations
  std::size_t window = 50;
  std::size_t max_iterations = 100000;
};

struct RayleighResult {
  double p = 2.0;
  double value = 0.0;  // best quotient found; an upper bound on lambda_1^(p)
  std::vector<double> witness;
  double alpha_star = 0.0;
  int restarts = 0;
  int best_restart = 0;
  std::size_t iterations = 0;
  /// |Delta_p w - (value/2) deg (w - alpha*)^{[p]}| / |Delta_p w|, diagnostic only.
  double eigen_residual = 0.0;
};

/// Multi-restart normalized gradient descent on the p-Rayleigh quotient,
/// with the inner alpha re-solved at every iterate. Restart r always uses
/// the same start for a given seed, so more restarts can only lower the value.
RayleighResult lambda1_p(const WeightedGraph& graph, double p, const PLaplacianOptions& options = {});

/// Finite group from a full multiplication table.
class FiniteGroup {
 public:
  /// Validates shape, closure, Latin-square rows and columns, identity and
  /// associativity. Throws StructuralError.
  FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverses_.at(a); }
  std::size_t identity() const { return identity_; }

  /// Cyclic group Z/n with elements labelled "0".."n-1".
  static FiniteGroup cyclic(std::size_t n);

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverses_;
  std::size_t identity_ = 0;
};

struct CayleyGraph {
  WeightedGraph graph;
  std::map<std::string, std::size_t> images;
};

/// Cayley graph of a finite quotient: edge {g, h} iff g^-1 h is the image of
/// some generator s, weighted deg_w(s) / w(E) with the degree taken in the
/// link graph (the largest such value when several generators share an
/// image). Throws StructuralError when a generator maps to the identity,
/// when images do not respect the inversion, or when they do not generate.
CayleyGraph cayley_graph(const FiniteGroup& group, const std::map<std::string, std::size_t>& images,
                         const std::map<std::string, double>& link_degrees, double omega_E,
                         const std::map<std::string, std::string>& inverse = {});

/// Same, reading degrees and w(E) from the link graph and inversion from the spec.
CayleyGraph cayley_graph(const FiniteGroup& group, const std::map<std::string, std::size_t>& images,
                         const GeneratingSetSpec& spec, const WeightedGraph& link);

struct QuotientBoundReport {
  double p = 2.0;
  double pstar = 2.0;
  double condition = 0.0;  // 2^{-1/p} kappa_p
  bool claimed = false;
  std::string note;
  double bound_stated = 0.0;   // 2 (1 - 2^{-1/p} kappa_p), compared with lambda_1^(p)
  double bound_derived = 0.0;  // bound_stated^{p*}, compared with lambda_1^(p*)
  double lambda_p = 0.0;
  double lambda_pstar = 0.0;
  bool holds_stated = false;
  bool holds_derived = false;
  double margin_stated = 0.0;
  double margin_derived = 0.0;
};

/// Evaluates both readings of the quotient bound on a Cayley graph. No
/// bound is claimed unless kappa_p comes from an upper-certifying method
/// and 2^{-1/p} kappa_p < 1.
QuotientBoundReport check_quotient_bound(KappaBound link_kappa_p, const CayleyGraph& cayley, double p,
                                         const PLaplacianOptions& options = {});

}  // namespace kazhdan
