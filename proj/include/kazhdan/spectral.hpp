// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "kazhdan/graph.hpp"

namespace kazhdan {

/// Eigenvalues below this are treated as zero.
inline constexpr double kZeroEigenvalue = 1e-9;

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  double lambda1 = 0.0;             // smallest eigenvalue above kZeroEigenvalue
  std::size_t multiplicity_of_zero = 0;
};

/// L = I - D^{-1/2} W D^{-1/2}.
///
/// Its Rayleigh quotient is sum over unordered edges of |f(u) - f(v)|^2 w(u,v)
/// divided by sum_v |f(v) - Qf|^2 deg(v), which makes kappa2 = lambda1^{-1/2}
/// the 2-Poincare constant with the unordered-edge gradient. Throws
/// DomainError on an isolated vertex.
Eigen::MatrixXd normalized_laplacian(const WeightedGraph& graph);

/// Full symmetric eigendecomposition of the normalized Laplacian.
SpectrumResult spectrum(const WeightedGraph& graph);

/// Smallest positive eigenvalue; DomainError when the graph is disconnected.
double lambda1(const WeightedGraph& graph);

/// kappa_2 = lambda1^{-1/2}.
double kappa2(const WeightedGraph& graph);

/// Closed form (1 - sqrt(q)/(q+1))^{-1/2} for the incidence graph of
/// P^2(F_q). Throws DomainError when q is not a prime power.
double feit_higman_kappa2(std::uint64_t q);

/// 1 - sqrt(q)/(q+1), the spectral gap of that incidence graph.
double feit_higman_lambda1(std::uint64_t q);

}  // namespace kazhdan
