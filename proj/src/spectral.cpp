// SPDX-License-Identifier: Apache-2.0

#include "kazhdan/spectral.hpp"

#include <cmath>

#include "kazhdan/errors.hpp"
#include "kazhdan/finite_field.hpp"

namespace kazhdan {

Eigen::MatrixXd normalized_laplacian(const WeightedGraph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.vertex_count());
  Eigen::VectorXd inv_sqrt_deg(n);
  for (Eigen::Index v = 0; v < n; ++v) {
    const double d = graph.degree(static_cast<VertexIndex>(v));
    if (!(d > 0.0)) {
      throw DomainError("vertex '" + graph.label(static_cast<VertexIndex>(v)) + "' is isolated");
    }
    inv_sqrt_deg(v) = 1.0 / std::sqrt(d);
  }
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n);
  for (const Edge& e : graph.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    const double entry = e.weight * inv_sqrt_deg(u) * inv_sqrt_deg(v);
    lap(u, v) -= entry;
    lap(v, u) -= entry;
  }
  return lap;
}

SpectrumResult spectrum(const WeightedGraph& graph) {
  const Eigen::MatrixXd lap = normalized_laplacian(graph);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) throw DomainError("eigendecomposition failed");

  SpectrumResult out;
  const Eigen::VectorXd& values = solver.eigenvalues();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  bool found = false;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) <= kZeroEigenvalue) {
      ++out.multiplicity_of_zero;
    } else if (!found) {
      found = true;
      out.lambda1 = values(i);
      const Eigen::VectorXd vec = solver.eigenvectors().col(i);
      const double residual = (lap * vec - values(i) * vec).norm();
      if (residual > 1e-9 * vec.norm()) {
        throw DomainError("eigenpair residual " + std::to_string(residual) + " exceeds 1e-9");
      }
    }
  }
  return out;
}

double lambda1(const WeightedGraph& graph) {
  if (!is_connected(graph)) throw DomainError("graph is disconnected; lambda1 would be 0");
  return spectrum(graph).lambda1;
}

double kappa2(const WeightedGraph& graph) { return 1.0 / std::sqrt(lambda1(graph)); }

double feit_higman_lambda1(std::uint64_t q) {
  factor_prime_power(q);
  const double qd = static_cast<double>(q);
  return 1.0 - std::sqrt(qd) / (qd + 1.0);
}

double feit_higman_kappa2(std::uint64_t q) { return 1.0 / std::sqrt(feit_higman_lambda1(q)); }

}  // namespace kazhdan
