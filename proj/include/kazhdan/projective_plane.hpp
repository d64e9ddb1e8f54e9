// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "kazhdan/finite_field.hpp"
#include "kazhdan/graph.hpp"

namespace kazhdan {

/// The Desarguesian plane P^2(F_q). Points and lines are both stored as
/// canonical vectors of F_q^3 (first nonzero coordinate equal to one); a
/// point lies on a line when their dot product vanishes.
class ProjectivePlane {
 public:
  using Vector3 = std::array<FiniteField::Element, 3>;

  explicit ProjectivePlane(std::uint64_t q);

  const FiniteField& field() const { return field_; }
  std::uint64_t order() const { return field_.order(); }
  const std::vector<Vector3>& points() const { return points_; }
  const std::vector<Vector3>& lines() const { return lines_; }

  bool incident(std::size_t point, std::size_t line) const;
  /// Indices of the points on a line, ascending.
  std::vector<std::size_t> points_on(std::size_t line) const;

  /// Bipartite incidence graph with unit weights. Points are labelled
  /// P0..Pn-1 and lines L0..Ln-1; point vertices come first.
  WeightedGraph incidence_graph() const;

 private:
  FiniteField field_;
  std::vector<Vector3> points_;
  std::vector<Vector3> lines_;
};

/// Incidence graph of P^2(F_q). Throws DomainError when q is not a prime power.
WeightedGraph incidence_graph(std::uint64_t q);

}  // namespace kazhdan
