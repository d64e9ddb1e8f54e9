// SPDX-License-Identifier: Apache-2.0

#include "kazhdan/projective_plane.hpp"

#include <string>

namespace kazhdan {

namespace {

std::vector<ProjectivePlane::Vector3> canonical_vectors(std::uint32_t q) {
  std::vector<ProjectivePlane::Vector3> out;
  out.reserve(static_cast<std::size_t>(q) * q + q + 1);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) out.push_back({1, a, b});
  }
  for (std::uint32_t a = 0; a < q; ++a) out.push_back({0, 1, a});
  out.push_back({0, 0, 1});
  return out;
}

}  // namespace

ProjectivePlane::ProjectivePlane(std::uint64_t q)
    : field_(q), points_(canonical_vectors(field_.order())), lines_(points_) {}

bool ProjectivePlane::incident(std::size_t point, std::size_t line) const {
  const Vector3& x = points_.at(point);
  const Vector3& l = lines_.at(line);
  FiniteField::Element dot = field_.zero();
  for (int i = 0; i < 3; ++i) dot = field_.add(dot, field_.mul(x[i], l[i]));
  return dot == field_.zero();
}

std::vector<std::size_t> ProjectivePlane::points_on(std::size_t line) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < points_.size(); ++p) {
    if (incident(p, line)) out.push_back(p);
  }
  return out;
}

WeightedGraph ProjectivePlane::incidence_graph() const {
  const std::size_t n = points_.size();
  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("P" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) labels.push_back("L" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t l = 0; l < n; ++l) {
      if (incident(p, l)) edges.push_back({p, n + l, 1.0});
    }
  }
  return WeightedGraph(std::move(labels), std::move(edges));
}

WeightedGraph incidence_graph(std::uint64_t q) { return ProjectivePlane(q).incidence_graph(); }

}  // namespace kazhdan
