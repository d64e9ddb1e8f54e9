// SPDX-License-Identifier: Apache-2.0

#include "kazhdan/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "kazhdan/errors.hpp"

namespace kazhdan {

namespace {

bool close_relative(double a, double b, double rel) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= rel * scale;
}

}  // namespace

WeightedGraph::WeightedGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : labels_(std::move(vertices)), edges_(std::move(edges)) {
  for (VertexIndex i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw StructuralError("duplicate vertex label '" + labels_[i] + "'");
    }
  }
  adjacency_.resize(labels_.size());
  degrees_.assign(labels_.size(), 0.0);
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  double edge_sum = 0.0;
  for (const Edge& e : edges_) {
    if (e.u >= labels_.size() || e.v >= labels_.size()) {
      throw StructuralError("edge endpoint is not a declared vertex");
    }
    if (e.u == e.v) {
      throw StructuralError("self-loop at vertex '" + labels_[e.u] + "'");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw StructuralError("edge {" + labels_[e.u] + ", " + labels_[e.v] +
                            "} has non-positive weight");
    }
    if (!seen.emplace(std::minmax(e.u, e.v)).second) {
      throw StructuralError("repeated edge {" + labels_[e.u] + ", " + labels_[e.v] + "}");
    }
    adjacency_[e.u].push_back({e.v, e.weight});
    adjacency_[e.v].push_back({e.u, e.weight});
    degrees_[e.u] += e.weight;
    degrees_[e.v] += e.weight;
    edge_sum += e.weight;
  }
  total_weight_ = 2.0 * edge_sum;
}

WeightedGraph WeightedGraph::from_labels(
    std::vector<std::string> vertices,
    const std::vector<std::tuple<std::string, std::string, double>>& edges) {
  std::map<std::string, VertexIndex> index;
  for (VertexIndex i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [u, v, w] : edges) {
    auto iu = index.find(u);
    auto iv = index.find(v);
    if (iu == index.end() || iv == index.end()) {
      throw StructuralError("edge {" + u + ", " + v + "} names an undeclared vertex");
    }
    resolved.push_back({iu->second, iv->second, w});
  }
  return WeightedGraph(std::move(vertices), std::move(resolved));
}

std::optional<VertexIndex> WeightedGraph::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex WeightedGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw StructuralError("unknown vertex '" + label + "'");
  return it->second;
}

std::optional<double> WeightedGraph::weight(VertexIndex u, VertexIndex v) const {
  for (const Neighbor& n : adjacency_.at(u)) {
    if (n.vertex == v) return n.weight;
  }
  return std::nullopt;
}

WeightedGraph WeightedGraph::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("weight scale factor must be positive");
  std::vector<Edge> edges = edges_;
  for (Edge& e : edges) e.weight *= factor;
  return WeightedGraph(labels_, std::move(edges));
}

bool WeightedGraph::operator==(const WeightedGraph& other) const {
  if (labels_ != other.labels_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& a = edges_[i];
    const Edge& b = other.edges_[i];
    if (a.u != b.u || a.v != b.v || a.weight != b.weight) return false;
  }
  return true;
}

GeneratingSetSpec::GeneratingSetSpec(std::vector<std::string> elements,
                                     std::map<std::string, std::string> inverse,
                                     std::vector<Product> products)
    : elements_(std::move(elements)), inverse_(std::move(inverse)), products_(std::move(products)) {
  std::set<std::string> known;
  for (const auto& s : elements_) {
    if (!known.insert(s).second) throw StructuralError("duplicate generator '" + s + "'");
  }
  for (const auto& [s, t] : inverse_) {
    if (!known.count(s) || !known.count(t)) {
      throw StructuralError("inverse pairs unknown generator '" + s + "' -> '" + t + "'");
    }
  }
  for (const auto& s : elements_) {
    auto it = inverse_.find(s);
    if (it == inverse_.end()) throw StructuralError("generator '" + s + "' has no inverse");
    auto back = inverse_.find(it->second);
    if (back == inverse_.end() || back->second != s) {
      throw StructuralError("inverse is not an involution at '" + s + "'");
    }
  }
  for (const auto& [s, t, r] : products_) {
    if (!known.count(s) || !known.count(t) || !known.count(r)) {
      throw StructuralError("product (" + s + ", " + t + ") -> " + r +
                            " mentions an unknown generator");
    }
    if (s == t) {
      throw StructuralError("product (" + s + ", " + s + ") would be the identity");
    }
    auto [it, inserted] = table_.emplace(std::make_pair(s, t), r);
    if (!inserted && it->second != r) {
      throw StructuralError("product (" + s + ", " + t + ") defined twice");
    }
  }
}

const std::string& GeneratingSetSpec::inverse(const std::string& s) const {
  auto it = inverse_.find(s);
  if (it == inverse_.end()) throw StructuralError("no inverse for '" + s + "'");
  return it->second;
}

std::optional<std::string> GeneratingSetSpec::product(const std::string& s,
                                                      const std::string& t) const {
  auto it = table_.find({s, t});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

WeightedGraph build_link_graph(const GeneratingSetSpec& spec, double default_weight) {
  if (!(default_weight > 0.0)) throw DomainError("default weight must be positive");
  const auto& elems = spec.elements();
  std::vector<Edge> edges;
  for (VertexIndex i = 0; i < elems.size(); ++i) {
    for (VertexIndex j = i + 1; j < elems.size(); ++j) {
      const auto forward = spec.product(elems[i], elems[j]);
      const auto backward = spec.product(elems[j], elems[i]);
      if (!forward && !backward) continue;
      const std::string pair = "(" + elems[i] + ", " + elems[j] + ")";
      if (!forward || !backward) {
        throw StructuralError("product table defines only one orientation of " + pair);
      }
      if (*backward != spec.inverse(*forward)) {
        throw StructuralError("inconsistent products for " + pair + ": t^-1 s != (s^-1 t)^-1");
      }
      edges.push_back({i, j, default_weight});
    }
  }
  return WeightedGraph(elems, std::move(edges));
}

AdmissibilityReport verify_admissible(const GeneratingSetSpec& spec, const WeightedGraph& graph) {
  constexpr double kTol = 1e-12;
  AdmissibilityReport report;
  const auto& elems = spec.elements();
  if (elems.size() != graph.vertex_count()) {
    throw StructuralError("graph vertex set does not match the generating set");
  }
  for (const auto& s : elems) {
    const double lhs = graph.degree(graph.index_of(s));
    const double rhs = graph.degree(graph.index_of(spec.inverse(s)));
    if (!close_relative(lhs, rhs, kTol)) report.violations.push_back({1, s, lhs, rhs});
  }
  std::map<std::string, double> mass;
  for (const auto& [s, t, r] : spec.products()) {
    const auto w = graph.weight(graph.index_of(s), graph.index_of(t));
    if (w) mass[r] += *w;
  }
  for (const auto& r : elems) {
    const double lhs = graph.degree(graph.index_of(r));
    const double rhs = mass.count(r) ? mass[r] : 0.0;
    if (!close_relative(lhs, rhs, kTol)) report.violations.push_back({2, r, lhs, rhs});
  }
  report.admissible = report.violations.empty();
  return report;
}

std::vector<std::optional<std::size_t>> bfs_distances(const WeightedGraph& graph,
                                                      VertexIndex source) {
  std::vector<std::optional<std::size_t>> dist(graph.vertex_count());
  std::deque<VertexIndex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    for (const Neighbor& n : graph.neighbors(v)) {
      if (!dist[n.vertex]) {
        dist[n.vertex] = *dist[v] + 1;
        queue.push_back(n.vertex);
      }
    }
  }
  return dist;
}

std::size_t component_count(const WeightedGraph& graph) {
  std::vector<bool> visited(graph.vertex_count(), false);
  std::size_t components = 0;
  for (VertexIndex start = 0; start < graph.vertex_count(); ++start) {
    if (visited[start]) continue;
    ++components;
    std::deque<VertexIndex> queue{start};
    visited[start] = true;
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      for (const Neighbor& n : graph.neighbors(v)) {
        if (!visited[n.vertex]) {
          visited[n.vertex] = true;
          queue.push_back(n.vertex);
        }
      }
    }
  }
  return components;
}

bool is_connected(const WeightedGraph& graph) {
  if (graph.vertex_count() == 0) throw StructuralError("graph has no vertices");
  return component_count(graph) == 1;
}

GraphStats graph_stats(const WeightedGraph& graph) {
  GraphStats stats;
  stats.vertex_count = graph.vertex_count();
  stats.edge_count = graph.edge_count();
  stats.total_weight = graph.total_weight();
  if (graph.vertex_count() == 0) return stats;
  const auto degs = graph.degrees();
  const auto [lo, hi] = std::minmax_element(degs.begin(), degs.end());
  stats.degree_min = *lo;
  stats.degree_max = *hi;
  stats.regular = close_relative(*lo, *hi, 1e-12);
  return stats;
}

bool is_bipartite(const WeightedGraph& graph) {
  std::vector<int> colour(graph.vertex_count(), -1);
  for (VertexIndex start = 0; start < graph.vertex_count(); ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::deque<VertexIndex> queue{start};
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      for (const Neighbor& n : graph.neighbors(v)) {
        if (colour[n.vertex] < 0) {
          colour[n.vertex] = 1 - colour[v];
          queue.push_back(n.vertex);
        } else if (colour[n.vertex] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace kazhdan
