// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace kazhdan {

using VertexIndex = std::size_t;

struct Edge {
  VertexIndex u;
  VertexIndex v;
  double weight;
};

struct Neighbor {
  VertexIndex vertex;
  double weight;
};

/// Finite simple graph with symmetric positive edge weights.
///
/// Vertices are opaque string labels indexed in declaration order. Each
/// unordered edge is stored once; every formula that sums over oriented
/// pairs counts it twice. Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Throws StructuralError on duplicate labels, unknown endpoints,
  /// self-loops, repeated edges or non-positive weights.
  WeightedGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  /// Convenience form taking edges as label triples.
  static WeightedGraph from_labels(
      std::vector<std::string> vertices,
      const std::vector<std::tuple<std::string, std::string, double>>& edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexIndex v) const { return labels_.at(v); }
  std::optional<VertexIndex> find(const std::string& label) const;
  VertexIndex index_of(const std::string& label) const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Neighbor> neighbors(VertexIndex v) const { return adjacency_.at(v); }

  /// deg_w(v): sum of the weights of edges at v.
  double degree(VertexIndex v) const { return degrees_.at(v); }
  std::span<const double> degrees() const { return degrees_; }

  /// w(E) = 2 * (sum of unordered edge weights).
  double total_weight() const { return total_weight_; }

  /// Weight of the edge {u, v}, or nullopt when absent.
  std::optional<double> weight(VertexIndex u, VertexIndex v) const;

  /// Same graph with every weight multiplied by factor > 0.
  WeightedGraph scaled(double factor) const;

  bool operator==(const WeightedGraph& other) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, VertexIndex> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> degrees_;
  double total_weight_ = 0.0;
};

/// Symmetric generating set S with its inversion and the partial product
/// table (s, t) -> r whenever s^-1 t = r lies in S.
class GeneratingSetSpec {
 public:
  using Product = std::tuple<std::string, std::string, std::string>;

  GeneratingSetSpec() = default;

  /// Validates that labels are distinct, inverse is a total involution on the
  /// labels, and products only mention known labels and never contain a
  /// pair (s, s). Throws StructuralError otherwise.
  GeneratingSetSpec(std::vector<std::string> elements,
                    std::map<std::string, std::string> inverse,
                    std::vector<Product> products = {});

  const std::vector<std::string>& elements() const { return elements_; }
  const std::map<std::string, std::string>& inverse_map() const { return inverse_; }
  const std::vector<Product>& products() const { return products_; }

  const std::string& inverse(const std::string& s) const;
  std::optional<std::string> product(const std::string& s, const std::string& t) const;
  bool has_products() const { return !products_.empty(); }

 private:
  std::vector<std::string> elements_;
  std::map<std::string, std::string> inverse_;
  std::vector<Product> products_;
  std::map<std::pair<std::string, std::string>, std::string> table_;
};

/// Link graph: vertices S, edge {s, t} whenever s^-1 t is in S. Throws
/// StructuralError naming the pair when the product table is not closed
/// under (s, t) -> (t, s) with r -> r^-1.
WeightedGraph build_link_graph(const GeneratingSetSpec& spec, double default_weight = 1.0);

struct AdmissibilityViolation {
  int condition;        // 1: deg(s) = deg(s^-1); 2: deg(r) = mass of pairs with s^-1 t = r
  std::string element;  // witness s (condition 1) or r (condition 2)
  double lhs;
  double rhs;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<AdmissibilityViolation> violations;
};

/// Checks both admissibility conditions to relative tolerance 1e-12.
AdmissibilityReport verify_admissible(const GeneratingSetSpec& spec, const WeightedGraph& graph);

/// Breadth-first reachability. Throws StructuralError on an empty graph.
bool is_connected(const WeightedGraph& graph);

/// Number of connected components.
std::size_t component_count(const WeightedGraph& graph);

/// Unweighted path distances from source; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const WeightedGraph& graph,
                                                      VertexIndex source);

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  double total_weight = 0.0;  // w(E)
  double degree_min = 0.0;
  double degree_max = 0.0;
  bool regular = false;
};

GraphStats graph_stats(const WeightedGraph& graph);

/// True when the graph admits a proper two-colouring.
bool is_bipartite(const WeightedGraph& graph);

}  // namespace kazhdan
