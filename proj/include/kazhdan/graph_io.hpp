// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kazhdan/graph.hpp"

namespace kazhdan {

/// In-memory form of the graph/spec document:
///
///   {"vertices": [...], "inverse": {...}, "products": [[s, t, r], ...],
///    "edges": [{"u": .., "v": .., "w": ..}, ...]}
///
/// `inverse` and `products` are optional; a document without them supports
/// spectral operations only.
struct GraphDocument {
  std::vector<std::string> vertices;
  std::optional<std::map<std::string, std::string>> inverse;
  std::vector<GeneratingSetSpec::Product> products;
  std::vector<std::tuple<std::string, std::string, double>> edges;

  WeightedGraph graph() const;
  bool has_spec() const { return inverse.has_value(); }
  /// Throws DomainError when no inverse map is present.
  GeneratingSetSpec spec() const;

  static GraphDocument from_graph(const WeightedGraph& graph);
  static GraphDocument from_spec(const GeneratingSetSpec& spec, const WeightedGraph& graph);
};

/// Throws ParseError on malformed text or schema violations.
GraphDocument parse_graph_document(const std::string& text);
GraphDocument read_graph_document(const std::filesystem::path& path);

/// Deterministic serialization; weights are written with round-trip precision.
std::string dump_graph_document(const GraphDocument& doc);
void write_graph_document(const std::filesystem::path& path, const GraphDocument& doc);

/// Finite group given by a full multiplication table on element indices,
/// with the images of the generators.
struct GroupDocument {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = index of a*b
  std::map<std::string, std::size_t> images;    // generator label -> element index
};

GroupDocument parse_group_document(const std::string& text);
GroupDocument read_group_document(const std::filesystem::path& path);
std::string dump_group_document(const GroupDocument& doc);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace kazhdan
