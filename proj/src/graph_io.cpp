// SPDX-License-Identifier: Apache-2.0

#include "kazhdan/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kazhdan/errors.hpp"

namespace kazhdan {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

template <typename T>
T get_field(const Json& node, const char* what) {
  try {
    return node.get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad field '") + what + "': " + e.what());
  }
}

}  // namespace

WeightedGraph GraphDocument::graph() const { return WeightedGraph::from_labels(vertices, edges); }

GeneratingSetSpec GraphDocument::spec() const {
  if (!inverse) throw DomainError("document has no 'inverse' map; generating-set operations need one");
  return GeneratingSetSpec(vertices, *inverse, products);
}

GraphDocument GraphDocument::from_graph(const WeightedGraph& graph) {
  GraphDocument doc;
  doc.vertices = graph.labels();
  for (const Edge& e : graph.edges()) {
    doc.edges.emplace_back(graph.label(e.u), graph.label(e.v), e.weight);
  }
  return doc;
}

GraphDocument GraphDocument::from_spec(const GeneratingSetSpec& spec, const WeightedGraph& graph) {
  GraphDocument doc = from_graph(graph);
  doc.inverse = spec.inverse_map();
  doc.products = spec.products();
  return doc;
}

GraphDocument parse_graph_document(const std::string& text) {
  const Json root = parse_json(text);
  if (!root.is_object()) throw ParseError("graph document must be an object");
  if (!root.contains("vertices")) throw ParseError("graph document lacks 'vertices'");
  GraphDocument doc;
  doc.vertices = get_field<std::vector<std::string>>(root["vertices"], "vertices");
  if (root.contains("inverse")) {
    doc.inverse = get_field<std::map<std::string, std::string>>(root["inverse"], "inverse");
  }
  if (root.contains("products")) {
    for (const auto& triple : root["products"]) {
      const auto v = get_field<std::vector<std::string>>(triple, "products");
      if (v.size() != 3) throw ParseError("each product must be an [s, t, r] triple");
      doc.products.emplace_back(v[0], v[1], v[2]);
    }
  }
  if (root.contains("edges")) {
    for (const auto& e : root["edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("w")) {
        throw ParseError("each edge must be an object with u, v and w");
      }
      const double w = get_field<double>(e["w"], "w");
      if (!(w > 0.0)) throw ParseError("edge weights must be positive");
      doc.edges.emplace_back(get_field<std::string>(e["u"], "u"),
                             get_field<std::string>(e["v"], "v"), w);
    }
  }
  return doc;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GraphDocument read_graph_document(const std::filesystem::path& path) {
  return parse_graph_document(read_text_file(path));
}

std::string dump_graph_document(const GraphDocument& doc) {
  Json root;
  root["vertices"] = doc.vertices;
  if (doc.inverse) root["inverse"] = *doc.inverse;
  if (!doc.products.empty()) {
    Json products = Json::array();
    for (const auto& [s, t, r] : doc.products) products.push_back({s, t, r});
    root["products"] = std::move(products);
  }
  Json edges = Json::array();
  for (const auto& [u, v, w] : doc.edges) edges.push_back({{"u", u}, {"v", v}, {"w", w}});
  root["edges"] = std::move(edges);
  return root.dump(2) + "\n";
}

void write_graph_document(const std::filesystem::path& path, const GraphDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << dump_graph_document(doc);
}

GroupDocument parse_group_document(const std::string& text) {
  const Json root = parse_json(text);
  if (!root.is_object() || !root.contains("elements") || !root.contains("table") ||
      !root.contains("images")) {
    throw ParseError("group document needs 'elements', 'table' and 'images'");
  }
  GroupDocument doc;
  doc.elements = get_field<std::vector<std::string>>(root["elements"], "elements");
  doc.table = get_field<std::vector<std::vector<std::size_t>>>(root["table"], "table");
  doc.images = get_field<std::map<std::string, std::size_t>>(root["images"], "images");
  return doc;
}

GroupDocument read_group_document(const std::filesystem::path& path) {
  return parse_group_document(read_text_file(path));
}

std::string dump_group_document(const GroupDocument& doc) {
  Json root;
  root["elements"] = doc.elements;
  root["table"] = doc.table;
  root["images"] = doc.images;
  return root.dump(2) + "\n";
}

}  // namespace kazhdan
