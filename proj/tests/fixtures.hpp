// SPDX-License-Identifier: Apache-2.0
// Small graphs and generating sets shared by the test suites.

#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "kazhdan/graph.hpp"

namespace kazhdan::testing {

// Z/n with S = {1, ..., n-1}; products (s, t) -> t - s whenever t != s.
inline GeneratingSetSpec cyclic_spec(int n) {
  std::vector<std::string> elems;
  std::map<std::string, std::string> inv;
  std::vector<GeneratingSetSpec::Product> products;
  for (int s = 1; s < n; ++s) {
    elems.push_back(std::to_string(s));
    inv[std::to_string(s)] = std::to_string(n - s);
  }
  for (int s = 1; s < n; ++s) {
    for (int t = 1; t < n; ++t) {
      const int r = ((t - s) % n + n) % n;
      if (s != t && r != 0) products.emplace_back(std::to_string(s), std::to_string(t), std::to_string(r));
    }
  }
  return GeneratingSetSpec(elems, inv, products);
}

inline WeightedGraph two_vertex() { return WeightedGraph::from_labels({"a", "b"}, {{"a", "b", 1.0}}); }

inline WeightedGraph path3() {
  return WeightedGraph::from_labels({"a", "b", "c"}, {{"a", "b", 1.0}, {"b", "c", 1.0}});
}

inline WeightedGraph triangle() {
  return WeightedGraph::from_labels({"a", "b", "c"}, {{"a", "b", 1.0}, {"b", "c", 1.0}, {"a", "c", 1.0}});
}

inline WeightedGraph complete(int n) {
  std::vector<std::string> v;
  std::vector<std::tuple<std::string, std::string, double>> e;
  for (int i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(v[i], v[j], 1.0);
  }
  return WeightedGraph::from_labels(v, e);
}

inline WeightedGraph cycle(int n) {
  std::vector<std::string> v;
  std::vector<std::tuple<std::string, std::string, double>> e;
  for (int i = 0; i < n; ++i) v.push_back("c" + std::to_string(i));
  for (int i = 0; i < n; ++i) e.emplace_back(v[i], v[(i + 1) % n], 1.0);
  return WeightedGraph::from_labels(v, e);
}

// Connected fixture set with at most five vertices.
inline std::vector<std::pair<std::string, WeightedGraph>> small_fixtures() {
  return {{"two-vertex", two_vertex()}, {"path-3", path3()}, {"triangle", triangle()},
          {"K4", complete(4)},          {"4-cycle", cycle(4)}};
}

inline std::vector<double> random_function(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> f(n);
  for (double& x : f) x = normal(rng);
  return f;
}

inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace kazhdan::testing
