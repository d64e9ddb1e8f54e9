// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "kazhdan/certificate.hpp"
#include "kazhdan/errors.hpp"
#include "kazhdan/p_laplacian.hpp"
#include "kazhdan/spectral.hpp"

using namespace kazhdan;
using namespace kazhdan::testing;

namespace {

double inner_objective_slope(const std::vector<double>& f, double p, const std::vector<double>& deg, double a) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = a - f[i];
    s += p * std::pow(std::abs(d), p - 1.0) * (d > 0 ? 1.0 : d < 0 ? -1.0 : 0.0) * deg[i];
  }
  return s;
}

}  // namespace

TEST_CASE("p-Laplacian pointwise values") {
  const auto d3 = apply_p_laplacian(two_vertex(), std::vector<double>{0.0, 1.0}, 3.0);
  CHECK(d3 == std::vector<double>{-1.0, 1.0});
  for (double p : {1.5, 2.0, 3.0}) {
    for (double x : apply_p_laplacian(complete(4), std::vector<double>(4, 2.5), p)) CHECK(x == 0.0);
  }
  CHECK_THROWS_AS(apply_p_laplacian(two_vertex(), std::vector<double>{0.0, 1.0}, 1.0), DomainError);
}

TEST_CASE("p = 2 reduces to the combinatorial Laplacian") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> weight(0.1, 3.0);
  std::vector<Edge> edges = complete(5).edges();
  for (Edge& e : edges) e.weight = weight(rng);
  const WeightedGraph g(complete(5).labels(), edges);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_function(5, rng);
    const auto lf = apply_p_laplacian(g, f, 2.0);
    for (VertexIndex x = 0; x < 5; ++x) {
      double expected = g.degree(x) * f[x];
      for (VertexIndex y = 0; y < 5; ++y) {
        if (y != x) expected -= g.weight(x, y).value_or(0.0) * f[y];
      }
      CHECK(std::abs(lf[x] - expected) <= 1e-12 * (1.0 + std::abs(expected)));
    }
  }
}

TEST_CASE("Euler identity") {
  std::mt19937_64 rng(77);
  for (const auto& [name, g] : small_fixtures()) {
    for (double p : {1.5, 2.0, 3.0}) {
      for (int trial = 0; trial < 50; ++trial) {
        const auto f = random_function(g.vertex_count(), rng);
        const auto lf = apply_p_laplacian(g, f, p);
        double lhs = 0.0, rhs = 0.0;
        for (VertexIndex x = 0; x < g.vertex_count(); ++x) lhs += f[x] * lf[x];
        for (const Edge& e : g.edges()) rhs += std::pow(std::abs(f[e.u] - f[e.v]), p) * e.weight;
        CHECK(rel_close(lhs, rhs, 1e-10));
      }
    }
  }
}

TEST_CASE("inner alpha") {
  const std::vector<double> f = {0.0, 1.0};
  CHECK(inner_alpha(f, 4.0, std::vector<double>{1.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(inner_alpha(f, 3.0, std::vector<double>{1.0, 2.0}) ==
        doctest::Approx(std::sqrt(2.0) / (1.0 + std::sqrt(2.0))).epsilon(1e-10));
  CHECK(inner_alpha(f, 3.0, std::vector<double>{1.0, 2.0}) == doctest::Approx(0.5857864).epsilon(1e-7));

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> degree(0.5, 4.0);
  std::uniform_real_distribution<double> exponent(1.1, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = random_function(6, rng);
    std::vector<double> deg(6);
    for (double& d : deg) d = degree(rng);
    double sum = 0.0, weighted = 0.0, sup = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      sum += deg[i];
      weighted += g[i] * deg[i];
      sup = std::max(sup, std::abs(g[i]));
    }
    CHECK(std::abs(inner_alpha(g, 2.0, deg) - weighted / sum) <= 1e-10);
    const double p = exponent(rng);
    const double a = inner_alpha(g, p, deg);
    CHECK(a >= *std::min_element(g.begin(), g.end()));
    CHECK(a <= *std::max_element(g.begin(), g.end()));
    // Either the slope is tiny or alpha is pinned between adjacent doubles.
    const double slope = inner_objective_slope(g, p, deg, a);
    const bool small = std::abs(slope) <= 1e-12 * sum * std::pow(sup, p - 1.0) * p;
    const bool pinned = inner_objective_slope(g, p, deg, std::nextafter(a, -1e300)) <= 0.0 &&
                        inner_objective_slope(g, p, deg, std::nextafter(a, 1e300)) >= 0.0;
    CHECK((small || pinned));
  }
}

TEST_CASE("p-Rayleigh quotient") {
  const PRayleigh r = p_rayleigh_quotient(two_vertex(), std::vector<double>{0.0, 1.0}, 2.0);
  CHECK(r.numerator == doctest::Approx(2.0));
  CHECK(r.denominator == doctest::Approx(0.5));
  CHECK(r.value == doctest::Approx(4.0));
  CHECK_THROWS_AS(p_rayleigh_quotient(two_vertex(), std::vector<double>{3.0, 3.0}, 2.0), DomainError);

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> coeff(-4.0, 4.0);
  for (const auto& [name, g] : small_fixtures()) {
    for (double p : {1.5, 2.0, 3.0}) {
      for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_function(g.vertex_count(), rng);
        double c = coeff(rng);
        if (std::abs(c) < 1e-2) c = -2.0;
        const double d = coeff(rng);
        std::vector<double> h(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) h[i] = c * f[i] + d;
        CHECK(rel_close(p_rayleigh_quotient(g, h, p).value, p_rayleigh_quotient(g, f, p).value, 1e-10));
      }
    }
  }
}

TEST_CASE("lambda1_p bridges to the normalized spectrum at p = 2") {
  for (const auto& [name, g] : small_fixtures()) {
    CAPTURE(name);
    const RayleighResult r = lambda1_p(g, 2.0);
    CHECK(std::abs(r.value - 2.0 * lambda1(g)) <= 1e-8);
    CHECK(rel_close(p_rayleigh_quotient(g, r.witness, 2.0).value, r.value, 1e-9));
  }
  CHECK(lambda1_p(two_vertex(), 2.0).value == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(lambda1_p(cycle(4), 2.0).value == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("lambda1_p is a running minimum over restarts") {
  const WeightedGraph g = cycle(5);
  PLaplacianOptions few;
  few.restarts = 8;
  PLaplacianOptions many;
  many.restarts = 64;
  for (double p : {2.0, 3.0}) {
    const double a = lambda1_p(g, p, few).value;
    const double b = lambda1_p(g, p, many).value;
    CHECK(b <= a + 1e-12);
    CHECK(lambda1_p(g, p, few).value == a);
  }
}

TEST_CASE("lambda1_p rejects disconnected graphs") {
  const WeightedGraph g = WeightedGraph::from_labels({"a", "b", "c", "d"}, {{"a", "b", 1.0}, {"c", "d", 1.0}});
  CHECK_THROWS_AS(lambda1_p(g, 2.0), DomainError);
}

TEST_CASE("finite groups") {
  const FiniteGroup z5 = FiniteGroup::cyclic(5);
  CHECK(z5.order() == 5);
  CHECK(z5.identity() == 0);
  CHECK(z5.inverse(2) == 3);
  CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {{0, 1}, {0, 1}}), StructuralError);
  CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {{0, 1}}), StructuralError);
  CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {{0, 2}, {1, 0}}), StructuralError);
  // A Latin square that is not associative (loop of order 5).
  CHECK_THROWS_AS(FiniteGroup({"e", "a", "b", "c", "d"},
                              {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
                  StructuralError);
}

TEST_CASE("Cayley graphs of quotients") {
  SUBCASE("Z/5 with link K4 is K5 with weights 1/4") {
    const auto spec = cyclic_spec(5);
    const WeightedGraph link = build_link_graph(spec);
    const CayleyGraph c =
        cayley_graph(FiniteGroup::cyclic(5), {{"1", 1}, {"2", 2}, {"3", 3}, {"4", 4}}, spec, link);
    CHECK(c.graph.vertex_count() == 5);
    CHECK(c.graph.edge_count() == 10);
    for (const Edge& e : c.graph.edges()) CHECK(e.weight == 0.25);
  }
  SUBCASE("Z/3 with link K2 is a triangle with weights 1/2") {
    const CayleyGraph c = cayley_graph(FiniteGroup::cyclic(3), {{"1", 1}, {"2", 2}}, {{"1", 1.0}, {"2", 1.0}},
                                       2.0, {{"1", "2"}, {"2", "1"}});
    CHECK(c.graph.edge_count() == 3);
    for (const Edge& e : c.graph.edges()) CHECK(e.weight == 0.5);
  }
  SUBCASE("degrees are equal at every vertex") {
    const CayleyGraph c = cayley_graph(FiniteGroup::cyclic(7), {{"a", 1}, {"A", 6}, {"b", 2}, {"B", 5}},
                                       {{"a", 2.0}, {"A", 2.0}, {"b", 1.0}, {"B", 1.0}}, 6.0,
                                       {{"a", "A"}, {"A", "a"}, {"b", "B"}, {"B", "b"}});
    for (VertexIndex v = 0; v < 7; ++v) CHECK(c.graph.degree(v) == doctest::Approx(1.0));
  }
  SUBCASE("non-generating image") {
    CHECK_THROWS_AS(cayley_graph(FiniteGroup::cyclic(4), {{"a", 2}}, {{"a", 1.0}}, 1.0, {{"a", "a"}}),
                    StructuralError);
  }
  SUBCASE("inversion not respected") {
    CHECK_THROWS_AS(cayley_graph(FiniteGroup::cyclic(5), {{"1", 1}, {"2", 1}}, {{"1", 1.0}, {"2", 1.0}}, 2.0,
                                 {{"1", "2"}, {"2", "1"}}),
                    StructuralError);
  }
  SUBCASE("generator sent to the identity") {
    CHECK_THROWS_AS(cayley_graph(FiniteGroup::cyclic(3), {{"1", 0}, {"2", 0}}, {{"1", 1.0}, {"2", 1.0}}, 2.0,
                                 {{"1", "2"}, {"2", "1"}}),
                    StructuralError);
  }
}

TEST_CASE("quotient bound at p = 2") {
  SUBCASE("Z/5") {
    const auto spec = cyclic_spec(5);
    const WeightedGraph link = build_link_graph(spec);
    const CayleyGraph c =
        cayley_graph(FiniteGroup::cyclic(5), {{"1", 1}, {"2", 2}, {"3", 3}, {"4", 4}}, spec, link);
    const QuotientBoundReport r = check_quotient_bound({kappa2(link), Method::eigen}, c, 2.0);
    CHECK(r.claimed);
    CHECK(r.bound_stated == doctest::Approx(2.0 * (1.0 - std::sqrt(0.375))).epsilon(1e-12));
    CHECK(r.bound_stated == doctest::Approx(0.7752551).epsilon(1e-7));
    CHECK(r.bound_derived == doctest::Approx(r.bound_stated * r.bound_stated));
    CHECK(r.lambda_p == doctest::Approx(2.0 * lambda1(c.graph)).epsilon(1e-8));
    CHECK(r.holds_stated);
    CHECK(r.margin_stated > 0.0);
  }
  SUBCASE("Z/3") {
    const auto spec = GeneratingSetSpec({"1", "2"}, {{"1", "2"}, {"2", "1"}}, {{"1", "2", "1"}, {"2", "1", "2"}});
    const WeightedGraph link = build_link_graph(spec);
    const CayleyGraph c = cayley_graph(FiniteGroup::cyclic(3), {{"1", 1}, {"2", 2}}, spec, link);
    const QuotientBoundReport r = check_quotient_bound({kappa2(link), Method::eigen}, c, 2.0);
    CHECK(r.bound_stated == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.holds_stated);
    CHECK(r.margin_stated > 0.0);
  }
  SUBCASE("no bound without a certified condition") {
    const CayleyGraph c = cayley_graph(FiniteGroup::cyclic(3), {{"1", 1}, {"2", 2}}, {{"1", 1.0}, {"2", 1.0}}, 2.0,
                                       {{"1", "2"}, {"2", "1"}});
    CHECK_FALSE(check_quotient_bound({1.5, Method::eigen}, c, 2.0).claimed);
    CHECK_FALSE(check_quotient_bound({0.5, Method::optimize}, c, 2.0).claimed);
  }
}
