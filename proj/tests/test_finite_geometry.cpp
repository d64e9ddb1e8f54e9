// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <set>

#include "kazhdan/errors.hpp"
#include "kazhdan/finite_field.hpp"
#include "kazhdan/graph.hpp"
#include "kazhdan/projective_plane.hpp"

using namespace kazhdan;

TEST_CASE("prime power factorization") {
  CHECK(factor_prime_power(13).prime == 13);
  CHECK(factor_prime_power(13).exponent == 1);
  CHECK(factor_prime_power(64).prime == 2);
  CHECK(factor_prime_power(64).exponent == 6);
  CHECK(factor_prime_power(1000003).exponent == 1);
  CHECK_THROWS_WITH_AS(factor_prime_power(6), doctest::Contains("2 * 3"), DomainError);
  CHECK_THROWS_AS(factor_prime_power(1), DomainError);
  CHECK_THROWS_AS(factor_prime_power(0), DomainError);
  CHECK_THROWS_AS(make_prime_power(4, 2), DomainError);
  CHECK_THROWS_AS(make_prime_power(2, 0), DomainError);

  const PrimePower big = make_prime_power(2, 100);
  CHECK(big.to_string() == "2^100");
  CHECK(big.log() == doctest::Approx(100 * std::log(2.0)).epsilon(1e-15));

  const std::vector<std::uint64_t> expected = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31};
  CHECK(prime_powers_up_to(31) == expected);
  CHECK(prime_powers_up_to(1).empty());
}

TEST_CASE("primality agrees with a sieve") {
  constexpr std::size_t n = 5000;
  std::vector<bool> composite(n + 1, false);
  for (std::size_t i = 2; i * i <= n; ++i) {
    if (!composite[i]) {
      for (std::size_t j = i * i; j <= n; j += i) composite[j] = true;
    }
  }
  for (std::size_t i = 0; i <= n; ++i) CHECK(is_prime(i) == (i >= 2 && !composite[i]));
}

TEST_CASE("GF(4) uses x^2 + x + 1") {
  const FiniteField f(4);
  CHECK(f.characteristic() == 2);
  CHECK(f.degree() == 2);
  CHECK(f.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  const auto x = f.from_coefficients({0, 1});
  CHECK(f.mul(x, x) == f.add(x, f.one()));
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(FiniteField(6), DomainError);
  CHECK_THROWS_AS(FiniteField(1), DomainError);
  CHECK_THROWS_AS(FiniteField((1u << 16) + 1), DomainError);
  CHECK_THROWS_AS(FiniteField(7).inv(0), DomainError);
}

TEST_CASE("moduli are irreducible by exhaustive check") {
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128}) {
    const FiniteField f(q);
    CHECK(is_irreducible(f.modulus(), f.characteristic()));
  }
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2));  // (x + 1)^2
  CHECK_FALSE(is_irreducible({0, 1, 1}, 3));  // x (x + 1)
}

TEST_CASE("field axioms hold exhaustively for small orders") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    CAPTURE(q);
    const FiniteField f(q);
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      ok = ok && f.add(a, f.neg(a)) == 0 && f.mul(a, 1) == a;
      if (a != 0) ok = ok && f.mul(a, f.inv(a)) == 1;
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        for (std::uint32_t c = 0; c < q && ok; ++c) {
          ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
          ok = ok && f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c);
        }
      }
    }
    CHECK(ok);
    // Multiplicative group is cyclic of order q - 1: a^(q-1) = 1.
    for (std::uint32_t a = 1; a < q; ++a) CHECK(f.pow(a, q - 1) == 1);
  }
}

TEST_CASE("projective plane axioms") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    CAPTURE(q);
    const ProjectivePlane plane(q);
    const std::size_t n = q * q + q + 1;
    REQUIRE(plane.points().size() == n);
    REQUIRE(plane.lines().size() == n);
    for (std::size_t l = 0; l < n; ++l) CHECK(plane.points_on(l).size() == q + 1);
    // Any two distinct lines meet in exactly one point.
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      const auto pa = plane.points_on(a);
      const std::set<std::size_t> sa(pa.begin(), pa.end());
      for (std::size_t b = a + 1; b < n && ok; ++b) {
        int common = 0;
        for (std::size_t p : plane.points_on(b)) common += static_cast<int>(sa.count(p));
        ok = common == 1;
      }
    }
    CHECK(ok);
    // Any two distinct points lie on exactly one line.
    ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = x + 1; y < n && ok; ++y) {
        int common = 0;
        for (std::size_t l = 0; l < n; ++l) common += plane.incident(x, l) && plane.incident(y, l);
        ok = common == 1;
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("Fano incidence graph") {
  const WeightedGraph g = incidence_graph(2);
  CHECK(g.vertex_count() == 14);
  CHECK(g.edge_count() == 21);
  CHECK(g.total_weight() == 42.0);
  CHECK(is_bipartite(g));
  CHECK(is_connected(g));
  CHECK(g.label(0) == "P0");
  CHECK(g.label(7) == "L0");

  // Girth 6: BFS from every vertex never closes a cycle shorter than 6.
  std::size_t girth = 1000;
  for (VertexIndex s = 0; s < g.vertex_count(); ++s) {
    std::vector<std::size_t> dist;
    for (const auto& d : bfs_distances(g, s)) dist.push_back(d.value());
    for (const Edge& e : g.edges()) {
      if (dist[e.u] == dist[e.v]) girth = std::min<std::size_t>(girth, 2 * dist[e.u] + 1);
      else if (dist[e.u] + 1 != dist[e.v] && dist[e.v] + 1 != dist[e.u]) {
        girth = std::min<std::size_t>(girth, dist[e.u] + dist[e.v] + 1);
      }
    }
    // Two shortest paths meeting at a vertex: a vertex with two parents.
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      int parents = 0;
      for (const auto& nb : g.neighbors(v)) parents += dist[nb.vertex] + 1 == dist[v];
      if (parents >= 2) girth = std::min<std::size_t>(girth, 2 * dist[v]);
    }
  }
  CHECK(girth == 6);
}

TEST_CASE("incidence graph of a non prime power") {
  CHECK_THROWS_AS(incidence_graph(6), DomainError);
  CHECK_THROWS_AS(incidence_graph(10), DomainError);
}
