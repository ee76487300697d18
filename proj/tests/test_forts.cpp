#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zfort/census.hpp"
#include "zfort/errors.hpp"
#include "zfort/families.hpp"
#include "zfort/forcing.hpp"
#include "zfort/forts.hpp"
#include "zfort/hypergraph.hpp"

using namespace zfort;

TEST_SUITE("fort-engine") {
  TEST_CASE("fort predicate") {
    const Graph p3 = family::path(3);
    CHECK(is_fort(p3, VertexSet(3, {0, 2})));
    CHECK_FALSE(is_fort(p3, VertexSet(3, {0})));
    CHECK(is_fort(family::cycle(4), VertexSet(4, {0, 2})));
    CHECK_THROWS_AS(is_fort(p3, VertexSet(3)), InputError);
    CHECK(fort_complement_check(p3, VertexSet(3, {0, 2})));
    CHECK_FALSE(fort_complement_check(p3, VertexSet(3, {2})));
  }

  TEST_CASE("minimal forts") {
    const Hypergraph p3 = minimal_forts(family::path(3));
    CHECK(p3.edges() == std::vector<VertexSet>{VertexSet(3, {0, 2})});

    const Hypergraph pet = minimal_forts(family::petersen());
    CHECK(pet.edge_count() == 20);
    CHECK(testing::sets_equal_unordered(pet.edges(), testing::printed_petersen_forts()));
    CHECK(pet.uniform_k() == 4);
    CHECK(pet.regular_d() == 8);

    const Hypergraph k4 = minimal_forts(family::complete(4));
    CHECK(k4.edge_count() == 6);
    for (const auto& e : k4.edges()) CHECK(e.count() == 2);

    CHECK_THROWS_AS(minimal_forts(family::path(21)), CapExceeded);
    CHECK_THROWS_AS(minimal_forts(family::path(25), {25, 1}), CapExceeded);
  }

  TEST_CASE("minimal forts agree with brute force and are sorted") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
      const Graph g = random_graph(1 + rng() % 9, rng());
      const Hypergraph h = minimal_forts(g, {20, 1 + rng() % 3});
      CHECK(testing::sets_equal_unordered(h.edges(), testing::brute_force_minimal_forts(g)));
      CHECK(h.is_simple());
      CHECK(std::is_sorted(h.edges().begin(), h.edges().end(), size_lex_less));
      CHECK(is_fort(g, g.vertex_set()));
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) {
          CHECK(std::find(h.edges().begin(), h.edges().end(), VertexSet(g.order(), {v})) != h.edges().end());
        }
      }
    }
  }

  TEST_CASE("fort predicate against the stalled complement, exhaustive to order 7") {
    std::size_t checked = 0;
    for (const auto& g : graph_census(7, false)) {
      const std::uint64_t top = std::uint64_t{1} << g.order();
      for (std::uint64_t m = 1; m < top; ++m) {
        const VertexSet f = VertexSet::from_mask(g.order(), m);
        if (is_fort(g, f) != fort_complement_check(g, f)) FAIL("mismatch on " << f.to_string());
        ++checked;
      }
    }
    CHECK(checked > 100000);
  }

  TEST_CASE("fort predicate against the stalled complement, random orders 8..12") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 8 + rng() % 5;
      const Graph g = random_graph(n, rng());
      for (int j = 0; j < 50; ++j) {
        const std::uint64_t m = rng() & ((std::uint64_t{1} << n) - 1);
        if (m == 0) continue;
        const VertexSet f = VertexSet::from_mask(n, m);
        CHECK(is_fort(g, f) == fort_complement_check(g, f));
        CHECK(is_fort(g, f) == testing::fort_by_definition(g, f));
      }
    }
  }

  TEST_CASE("cross product") {
    const Hypergraph a(2, {VertexSet(2, {1})});
    const Hypergraph b(3, {VertexSet(3, {2})});
    const Hypergraph ab = hypergraph_cross_product(a, b);
    CHECK(ab.edges() == std::vector<VertexSet>{VertexSet(6, {product_vertex(1, 2, 3)})});

    const Hypergraph k2 = minimal_forts(family::complete(2));
    const Hypergraph k2k2 = hypergraph_cross_product(k2, k2);
    CHECK(k2k2.edge_count() == 1);
    CHECK(k2k2.edges()[0] == VertexSet::full(4));

    const Hypergraph k4 = minimal_forts(family::complete(4));
    CHECK(hypergraph_cross_product(k4, k4).edge_count() == 36);
    CHECK_THROWS_AS(hypergraph_cross_product(k4, k4, 15), CapExceeded);
  }

  TEST_CASE("products of forts are forts of the product") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
      const Graph g = random_graph(2 + rng() % 4, rng());
      const Graph h = random_graph(2 + rng() % 4, rng());
      const Graph gh = cartesian_product(g, h);
      const Hypergraph fg = minimal_forts(g), fh = minimal_forts(h);
      const Hypergraph product = hypergraph_cross_product(fg, fh);
      for (const auto& e : product.edges()) CHECK(is_fort(gh, e));
    }
  }

  TEST_CASE("twins") {
    CHECK(twin_pairs(family::complete(3)) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(twin_pairs(family::path(4)).empty());
    CHECK(twin_pairs(family::complete_bipartite(1, 3)) == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  }

  TEST_CASE("twins are exactly the two-element forts") {
    for (const auto& g : graph_census(6, false)) {
      std::vector<Edge> two_forts;
      for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex w = u + 1; w < g.order(); ++w) {
          if (is_fort(g, VertexSet(g.order(), {u, w}))) two_forts.push_back({u, w});
        }
      }
      CHECK(twin_pairs(g) == two_forts);
    }
  }

  TEST_CASE("swapping a twin keeps a fort a fort") {
    std::size_t swaps = 0;
    for (const auto& g : graph_census(8, false)) {
      const auto twins = twin_pairs(g);
      if (twins.empty()) continue;
      const Hypergraph h = minimal_forts(g);
      for (const auto& [a, b] : twins) {
        for (const auto& f : h.edges()) {
          for (auto [u, w] : {Edge{a, b}, Edge{b, a}}) {
            if (!f.contains(u) || f.contains(w)) continue;
            VertexSet swapped = f;
            swapped.erase(u);
            swapped.insert(w);
            CHECK(is_fort(g, swapped));
            ++swaps;
          }
        }
      }
    }
    CHECK(swaps > 0);
  }

  TEST_CASE("half partition") {
    CHECK(ft_half_partition_check(family::complete(4)).has_value());
    CHECK(ft_half_partition_check(family::join_clique_union(2, 2, 2)).has_value());
    CHECK_FALSE(ft_half_partition_check(family::cycle(5)).has_value());
    CHECK_THROWS_AS(ft_half_partition_check(family::empty(2)), InputError);
    const auto part = ft_half_partition_check(family::complete(4));
    REQUIRE(part);
    CHECK(part->size() == 2);
  }
}
