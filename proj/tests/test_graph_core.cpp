#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "zfort/census.hpp"
#include "zfort/errors.hpp"
#include "zfort/families.hpp"
#include "zfort/graph.hpp"
#include "zfort/graph_io.hpp"

using namespace zfort;

namespace {

bool symmetric_and_loop_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
    }
  }
  return true;
}

// Brute-force isomorphism by trying every bijection; only for tiny orders.
bool isomorphic_by_bijection(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges()) {
      if (!b.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_SUITE("graph-core") {
  TEST_CASE("families") {
    const Graph p3 = family::make("path", {3});
    CHECK(p3.order() == 3);
    CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    const Graph pet = family::petersen();
    CHECK(pet.order() == 10);
    CHECK(pet.edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

    const Graph pp = family::polygonal_path({4, 4});
    CHECK(pp.order() == 6);
    CHECK(pp.edge_count() == 7);

    CHECK(family::cycle(5).edge_count() == 5);
    CHECK(family::complete(5).edge_count() == 10);
    CHECK(family::empty(4).edge_count() == 0);
    CHECK(family::complete_bipartite(2, 3).edge_count() == 6);
    CHECK(family::friendship(3).order() == 7);
    CHECK(family::join_clique_union(2, 3, 1).order() == 7);
    CHECK(family::double_branch_tree(2, {1, 2}).order() == 2 + 2 * 3);
    for (const auto& name : family::names()) CHECK(!name.empty());
  }

  TEST_CASE("family errors") {
    CHECK_THROWS_AS(family::make("cycle", {2}), InputError);
    CHECK_THROWS_AS(family::make("nonsense", {3}), InputError);
    CHECK_THROWS_AS(family::make("path", {0}), InputError);
    CHECK_THROWS_AS(family::make("complete_bipartite", {3}), InputError);
  }

  TEST_CASE("cartesian product") {
    const Graph k2 = family::complete(2);
    CHECK(isomorphic_by_bijection(cartesian_product(k2, k2), family::cycle(4)));

    const Graph k4k4 = cartesian_product(family::complete(4), family::complete(4));
    CHECK(k4k4.order() == 16);
    CHECK(k4k4.edge_count() == 48);
    for (Vertex v = 0; v < 16; ++v) CHECK(k4k4.degree(v) == 6);

    const Graph prism = cartesian_product(family::complete(3), family::path(2));
    CHECK(prism.order() == 6);
    CHECK(prism.edge_count() == 9);
    CHECK(prism.adjacent(product_vertex(0, 0, 2), product_vertex(0, 1, 2)));
    CHECK(prism.adjacent(product_vertex(0, 1, 2), product_vertex(2, 1, 2)));

    CHECK_THROWS_AS(cartesian_product(family::path(40), family::path(40)), CapExceeded);
    CHECK_THROWS_AS(cartesian_product(family::path(4), family::path(4), 15), CapExceeded);
  }

  TEST_CASE("product edge count and commutativity") {
    const std::vector<Graph> gs{family::path(3), family::cycle(4), family::complete(3), family::complete_bipartite(1, 3),
                                family::empty(2)};
    for (const auto& g : gs) {
      for (const auto& h : gs) {
        const Graph gh = cartesian_product(g, h);
        const Graph hg = cartesian_product(h, g);
        CHECK(gh.edge_count() == g.order() * h.edge_count() + h.order() * g.edge_count());
        CHECK(symmetric_and_loop_free(gh));
        auto d1 = gh.degree_sequence(), d2 = hg.degree_sequence();
        std::sort(d1.begin(), d1.end());
        std::sort(d2.begin(), d2.end());
        CHECK(d1 == d2);
        if (gh.order() <= 8) CHECK(isomorphic_by_bijection(gh, hg));
        // The swap (u,u') -> (u',u) is an explicit isomorphism.
        std::vector<Vertex> perm(gh.order());
        for (Vertex u = 0; u < g.order(); ++u) {
          for (Vertex w = 0; w < h.order(); ++w) perm[product_vertex(u, w, h.order())] = product_vertex(w, u, g.order());
        }
        CHECK(relabel(gh, perm) == hg);
      }
    }
  }

  TEST_CASE("corona, join, union") {
    const Graph c1 = corona(family::path(2), family::empty(2));
    CHECK(c1.order() == 6);
    CHECK(c1.degree(0) == 3);
    CHECK(c1.degree(2) == 1);

    const Graph c2 = corona(family::path(2), family::complete(2));
    CHECK(c2.order() == 6);
    CHECK(c2.edge_count() == 7);

    CHECK(isomorphic_by_bijection(corona(family::empty(1), family::complete(2)), family::complete(3)));

    CHECK(isomorphic_by_bijection(join(family::empty(1), family::empty(3)), family::complete_bipartite(1, 3)));

    const Graph two_k3 = disjoint_union(family::complete(3), family::complete(3));
    CHECK(two_k3.order() == 6);
    CHECK(two_k3.edge_count() == 6);

    const Graph g = join(two_k3, family::empty(1));
    CHECK(g.order() == 7);
    CHECK(g.degree(6) == 6);
    CHECK(g == family::join_clique_union(2, 3, 1));

    for (const auto& base : {family::path(3), family::cycle(4), family::complete(3)}) {
      for (const auto& h : {family::empty(2), family::complete(2), family::path(3)}) {
        const Graph c = corona(base, h);
        CHECK(c.edge_count() == base.order() * h.edge_count() + base.order() * h.order() + base.edge_count());
      }
    }
  }

  TEST_CASE("native format") {
    const Graph p3 = parse_graph("n 3\n0 1\n1 2");
    CHECK(p3 == family::path(3));
    const Graph k1 = parse_graph("n 1");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);
    CHECK(parse_graph(emit_graph(family::petersen())) == family::petersen());
    CHECK(parse_graph("n 3\n\n1 2\n") .edge_count() == 1);

    CHECK_THROWS_AS(parse_graph("n 3\n0 3"), InputError);
    CHECK_THROWS_AS(parse_graph("n 3\n0 1\n0 1"), InputError);
    CHECK_THROWS_AS(parse_graph("n 3\n1 1"), InputError);
    CHECK_THROWS_AS(parse_graph("n 3\n0 x"), InputError);
    CHECK_THROWS_AS(parse_graph("n 3\n0 1 2"), InputError);
    CHECK_THROWS_AS(parse_graph("n 0"), InputError);
  }

  TEST_CASE("graph6") {
    const Graph g = parse_graph("DQc");
    CHECK(g.order() == 5);
    CHECK(to_graph6(g) == "DQc");
    // Hand decode of "DQc": bits 010000 110000 100100... give edges 0-2, 0-4, 1-3, 3-4.
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {0, 4}, {1, 3}, {3, 4}});

    CHECK(to_graph6(family::path(1)) == "@");
    CHECK(to_graph6(family::complete(2)) == "A_");
    CHECK_THROWS_AS(parse_graph6("D"), InputError);
    CHECK_THROWS_AS(parse_graph6("DQ\x7f"), InputError);
    CHECK_THROWS_AS(to_graph6(family::path(63)), InputError);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
      const Graph r = random_graph(1 + rng() % 20, rng());
      CHECK(parse_graph(to_graph6(r)) == r);
      CHECK(parse_graph(emit_graph(r)) == r);
    }
  }

  TEST_CASE("adjacency invariants on generated graphs") {
    for (const auto& g : graph_census(5, false)) CHECK(symmetric_and_loop_free(g));
    CHECK(symmetric_and_loop_free(family::petersen()));
    CHECK(symmetric_and_loop_free(family::polygonal_path({3, 5, 4})));
    CHECK(symmetric_and_loop_free(family::double_branch_tree(3, {1, 2})));
  }

  TEST_CASE("census and canonical form") {
    const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
    std::vector<std::size_t> seen(7, 0);
    for (const auto& g : graph_census(7, true)) {
      CHECK(g.is_connected());
      ++seen[g.order() - 1];
    }
    CHECK(seen == connected);
    std::vector<std::size_t> seen_all(7, 0);
    for (const auto& g : graph_census(7, false)) ++seen_all[g.order() - 1];
    CHECK(seen_all == all);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
      const Graph g = random_graph(8, rng());
      std::vector<Vertex> perm(8);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_key(g) == canonical_key(relabel(g, perm)));
    }
    CHECK_FALSE(isomorphic(family::path(4), family::complete_bipartite(1, 3)));
  }
}
