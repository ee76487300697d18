#include "zfort/census.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "zfort/errors.hpp"
#include "zfort/graph_io.hpp"

namespace zfort {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Splits cells by neighbor counts into every cell until nothing changes.
void refine(const Graph& g, Partition& p) {
  std::vector<std::size_t> cell_of(g.order());
  while (true) {
    for (std::size_t c = 0; c < p.size(); ++c) {
      for (Vertex v : p[c]) cell_of[v] = c;
    }
    Partition next;
    next.reserve(g.order());
    for (const Cell& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<std::size_t>, Vertex>> keyed;
      for (Vertex v : cell) {
        std::vector<std::size_t> sig(p.size(), 0);
        g.neighbors(v).for_each([&](Vertex w) { ++sig[cell_of[w]]; });
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
        next.back().push_back(keyed[i].second);
      }
    }
    if (next.size() == p.size()) return;
    p = std::move(next);
  }
}

std::string adjacency_code(const Graph& g, const std::vector<Vertex>& order) {
  std::string code;
  for (std::size_t j = 1; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) code.push_back(g.adjacent(order[i], order[j]) ? '1' : '0');
  }
  return code;
}

struct Best {
  std::string code;
  std::vector<Vertex> order;
  bool found = false;
};

void search(const Graph& g, Partition p, Best& best) {
  refine(g, p);
  std::size_t target = p.size();
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (p[c].size() > 1 && (target == p.size() || p[c].size() < p[target].size())) target = c;
  }
  if (target == p.size()) {
    std::vector<Vertex> order;
    for (const Cell& cell : p) order.push_back(cell.front());
    std::string code = adjacency_code(g, order);
    if (!best.found || code < best.code) best = {std::move(code), std::move(order), true};
    return;
  }
  for (Vertex v : p[target]) {
    Partition child;
    child.reserve(p.size() + 1);
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c != target) {
        child.push_back(p[c]);
        continue;
      }
      child.push_back({v});
      Cell rest;
      for (Vertex w : p[c]) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
    }
    search(g, std::move(child), best);
  }
}

}  // namespace

std::vector<Vertex> canonical_order(const Graph& g) {
  if (g.order() > kCanonicalOrderCap) {
    throw CapExceeded("canonical form limited to order " + std::to_string(kCanonicalOrderCap));
  }
  Partition start(1);
  for (Vertex v = 0; v < g.order(); ++v) start[0].push_back(v);
  Best best;
  search(g, std::move(start), best);
  return best.order;
}

Graph canonical_graph(const Graph& g) {
  const std::vector<Vertex> order = canonical_order(g);
  std::vector<Vertex> perm(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = i;
  return relabel(g, perm);
}

std::string canonical_key(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_key(a) == canonical_key(b);
}

std::vector<Graph> graph_census(std::size_t max_order, bool connected_only) {
  if (max_order > kCensusOrderCap) {
    throw CapExceeded("graph census limited to order " + std::to_string(kCensusOrderCap));
  }
  std::vector<Graph> out;
  if (max_order == 0) return out;
  std::vector<Graph> level{Graph(1)};
  out.push_back(level.front());
  for (std::size_t n = 2; n <= max_order; ++n) {
    std::map<std::string, Graph> seen;
    for (const Graph& parent : level) {
      const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
      for (std::uint64_t mask = connected_only ? 1 : 0; mask < subsets; ++mask) {
        std::vector<Edge> edges = parent.edges();
        for (Vertex v = 0; v + 1 < n; ++v) {
          if ((mask >> v) & 1U) edges.emplace_back(v, n - 1);
        }
        Graph child(n, edges);
        Graph canon = canonical_graph(child);
        seen.try_emplace(to_graph6(canon), std::move(canon));
      }
    }
    level.clear();
    for (auto& [key, graph] : seen) level.push_back(graph);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Graph random_graph(std::size_t order, std::uint64_t seed, std::uint32_t num, std::uint32_t den) {
  if (den == 0 || num > den) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) {
      if (rng() % den < num) edges.emplace_back(u, v);
    }
  }
  return Graph(order, edges);
}

}  // namespace zfort
