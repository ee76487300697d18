#include "zfort/graph.hpp"

#include <algorithm>
#include <string>

#include "zfort/errors.hpp"

namespace zfort {

namespace {

void check_order_cap(std::size_t order, std::size_t cap, const char* what) {
  if (order > cap) {
    throw CapExceeded(std::string(what) + " would have order " + std::to_string(order) +
                      ", above the cap of " + std::to_string(cap));
  }
}

}  // namespace

Graph::Graph(std::size_t order) {
  if (order == 0) throw InputError("graph order must be at least 1");
  if (order > VertexSet::kMaxUniverse) {
    throw CapExceeded("graph order " + std::to_string(order) + " exceeds " +
                      std::to_string(VertexSet::kMaxUniverse));
  }
  adjacency_.assign(order, VertexSet(order));
}

Graph::Graph(std::size_t order, const std::vector<Edge>& edges) : Graph(order) {
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw InputError("edge " + std::to_string(u) + " " + std::to_string(v) +
                       " references a vertex >= order " + std::to_string(order));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (adjacency_[u].contains(v)) {
      throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    ++edge_count_;
  }
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.count());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    adjacency_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> degrees;
  degrees.reserve(order());
  for (const auto& row : adjacency_) degrees.push_back(row.count());
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::vector<std::uint64_t> Graph::masks() const {
  if (order() > 64) throw CapExceeded("bitmask adjacency requires order <= 64");
  std::vector<std::uint64_t> out;
  out.reserve(order());
  for (const auto& row : adjacency_) out.push_back(row.mask());
  return out;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet seen(order());
  for (Vertex start = 0; start < order(); ++start) {
    if (seen.contains(start)) continue;
    VertexSet comp(order());
    comp.insert(start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(order());
      frontier.for_each([&](Vertex v) { next |= adjacency_[v]; });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> index(g.order(), g.order());
  std::size_t next = 0;
  keep.for_each([&](Vertex v) { index[v] = next++; });
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(index[u], index[v]);
  }
  return Graph(next, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h, std::size_t order_cap) {
  const std::size_t n = g.order() * h.order();
  check_order_cap(n, order_cap, "Cartesian product");
  std::vector<Edge> edges;
  edges.reserve(g.order() * h.edge_count() + h.order() * g.edge_count());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (const auto& [a, b] : h.edges()) {
      edges.emplace_back(product_vertex(u, a, h.order()), product_vertex(u, b, h.order()));
    }
  }
  for (const auto& [a, b] : g.edges()) {
    for (Vertex u = 0; u < h.order(); ++u) {
      edges.emplace_back(product_vertex(a, u, h.order()), product_vertex(b, u, h.order()));
    }
  }
  return Graph(n, edges);
}

Graph corona(const Graph& g, const Graph& h, std::size_t order_cap) {
  const std::size_t n = g.order() * (1 + h.order());
  check_order_cap(n, order_cap, "corona");
  std::vector<Edge> edges = g.edges();
  for (Vertex i = 0; i < g.order(); ++i) {
    const Vertex base = g.order() + i * h.order();
    for (const auto& [a, b] : h.edges()) edges.emplace_back(base + a, base + b);
    for (Vertex a = 0; a < h.order(); ++a) edges.emplace_back(i, base + a);
  }
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h, std::size_t order_cap) {
  const std::size_t n = g.order() + h.order();
  check_order_cap(n, order_cap, "disjoint union");
  std::vector<Edge> edges = g.edges();
  for (const auto& [a, b] : h.edges()) edges.emplace_back(g.order() + a, g.order() + b);
  return Graph(n, edges);
}

Graph join(const Graph& g, const Graph& h, std::size_t order_cap) {
  const std::size_t n = g.order() + h.order();
  check_order_cap(n, order_cap, "join");
  std::vector<Edge> edges = g.edges();
  for (const auto& [a, b] : h.edges()) edges.emplace_back(g.order() + a, g.order() + b);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex a = 0; a < h.order(); ++a) edges.emplace_back(u, g.order() + a);
  }
  return Graph(n, edges);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw InputError("relabeling has the wrong length");
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

}  // namespace zfort
