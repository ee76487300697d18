#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "zfort/vertex_set.hpp"

namespace zfort {

using Edge = std::pair<Vertex, Vertex>;

/// Default cap on the order of any graph built by a binary operation.
inline constexpr std::size_t kDefaultOrderCap = 1024;

/// Simple undirected graph on the labels 0..order-1, adjacency held as one
/// VertexSet per vertex. Immutable once built.
class Graph {
 public:
  /// Edgeless graph; order must be at least 1.
  explicit Graph(std::size_t order);
  /// Throws InputError on self-loops, duplicate edges, or labels >= order.
  Graph(std::size_t order, const std::vector<Edge>& edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).count(); }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).contains(v); }
  bool has_edge() const { return edge_count_ > 0; }
  std::size_t max_degree() const;
  VertexSet vertex_set() const { return VertexSet::full(order()); }

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;

  /// Adjacency as 64-bit masks; requires order() <= 64.
  std::vector<std::uint64_t> masks() const;

  /// Connected components, each as a vertex set, ordered by smallest member.
  std::vector<VertexSet> components() const;
  bool is_connected() const { return components().size() == 1; }

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Subgraph induced on `keep`, relabeled in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Vertex (u, u') of g x h is encoded as u * h.order() + u'.
inline Vertex product_vertex(Vertex u, Vertex u_prime, std::size_t h_order) {
  return u * h_order + u_prime;
}

Graph cartesian_product(const Graph& g, const Graph& h, std::size_t order_cap = kDefaultOrderCap);

/// g's vertices keep their labels; the copy of h hung on vertex i occupies
/// g.order() + i*h.order() .. g.order() + (i+1)*h.order() - 1.
Graph corona(const Graph& g, const Graph& h, std::size_t order_cap = kDefaultOrderCap);

/// h's vertices are relabeled after g's; join adds every cross edge.
Graph join(const Graph& g, const Graph& h, std::size_t order_cap = kDefaultOrderCap);
Graph disjoint_union(const Graph& g, const Graph& h, std::size_t order_cap = kDefaultOrderCap);

/// Applies a relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace zfort
