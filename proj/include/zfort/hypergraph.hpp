#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zfort/vertex_set.hpp"

namespace zfort {

/// Hypergraph whose edges are nonempty subsets of 0..universe-1.
///
/// The vertex set is the union of the edges. Edges are deduplicated and kept
/// sorted by (size, lexicographic).
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t universe, std::vector<VertexSet> edges);

  std::size_t universe() const { return universe_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const VertexSet& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.count(); }
  bool empty() const { return edges_.empty(); }

  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;
  std::size_t min_edge_size() const;
  /// k when every edge has k vertices.
  std::optional<std::size_t> uniform_k() const;
  /// d when every vertex of V(H) lies in exactly d edges.
  std::optional<std::size_t> regular_d() const;
  /// No edge is a proper subset of another.
  bool is_simple() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<VertexSet> edges_;
  VertexSet vertices_;
};

/// Edges e1 x e2 over pairs encoded as a * h2.universe() + b.
Hypergraph hypergraph_cross_product(const Hypergraph& h1, const Hypergraph& h2,
                                    std::size_t universe_cap = VertexSet::kMaxUniverse);

}  // namespace zfort
