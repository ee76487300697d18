#include "zfort/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "zfort/errors.hpp"

namespace zfort {

Hypergraph::Hypergraph(std::size_t universe, std::vector<VertexSet> edges)
    : universe_(universe), edges_(std::move(edges)), vertices_(universe) {
  for (const auto& e : edges_) {
    if (e.universe() != universe) throw InputError("hyperedge over the wrong universe");
    if (e.empty()) throw InputError("hyperedges must be nonempty");
    vertices_ |= e;
  }
  std::sort(edges_.begin(), edges_.end(), size_lex_less);
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::size_t Hypergraph::degree(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](const VertexSet& e) { return e.contains(v); }));
}

std::size_t Hypergraph::max_degree() const {
  std::vector<std::size_t> deg(universe_, 0);
  for (const auto& e : edges_) e.for_each([&](Vertex v) { ++deg[v]; });
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::size_t Hypergraph::min_edge_size() const {
  return edges_.empty() ? 0 : edges_.front().count();
}

std::optional<std::size_t> Hypergraph::uniform_k() const {
  if (edges_.empty()) return std::nullopt;
  const std::size_t k = edges_.front().count();
  if (edges_.back().count() != k) return std::nullopt;
  return k;
}

std::optional<std::size_t> Hypergraph::regular_d() const {
  if (edges_.empty()) return std::nullopt;
  std::vector<std::size_t> deg(universe_, 0);
  for (const auto& e : edges_) e.for_each([&](Vertex v) { ++deg[v]; });
  std::optional<std::size_t> d;
  bool regular = true;
  vertices_.for_each([&](Vertex v) {
    if (!d) d = deg[v];
    if (deg[v] != *d) regular = false;
  });
  return regular ? d : std::nullopt;
}

bool Hypergraph::is_simple() const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (i != j && edges_[i].is_subset_of(edges_[j]) && !(edges_[i] == edges_[j])) return false;
    }
  }
  return true;
}

Hypergraph hypergraph_cross_product(const Hypergraph& h1, const Hypergraph& h2,
                                    std::size_t universe_cap) {
  if (h1.empty() || h2.empty()) throw InputError("cross product needs nonempty hypergraphs");
  const std::size_t universe = h1.universe() * h2.universe();
  if (universe > universe_cap || universe > VertexSet::kMaxUniverse) {
    throw CapExceeded("hypergraph cross product universe " + std::to_string(universe) +
                      " exceeds the cap");
  }
  std::vector<VertexSet> edges;
  edges.reserve(h1.edge_count() * h2.edge_count());
  for (const auto& e1 : h1.edges()) {
    for (const auto& e2 : h2.edges()) {
      VertexSet e(universe);
      e1.for_each([&](Vertex a) { e2.for_each([&](Vertex b) { e.insert(a * h2.universe() + b); }); });
      edges.push_back(e);
    }
  }
  return Hypergraph(universe, std::move(edges));
}

}  // namespace zfort
