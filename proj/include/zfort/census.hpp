#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zfort/graph.hpp"

namespace zfort {

inline constexpr std::size_t kCanonicalOrderCap = 12;
inline constexpr std::size_t kCensusOrderCap = 8;

/// Relabeling that sends g to its canonical representative: new label i is
/// old vertex order[i]. Found by individualization and equitable refinement,
/// keeping the least adjacency code over all leaves of the search tree.
std::vector<Vertex> canonical_order(const Graph& g);

/// graph6 string of the canonical representative; equal iff isomorphic.
std::string canonical_key(const Graph& g);

Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class, for orders 1..max_order, in
/// order of (order, canonical key). Built by attaching a new vertex to every
/// vertex subset of each smaller representative; for connected graphs the
/// subset must be nonempty.
std::vector<Graph> graph_census(std::size_t max_order, bool connected_only);

/// G(n, p) with a seeded Mersenne Twister; p = num/den.
Graph random_graph(std::size_t order, std::uint64_t seed, std::uint32_t num = 1,
                   std::uint32_t den = 2);

}  // namespace zfort
