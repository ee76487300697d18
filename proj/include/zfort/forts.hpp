#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zfort/graph.hpp"
#include "zfort/hypergraph.hpp"
#include "zfort/vertex_set.hpp"

namespace zfort {

inline constexpr std::size_t kDefaultEnumerationCap = 20;
inline constexpr std::size_t kHardEnumerationCap = 24;

/// F is a fort when no vertex outside F has exactly one neighbor in F.
/// Throws InputError for an empty set.
bool is_fort(const Graph& g, const VertexSet& f);

/// Bitmask form for order <= 64; f must be nonzero.
bool is_fort_mask(std::span<const std::uint64_t> adjacency, std::uint64_t f);

/// Independent test: filling V(g) - f admits no force at all.
bool fort_complement_check(const Graph& g, const VertexSet& f);

struct FortOptions {
  /// Orders above min(cap, kHardEnumerationCap) are refused.
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t workers = 1;
};

/// The fort hypergraph: every inclusion-minimal fort, sorted by (size, lex).
/// Subsets are scanned by increasing cardinality and a fort is kept when it
/// contains no minimal fort found at a smaller cardinality.
Hypergraph minimal_forts(const Graph& g, const FortOptions& options = {});

/// Pairs u < w with N(u) - {w} == N(w) - {u}; these are exactly the 2-forts.
std::vector<Edge> twin_pairs(const Graph& g);

/// Searches for a partition of V(g) into pairs such that between any two pairs
/// either all four or none of the cross edges are present; returns the pairs
/// when one exists. Throws InputError when g has an isolated vertex.
std::optional<std::vector<Edge>> ft_half_partition_check(const Graph& g);

}  // namespace zfort
