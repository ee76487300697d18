#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "zfort/graph.hpp"
#include "zfort/vertex_set.hpp"

namespace zfort {

/// One application of the color change rule: `forcer` is filled and `forced`
/// is its only unfilled neighbor.
struct Force {
  Vertex forcer;
  Vertex forced;
  friend bool operator==(const Force&, const Force&) = default;
};

struct ForcingTrace {
  VertexSet initial;
  std::vector<Force> forces;
  VertexSet final_set;
};

/// Runs the color change rule to exhaustion. The witness always applies the
/// force whose forcer has the smallest label among those currently able to
/// force; the final set does not depend on that choice.
ForcingTrace closure(const Graph& g, const VertexSet& filled);

/// Final set only.
VertexSet closure_set(const Graph& g, const VertexSet& filled);

/// Bitmask closure for graphs of order <= 64.
std::uint64_t closure_mask(std::span<const std::uint64_t> adjacency, std::uint64_t filled);

bool is_zero_forcing_set(const Graph& g, const VertexSet& s);

/// Re-applies every recorded force, checking the rule at each step and that
/// the final set is the initial set plus the forced vertices.
bool replay_trace(const Graph& g, const ForcingTrace& trace);

struct SearchOptions {
  std::size_t cap = 20;
  std::size_t workers = 1;
};

struct ZeroForcingResult {
  std::size_t number = 0;
  VertexSet set;
};

/// Z(g) by testing k-subsets for k = 0, 1, 2, ... in lexicographic order; the
/// returned set is the lexicographically least minimum zero forcing set,
/// whatever the worker count. Throws CapExceeded when order > options.cap.
ZeroForcingResult zero_forcing_number_direct(const Graph& g, const SearchOptions& options = {});

/// Largest number of blocks in a partition of V(g) such that no block's
/// complement is a zero forcing set. Order <= 10.
std::size_t failed_partition_number(const Graph& g);

inline constexpr std::size_t kFailedPartitionCap = 10;

}  // namespace zfort
