#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "zfort/graph.hpp"
#include "zfort/hypergraph.hpp"
#include "zfort/vertex_set.hpp"

namespace zfort::testing {

/// The 20 minimal forts of the Petersen graph as printed, in print order.
inline std::vector<VertexSet> printed_petersen_forts() {
  const std::vector<std::vector<Vertex>> raw{
      {0, 1, 3, 8}, {0, 1, 9, 7}, {0, 2, 3, 5}, {0, 2, 4, 7}, {0, 8, 2, 9}, {0, 3, 6, 7}, {0, 8, 4, 6},
      {0, 9, 5, 6}, {1, 2, 4, 9}, {8, 1, 2, 5}, {1, 3, 4, 6}, {1, 3, 5, 9}, {8, 1, 4, 7}, {1, 5, 6, 7},
      {9, 2, 3, 6}, {2, 4, 5, 6}, {8, 2, 6, 7}, {3, 4, 5, 7}, {8, 9, 3, 7}, {8, 9, 4, 5}};
  std::vector<VertexSet> out;
  for (const auto& r : raw) out.emplace_back(10, r);
  return out;
}

/// Fort test straight from the definition, no bit tricks.
inline bool fort_by_definition(const Graph& g, const VertexSet& f) {
  if (f.empty()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.contains(v)) continue;
    std::size_t hits = 0;
    for (Vertex w : f.members()) hits += g.adjacent(v, w) ? 1 : 0;
    if (hits == 1) return false;
  }
  return true;
}

/// Inclusion-minimal forts by testing every nonempty subset.
inline std::vector<VertexSet> brute_force_minimal_forts(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> forts;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (fort_by_definition(g, VertexSet::from_mask(n, m))) forts.push_back(m);
  }
  std::vector<VertexSet> out;
  for (std::uint64_t a : forts) {
    bool minimal = true;
    for (std::uint64_t b : forts) {
      if (b != a && (b & a) == b) minimal = false;
    }
    if (minimal) out.push_back(VertexSet::from_mask(n, a));
  }
  return out;
}

/// Z by brute force over all subsets in increasing size, closure by plain
/// repeated sweeps.
inline std::size_t brute_force_z(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(m));
    if (k >= best) continue;
    std::uint64_t filled = m;
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex u = 0; u < n; ++u) {
        if (!((filled >> u) & 1U)) continue;
        std::size_t unfilled = 0;
        Vertex last = 0;
        for (Vertex w = 0; w < n; ++w) {
          if (g.adjacent(u, w) && !((filled >> w) & 1U)) {
            ++unfilled;
            last = w;
          }
        }
        if (unfilled == 1) {
          filled |= std::uint64_t{1} << last;
          changed = true;
        }
      }
    }
    if (filled == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1)) best = k;
  }
  return best;
}

inline bool sets_equal_unordered(std::vector<VertexSet> a, std::vector<VertexSet> b) {
  if (a.size() != b.size()) return false;
  auto less = [](const VertexSet& x, const VertexSet& y) { return size_lex_less(x, y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

}  // namespace zfort::testing
