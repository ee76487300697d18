#pragma once

#include <cstddef>
#include <vector>

#include "zfort/graph.hpp"
#include "zfort/rational.hpp"
#include "zfort/vertex_set.hpp"

namespace zfort {

/// Square rational matrix, row-major.
struct PatternMatrix {
  std::size_t order = 0;
  std::vector<std::vector<Rational>> entries;
};

/// A with off-diagonal support E(g) and A v_F = 0. Row u: neighbors outside F
/// get 1. For u outside F with k >= 2 neighbors in F, those neighbors get 1
/// except the highest-labeled one, which gets -(k-1). For u in F, its
/// F-neighbors get 1 and the diagonal is -|N(u) & F|. Other diagonals are 1.
/// Throws InputError when f is not a fort.
PatternMatrix fort_null_matrix(const Graph& g, const VertexSet& f);

/// Column j comes from fort_null_matrix(g, F_i) when j is in F_i, and from the
/// last fort's matrix when j is in no fort; so A v_i = 0 for every i.
/// Throws InputError on an empty list, a non-fort, or overlapping forts.
PatternMatrix disjoint_forts_witness(const Graph& g, const std::vector<VertexSet>& forts);

/// Rank by Gaussian elimination over the rationals, taking the first nonzero
/// entry in each column as pivot.
std::size_t exact_rank(std::vector<std::vector<Rational>> rows);

/// order - rank.
std::size_t exact_nullity(const PatternMatrix& m);

/// Off-diagonal entry (i, j) is nonzero exactly when ij is an edge of g.
bool has_graph_pattern(const PatternMatrix& m, const Graph& g);

/// A v = 0 for the 0/1 incidence vector of s.
bool annihilates(const PatternMatrix& m, const VertexSet& s);

}  // namespace zfort
