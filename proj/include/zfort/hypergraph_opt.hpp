#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zfort/forcing.hpp"
#include "zfort/forts.hpp"
#include "zfort/graph.hpp"
#include "zfort/hypergraph.hpp"
#include "zfort/lp.hpp"
#include "zfort/rational.hpp"

namespace zfort {

struct TransversalResult {
  std::size_t size = 0;
  VertexSet set;
};

struct MatchingResult {
  std::size_t size = 0;
  std::vector<VertexSet> edges;
};

/// Weight per label of the host universe (zero off V(H)).
struct FractionalTransversal {
  Rational value;
  std::vector<Rational> weights;
};

/// Weight per edge, in h.edges() order.
struct FractionalMatching {
  Rational value;
  std::vector<Rational> weights;
};

/// Minimum hitting set by branch and bound.
///
/// Branches on the uncovered edge with the fewest still-allowed vertices
/// (lexicographically least on ties), trying its vertices in ascending order and
/// excluding each tried vertex from later siblings. The search starts from a
/// greedy incumbent and stops as soon as it meets ceil(tau*).
TransversalResult transversal_number(const Hypergraph& h);
/// Same, with tau*(h) already known.
TransversalResult transversal_number(const Hypergraph& h, const Rational& tau_star);

/// Maximum set of pairwise disjoint edges; stops at floor(mu*).
MatchingResult matching_number(const Hypergraph& h);
MatchingResult matching_number(const Hypergraph& h, const Rational& mu_star);

/// LP: minimize sum x_v subject to sum_{v in e} x_v >= 1, 0 <= x_v <= 1.
lp::LinearProgram transversal_lp(const Hypergraph& h);
/// LP: maximize sum x_e subject to sum_{e ni v} x_e <= 1, x_e >= 0 (one row
/// per vertex of V(h), ascending; x_e <= 1 is implied).
lp::LinearProgram matching_lp(const Hypergraph& h);

/// Above this many edges the transversal LP is not solved directly.
inline constexpr std::size_t kDirectTransversalLpEdgeLimit = 400;

/// tau*(h) with an optimal weighting. Up to kDirectTransversalLpEdgeLimit
/// edges the transversal LP itself is solved; beyond that the weighting is
/// read off the matching LP's vertex multipliers. Either way the weighting is
/// checked by substitution and its total must equal the separately solved
/// fractional matching value, which certifies optimality by weak duality.
/// The optimal fractional matching is stored in `matching` when given.
FractionalTransversal fractional_transversal(const Hypergraph& h,
                                             FractionalMatching* matching = nullptr);
FractionalMatching fractional_matching(const Hypergraph& h);

/// |V(h)| - tau(h).
std::size_t independence_number(const Hypergraph& h);
/// Largest subset of V(h) containing no edge, by exhaustive search.
/// Requires |V(h)| <= 24.
std::size_t independence_number_direct(const Hypergraph& h);

/// True when the set meets every edge.
bool is_transversal(const Hypergraph& h, const VertexSet& s);
/// True when the weights give every edge total weight >= 1.
bool is_fractional_transversal(const Hypergraph& h, const std::vector<Rational>& weights);
/// True when every vertex carries total edge weight <= 1.
bool is_fractional_matching(const Hypergraph& h, const std::vector<Rational>& weights);

struct HypergraphInvariants {
  std::size_t tau = 0;
  std::size_t mu = 0;
  Rational tau_star;
  Rational mu_star;
  std::size_t alpha = 0;
  std::optional<std::size_t> uniform_k;
  std::optional<std::size_t> regular_d;
  std::size_t edge_count = 0;
  std::size_t max_degree = 0;
  std::size_t vertex_count = 0;
  std::size_t min_edge_size = 0;

  VertexSet transversal;
  std::vector<VertexSet> matching;
  std::vector<Rational> vertex_weights;
  std::vector<Rational> edge_weights;
};

/// Every invariant of a hypergraph, each with its certificate re-verified.
HypergraphInvariants hypergraph_invariants(const Hypergraph& h);

struct InvariantOptions {
  FortOptions forts;
  SearchOptions search;
  /// Cross-check tau(F_g) against the direct zero forcing search.
  bool check_direct = true;
};

struct GraphInvariants {
  Hypergraph forts;
  HypergraphInvariants values;
  std::size_t zero_forcing() const { return values.tau; }
  std::size_t fort_number() const { return values.mu; }
  const Rational& fractional_zero_forcing() const { return values.tau_star; }
};

/// Builds the fort hypergraph of g and all its invariants. With check_direct,
/// throws std::logic_error if tau(F_g) disagrees with the direct search.
GraphInvariants graph_invariants(const Graph& g, const InvariantOptions& options = {});

}  // namespace zfort
