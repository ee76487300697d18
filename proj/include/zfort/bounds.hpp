#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zfort/graph.hpp"
#include "zfort/hypergraph_opt.hpp"
#include "zfort/rational.hpp"
#include "zfort/star_clique.hpp"

namespace zfort {

enum class Relation { kLessEqual, kGreaterEqual, kEqual, kGreater };

/// "<=", ">=", "=", ">"
const char* to_string(Relation relation);

/// One evaluated inequality "left relation right".
struct BoundReport {
  std::string bound;
  std::string citation;
  Relation relation = Relation::kEqual;
  Rational left;
  Rational right;
  bool holds = true;
  bool sharp = false;
  /// False when the bound's hypotheses fail (e.g. a graph without edges);
  /// such a report neither holds nor fails and left/right are zero.
  bool applicable = true;
  /// Conjectured rather than proven; a failure is a counterexample.
  bool conjecture = false;
  std::vector<std::string> inputs;
};

BoundReport make_report(std::string bound, std::string citation, Relation relation, Rational left,
                        Rational right, std::vector<std::string> inputs);
BoundReport not_applicable(std::string bound, std::string citation, Relation relation,
                           std::vector<std::string> inputs);

/// A graph with the descriptor used in reports.
struct NamedGraph {
  std::string name;
  Graph graph;
};

struct BatteryOptions {
  InvariantOptions invariants;
  /// Largest product order accepted.
  std::size_t product_cap = kDefaultEnumerationCap;
};

/// Bounds (a)-(l) relating g, h and g x h, sorted by id. Link i of the
/// hypergraph product chain on F_g, F_h is reported as "j<i>". Bound (i) uses
/// a certified lower bound L <= ln(Delta(F_h)) so that its right side
/// 1 + Z(g)Z(h)/(1 + L) is never below the true one.
std::vector<BoundReport> product_bound_battery(const NamedGraph& g, const NamedGraph& h,
                                               const BatteryOptions& options = {});

/// Checks on one graph's invariants, ids "<prefix>/<check>": duality
/// (tau* = mu*), chain_ft (ft <= Z*), chain_z (Z* <= Z), lower (m/Delta <= Z*)
/// and upper (Z* <= n'/k), all over F_g.
std::vector<BoundReport> consistency_reports(const std::string& prefix, const std::string& input,
                                             const HypergraphInvariants& values);

/// One "=" report per quantity (ft, Z*, Z) for every family row over the
/// built-in parameter grids, followed by the row's consistency reports.
std::vector<BoundReport> verify_table1(const InvariantOptions& options = {});

struct OracleOptions {
  std::size_t max_order = 7;
  std::size_t random_count = 200;
  std::size_t max_random_order = 10;
  std::uint64_t seed = 1;
  InvariantOptions invariants;
};

/// tau(F_g) against the direct zero forcing search ("oracle/<g6>/tau") plus
/// the consistency reports, over every connected graph of order <= max_order
/// and random_count seeded random graphs of order 1..max_random_order.
std::vector<BoundReport> oracle_sweep(const OracleOptions& options = {});

/// The diagonals D_k = {(i, i+k mod m)} of C_m x C_m, k = 0..m-1.
std::vector<VertexSet> diagonal_forts(std::size_t m);

/// m odd, 3 <= m <= 7: checks every diagonal is a fort and that they are
/// pairwise disjoint; reports m (when all checks pass, else the number of
/// valid pairwise disjoint diagonals) against ft(C_m)^2.
BoundReport diagonal_forts_check(std::size_t m);

struct StarCliqueCheck {
  StarCliquePath path;
  /// Z(G) against sum Z(block) - k + 1.
  BoundReport z_formula;
  /// Z(K_r x G) against (r-1)Z(G) + 1, one per requested r.
  std::vector<BoundReport> product_formula;
};

inline constexpr std::size_t kStarCliqueProductCap = 24;

/// Direct zero forcing searches only. A product above `product_cap` vertices
/// gets a not-applicable report.
StarCliqueCheck star_clique_verify(const StarCliqueSpec& spec, const std::vector<std::size_t>& rs = {2, 3},
                                   std::size_t product_cap = kStarCliqueProductCap,
                                   std::size_t workers = 1);

/// Every spec with at most max_blocks blocks and sizes up to max_size.
std::vector<StarCliqueCheck> star_clique_suite(std::size_t max_blocks = 3, std::size_t max_size = 4,
                                               const std::vector<std::size_t>& rs = {2, 3},
                                               std::size_t product_cap = kStarCliqueProductCap,
                                               std::size_t workers = 1);

struct ConverseCandidate {
  Graph graph;
  std::size_t z = 0;
  std::size_t z_product = 0;
  bool star_clique = false;
};

inline constexpr std::size_t kConverseOrderCap = 7;

/// Connected graphs of order <= max_order (<= 7) with Z(K_2 x G) = Z(G) + 1,
/// each flagged by the star-clique recognizer.
std::vector<ConverseCandidate> converse_scan(std::size_t max_order, std::size_t workers = 1);
/// Same scan over a supplied census; disconnected graphs are skipped.
std::vector<ConverseCandidate> converse_scan(const std::vector<Graph>& census, std::size_t workers = 1);

/// Family checks: Z(P_s x P_s) = s against tau(F x F) + 1 = 2 for s = 3..5;
/// Z*(C_{2k+1}) > (ft + Z)/2 for k = 2, 3; ft = Z* = Z = spine for double
/// branch trees (spine <= 4, legs <= 3). Even polygonal paths are rows of
/// verify_table1.
std::vector<BoundReport> verify_families(const InvariantOptions& options = {});

/// Checks ft = Z* = Z = spine on one double branch tree. Trees beyond the
/// enumeration cap are certified by a direct Z search plus the disjoint forts
/// made of each spine vertex's two legs.
std::vector<BoundReport> double_branch_tree_check(std::size_t spine, const std::vector<long>& legs,
                                                  const InvariantOptions& options = {});

}  // namespace zfort
