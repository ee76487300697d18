#pragma once

#include <string>
#include <vector>

#include "zfort/graph.hpp"

namespace zfort::family {

/// Vertices 0..n-1 in path order.
Graph path(long n);
/// Vertices 0..n-1 in cycle order, n >= 3.
Graph cycle(long n);
Graph complete(long n);
Graph empty(long n);
/// Parts {0..p-1} and {p..p+q-1}.
Graph complete_bipartite(long p, long q);
/// Outer cycle 0-1-2-3-4, spokes i-(i+5), inner pentagram 5-7-9-6-8-5.
Graph petersen();
/// r K_2 joined to K_1; the hub is the last vertex.
Graph friendship(long r);

/// Chain of cycles, each new cycle glued along one edge of the previous one.
///
/// Cycle 1 is 0..L1-1 in order. A later cycle of length L glued along (a, b)
/// adds fresh vertices n1..n_{L-2} closing a-n1-...-n_{L-2}-b-a. The edge used
/// by the next cycle is the last edge between fresh vertices of the current
/// cycle, or (n1, b) for a triangle; both have an end of degree 2.
Graph polygonal_path(const std::vector<long>& cycle_lengths);

/// Spine path 0..spine-1; spine vertex i carries two pendant paths whose
/// lengths are legs[2i], legs[2i+1] (a two-element list is reused for every
/// spine vertex). Leg vertices follow the spine, in spine order, each leg
/// listed from the vertex next to the spine outward.
Graph double_branch_tree(long spine, const std::vector<long>& legs);

/// s K_clique joined to K_join. Clique copy j occupies j*clique..; the joined
/// clique comes last. sK_3 v K_1 and sK_2 v K_2 are (s,3,1) and (s,2,2).
Graph join_clique_union(long s, long clique, long join_size);

/// Dispatch by name. Names: path n, cycle n, complete n, empty n,
/// complete_bipartite p q, petersen, friendship r, polygonal_path L1 L2 ...,
/// double_branch_tree spine leg..., join_clique_union s clique join.
Graph make(const std::string& name, const std::vector<long>& params);

/// Names accepted by make().
const std::vector<std::string>& names();

}  // namespace zfort::family
