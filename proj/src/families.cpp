#include "zfort/families.hpp"

#include <string>

#include "zfort/errors.hpp"

namespace zfort::family {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

std::size_t checked_order(long n, long minimum, const char* name) {
  require(n >= minimum, std::string(name) + " needs n >= " + std::to_string(minimum) + ", got " +
                            std::to_string(n));
  require(n <= static_cast<long>(VertexSet::kMaxUniverse),
          std::string(name) + " order too large: " + std::to_string(n));
  return static_cast<std::size_t>(n);
}

}  // namespace

Graph path(long n) {
  const std::size_t order = checked_order(n, 1, "path");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < order; ++v) edges.emplace_back(v, v + 1);
  return Graph(order, edges);
}

Graph cycle(long n) {
  const std::size_t order = checked_order(n, 3, "cycle");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < order; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, order - 1);
  return Graph(order, edges);
}

Graph complete(long n) {
  const std::size_t order = checked_order(n, 1, "complete");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  }
  return Graph(order, edges);
}

Graph empty(long n) { return Graph(checked_order(n, 1, "empty")); }

Graph complete_bipartite(long p, long q) {
  require(p >= 1 && q >= 1, "complete_bipartite needs p, q >= 1");
  const std::size_t a = static_cast<std::size_t>(p);
  const std::size_t order = checked_order(p + q, 2, "complete_bipartite");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < order; ++v) edges.emplace_back(u, v);
  }
  return Graph(order, edges);
}

Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph friendship(long r) {
  require(r >= 1, "friendship needs r >= 1");
  return join_clique_union(r, 2, 1);
}

Graph polygonal_path(const std::vector<long>& cycle_lengths) {
  require(!cycle_lengths.empty(), "polygonal_path needs at least one cycle length");
  long order = 0;
  for (std::size_t i = 0; i < cycle_lengths.size(); ++i) {
    require(cycle_lengths[i] >= 3, "polygonal_path cycle lengths must be >= 3");
    order += i == 0 ? cycle_lengths[i] : cycle_lengths[i] - 2;
  }
  checked_order(order, 3, "polygonal_path");

  std::vector<Edge> edges;
  const auto first = static_cast<std::size_t>(cycle_lengths[0]);
  for (Vertex v = 0; v + 1 < first; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, first - 1);
  Edge glue{first - 2, first - 1};
  Vertex next = first;

  for (std::size_t i = 1; i < cycle_lengths.size(); ++i) {
    const auto fresh = static_cast<std::size_t>(cycle_lengths[i]) - 2;
    const auto [a, b] = glue;
    Vertex prev = a;
    for (std::size_t j = 0; j < fresh; ++j) {
      edges.emplace_back(prev, next + j);
      prev = next + j;
    }
    edges.emplace_back(prev, b);
    glue = fresh >= 2 ? Edge{next + fresh - 2, next + fresh - 1} : Edge{next, b};
    next += fresh;
  }
  return Graph(static_cast<std::size_t>(order), edges);
}

Graph double_branch_tree(long spine, const std::vector<long>& legs) {
  require(spine >= 1, "double_branch_tree needs spine >= 1");
  std::vector<long> lengths;
  if (legs.size() == 2) {
    for (long i = 0; i < spine; ++i) lengths.insert(lengths.end(), legs.begin(), legs.end());
  } else {
    require(legs.size() == static_cast<std::size_t>(2 * spine),
            "double_branch_tree needs 2 leg lengths or 2 per spine vertex");
    lengths = legs;
  }
  long order = spine;
  for (long len : lengths) {
    require(len >= 1, "double_branch_tree leg lengths must be >= 1");
    order += len;
  }
  checked_order(order, 3, "double_branch_tree");

  std::vector<Edge> edges;
  const auto spine_n = static_cast<std::size_t>(spine);
  for (Vertex v = 0; v + 1 < spine_n; ++v) edges.emplace_back(v, v + 1);
  Vertex next = spine_n;
  for (std::size_t leg = 0; leg < lengths.size(); ++leg) {
    Vertex prev = leg / 2;
    for (long j = 0; j < lengths[leg]; ++j) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(static_cast<std::size_t>(order), edges);
}

Graph join_clique_union(long s, long clique, long join_size) {
  require(s >= 1 && clique >= 1 && join_size >= 1,
          "join_clique_union needs s, clique, join >= 1");
  Graph cliques = complete(clique);
  for (long i = 1; i < s; ++i) cliques = disjoint_union(cliques, complete(clique));
  return join(cliques, complete(join_size));
}

namespace {

long param(const std::vector<long>& params, std::size_t i, const std::string& name) {
  if (i >= params.size()) {
    throw InputError("family " + name + " needs at least " + std::to_string(i + 1) +
                     " parameter(s)");
  }
  return params[i];
}

void expect_count(const std::vector<long>& params, std::size_t n, const std::string& name) {
  if (params.size() != n) {
    throw InputError("family " + name + " takes " + std::to_string(n) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "path",     "cycle",          "complete",           "empty",
      "complete_bipartite", "petersen", "friendship", "polygonal_path",
      "double_branch_tree", "join_clique_union"};
  return kNames;
}

Graph make(const std::string& name, const std::vector<long>& params) {
  if (name == "path" || name == "cycle" || name == "complete" || name == "empty" ||
      name == "friendship") {
    expect_count(params, 1, name);
    const long n = params[0];
    if (name == "path") return path(n);
    if (name == "cycle") return cycle(n);
    if (name == "complete") return complete(n);
    if (name == "empty") return empty(n);
    return friendship(n);
  }
  if (name == "complete_bipartite") {
    expect_count(params, 2, name);
    return complete_bipartite(params[0], params[1]);
  }
  if (name == "petersen") {
    expect_count(params, 0, name);
    return petersen();
  }
  if (name == "polygonal_path") return polygonal_path(params);
  if (name == "double_branch_tree") {
    const long spine = param(params, 0, name);
    return double_branch_tree(spine, std::vector<long>(params.begin() + 1, params.end()));
  }
  if (name == "join_clique_union") {
    expect_count(params, 3, name);
    return join_clique_union(params[0], params[1], params[2]);
  }
  throw InputError("unknown graph family: " + name);
}

}  // namespace zfort::family
