#include "zfort/forts.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "zfort/errors.hpp"
#include "zfort/forcing.hpp"

namespace zfort {

bool is_fort(const Graph& g, const VertexSet& f) {
  if (f.empty()) throw InputError("a fort must be nonempty");
  bool ok = true;
  for (Vertex v = 0; v < g.order() && ok; ++v) {
    if (f.contains(v)) continue;
    ok = (g.neighbors(v) & f).count() != 1;
  }
  return ok;
}

bool is_fort_mask(std::span<const std::uint64_t> adjacency, std::uint64_t f) {
  // ones: vertices with >= 1 neighbor in f; twos: >= 2 neighbors in f.
  std::uint64_t ones = 0;
  std::uint64_t twos = 0;
  for (std::uint64_t scan = f; scan != 0; scan &= scan - 1) {
    const std::uint64_t nb = adjacency[static_cast<std::size_t>(std::countr_zero(scan))];
    twos |= ones & nb;
    ones |= nb;
  }
  return (ones & ~twos & ~f) == 0;
}

bool fort_complement_check(const Graph& g, const VertexSet& f) {
  if (f.empty()) throw InputError("a fort must be nonempty");
  return closure(g, f.complement()).forces.empty();
}

namespace {

std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

Hypergraph minimal_forts(const Graph& g, const FortOptions& options) {
  const std::size_t n = g.order();
  const std::size_t cap = std::min(options.cap, kHardEnumerationCap);
  if (n > cap) {
    throw CapExceeded("minimal fort enumeration limited to order " + std::to_string(cap) +
                      ", got " + std::to_string(n));
  }
  const auto adj = g.masks();
  const std::uint64_t limit = std::uint64_t{1} << n;
  const std::size_t workers = std::max<std::size_t>(1, options.workers);

  std::vector<std::uint64_t> found;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::vector<std::uint64_t> smaller = found;
    auto scan = [&](std::size_t offset, std::vector<std::uint64_t>& out) {
      std::size_t index = 0;
      for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;
           s = next_same_popcount(s), ++index) {
        if (index % workers != offset) continue;
        if (!is_fort_mask(adj, s)) continue;
        const bool contains_smaller = std::any_of(
            smaller.begin(), smaller.end(), [&](std::uint64_t m) { return (m & ~s) == 0; });
        if (!contains_smaller) out.push_back(s);
      }
    };
    std::vector<std::vector<std::uint64_t>> parts(workers);
    if (workers == 1) {
      scan(0, parts[0]);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w, std::ref(parts[w]));
      for (auto& t : pool) t.join();
    }
    for (const auto& part : parts) found.insert(found.end(), part.begin(), part.end());
  }

  std::vector<VertexSet> edges;
  edges.reserve(found.size());
  for (std::uint64_t m : found) edges.push_back(VertexSet::from_mask(n, m));
  return Hypergraph(n, std::move(edges));
}

std::vector<Edge> twin_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex w = u + 1; w < g.order(); ++w) {
      VertexSet nu = g.neighbors(u);
      VertexSet nw = g.neighbors(w);
      nu.erase(w);
      nw.erase(u);
      if (nu == nw) out.emplace_back(u, w);
    }
  }
  return out;
}

namespace {

bool all_or_nothing(const Graph& g, const Edge& a, const Edge& b) {
  const int edges = static_cast<int>(g.adjacent(a.first, b.first)) +
                    static_cast<int>(g.adjacent(a.first, b.second)) +
                    static_cast<int>(g.adjacent(a.second, b.first)) +
                    static_cast<int>(g.adjacent(a.second, b.second));
  return edges == 0 || edges == 4;
}

bool extend_pairing(const Graph& g, const std::vector<std::vector<Vertex>>& partners,
                    VertexSet& used, std::vector<Edge>& chosen) {
  const Vertex x = used.complement().first();
  if (x >= g.order()) return true;
  for (Vertex y : partners[x]) {
    if (used.contains(y)) continue;
    const Edge block{x, y};
    if (!std::all_of(chosen.begin(), chosen.end(),
                     [&](const Edge& other) { return all_or_nothing(g, block, other); })) {
      continue;
    }
    used.insert(x);
    used.insert(y);
    chosen.push_back(block);
    if (extend_pairing(g, partners, used, chosen)) return true;
    chosen.pop_back();
    used.erase(x);
    used.erase(y);
  }
  return false;
}

}  // namespace

std::optional<std::vector<Edge>> ft_half_partition_check(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) throw InputError("graph has an isolated vertex " + std::to_string(v));
  }
  if (g.order() % 2 != 0) return std::nullopt;
  // A pair that is all-or-nothing against every other pair is a twin pair, so
  // only twin pairs need to be tried.
  std::vector<std::vector<Vertex>> partners(g.order());
  for (const auto& [u, w] : twin_pairs(g)) {
    partners[u].push_back(w);
    partners[w].push_back(u);
  }
  VertexSet used(g.order());
  std::vector<Edge> chosen;
  if (extend_pairing(g, partners, used, chosen)) return chosen;
  return std::nullopt;
}

}  // namespace zfort
