#include "zfort/forcing.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <optional>
#include <string>
#include <thread>

#include "zfort/errors.hpp"

namespace zfort {

namespace {

bool single_bit(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace

std::uint64_t closure_mask(std::span<const std::uint64_t> adjacency, std::uint64_t filled) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::uint64_t scan = filled;
    while (scan != 0) {
      const int u = std::countr_zero(scan);
      scan &= scan - 1;
      const std::uint64_t open = adjacency[static_cast<std::size_t>(u)] & ~filled;
      if (single_bit(open)) {
        filled |= open;
        changed = true;
      }
    }
  }
  return filled;
}

ForcingTrace closure(const Graph& g, const VertexSet& filled) {
  ForcingTrace trace{filled, {}, filled};
  VertexSet& current = trace.final_set;
  bool forced = true;
  while (forced) {
    forced = false;
    for (Vertex u = current.first(); u < g.order(); u = current.next(u)) {
      const VertexSet open = g.neighbors(u) - current;
      if (open.count() == 1) {
        const Vertex w = open.first();
        current.insert(w);
        trace.forces.push_back({u, w});
        forced = true;
        break;
      }
    }
  }
  return trace;
}

VertexSet closure_set(const Graph& g, const VertexSet& filled) {
  if (g.order() <= 64) {
    const auto adj = g.masks();
    return VertexSet::from_mask(g.order(), closure_mask(adj, filled.mask()));
  }
  VertexSet current = filled;
  bool changed = true;
  while (changed) {
    changed = false;
    current.for_each([&](Vertex u) {
      const VertexSet open = g.neighbors(u) - current;
      if (open.count() == 1) {
        current |= open;
        changed = true;
      }
    });
  }
  return current;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& s) {
  return closure_set(g, s).count() == g.order();
}

bool replay_trace(const Graph& g, const ForcingTrace& trace) {
  VertexSet current = trace.initial;
  for (const auto& [u, w] : trace.forces) {
    if (!current.contains(u) || current.contains(w)) return false;
    const VertexSet open = g.neighbors(u) - current;
    if (open.count() != 1 || !open.contains(w)) return false;
    current.insert(w);
  }
  return current == trace.final_set;
}

namespace {

/// Failed closures seen during one cardinality round; a candidate inside any
/// of them cannot force everything.
class FailedClosureCache {
 public:
  bool dominated(std::uint64_t candidate) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](std::uint64_t c) { return (candidate & ~c) == 0; });
  }
  void add(std::uint64_t failed) {
    if (dominated(failed)) return;
    if (entries_.size() == kCapacity) entries_.erase(entries_.begin());
    entries_.push_back(failed);
  }
  void clear() { entries_.clear(); }

 private:
  static constexpr std::size_t kCapacity = 32;
  std::vector<std::uint64_t> entries_;
};

/// Lexicographically first zero forcing k-subset whose smallest element is
/// `lead`, if any.
std::optional<std::uint64_t> first_forcing_subset(std::span<const std::uint64_t> adj,
                                                  std::size_t n, std::size_t k, std::size_t lead,
                                                  FailedClosureCache& cache) {
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (k == 0) return std::nullopt;
  if (lead + k > n) return std::nullopt;
  std::vector<std::size_t> idx(k);
  idx[0] = lead;
  for (std::size_t i = 1; i < k; ++i) idx[i] = lead + i;
  while (true) {
    std::uint64_t s = 0;
    for (std::size_t i : idx) s |= std::uint64_t{1} << i;
    if (!cache.dominated(s)) {
      const std::uint64_t c = closure_mask(adj, s);
      if (c == all) return s;
      cache.add(c);
    }
    // Advance positions 1..k-1 only; position 0 stays at `lead`.
    std::size_t i = k;
    while (i > 1 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i <= 1) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ZeroForcingResult zero_forcing_number_direct(const Graph& g, const SearchOptions& options) {
  const std::size_t n = g.order();
  if (n > options.cap || n > 64) {
    throw CapExceeded("direct zero forcing search limited to order " +
                      std::to_string(std::min<std::size_t>(options.cap, 64)) + ", got " +
                      std::to_string(n));
  }
  const auto adj = g.masks();
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, n));

  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::optional<std::uint64_t>> by_lead(n);
    std::atomic<std::size_t> best_lead{n};
    auto work = [&](std::size_t offset) {
      FailedClosureCache cache;
      for (std::size_t lead = offset; lead < n; lead += workers) {
        if (lead >= best_lead.load()) break;
        by_lead[lead] = first_forcing_subset(adj, n, k, lead, cache);
        if (by_lead[lead]) {
          std::size_t cur = best_lead.load();
          while (lead < cur && !best_lead.compare_exchange_weak(cur, lead)) {
          }
          break;
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (std::size_t lead = 0; lead < n; ++lead) {
      if (by_lead[lead]) return {k, VertexSet::from_mask(n, *by_lead[lead])};
    }
  }
  throw std::logic_error("the full vertex set always forces");
}

std::size_t failed_partition_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kFailedPartitionCap) {
    throw CapExceeded("failed zero forcing partitions limited to order " +
                      std::to_string(kFailedPartitionCap));
  }
  const auto adj = g.masks();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  // A block qualifies when its complement does not force the whole graph.
  std::vector<bool> qualifies(all + 1, false);
  for (std::uint64_t block = 1; block <= all; ++block) {
    qualifies[block] = closure_mask(adj, all & ~block) != all;
  }
  // best[m] = most blocks in a qualifying partition of m, -1 if none exists.
  // The block holding the lowest vertex of m is enumerated as a submask.
  std::vector<int> best(all + 1, -1);
  best[0] = 0;
  for (std::uint64_t m = 1; m <= all; ++m) {
    const std::uint64_t low = m & (~m + 1);
    const std::uint64_t rest = m & ~low;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t block = sub | low;
      if (qualifies[block] && best[m & ~block] >= 0) {
        best[m] = std::max(best[m], best[m & ~block] + 1);
      }
      if (sub == 0) break;
    }
  }
  return static_cast<std::size_t>(best[all]);
}

}  // namespace zfort
