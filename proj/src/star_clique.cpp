#include "zfort/star_clique.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>

#include "zfort/census.hpp"
#include "zfort/errors.hpp"
#include "zfort/families.hpp"

namespace zfort {

namespace {

std::size_t default_entry(const StarCliqueBlock& b) { return b.kind == BlockKind::kStar ? 1 : 0; }

std::size_t default_exit(const StarCliqueBlock& b, bool has_entry) {
  if (b.kind == BlockKind::kStar && has_entry && b.size == 3) return 2;
  return b.size - 1;
}

void check_attachment(const StarCliqueBlock& b, std::size_t local, const char* what) {
  if (local >= b.size) {
    throw InputError(std::string(what) + " attachment " + std::to_string(local) +
                     " out of range for a block of size " + std::to_string(b.size));
  }
  if (b.kind == BlockKind::kStar && local == 0) {
    throw InputError(std::string("star attachment at center (") + what + ")");
  }
}

}  // namespace

Graph block_graph(const StarCliqueBlock& block) {
  if (block.kind == BlockKind::kStar) return family::complete_bipartite(1, static_cast<long>(block.size) - 1);
  return family::complete(static_cast<long>(block.size));
}

StarCliquePath build_star_clique_path(const StarCliqueSpec& spec) {
  if (spec.empty()) throw InputError("a star-clique path needs at least one block");
  StarCliquePath out{Graph(1), {}, {}};
  std::vector<Edge> edges;
  std::size_t next_label = 0;
  std::optional<Vertex> carry;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const StarCliqueBlock& b = spec[i];
    const bool first = i == 0;
    const bool last = i + 1 == spec.size();
    if (b.kind == BlockKind::kStar && b.size < 3) {
      throw InputError("a star needs at least 3 vertices; use clique 2 for K_2");
    }
    if (b.kind == BlockKind::kClique && b.size < 2) throw InputError("a clique needs at least 2 vertices");
    if (first && b.entry) throw InputError("the first block has no entry attachment");
    if (last && b.exit) throw InputError("the last block has no exit attachment");

    std::optional<std::size_t> entry;
    std::optional<std::size_t> exit;
    if (!first) {
      entry = b.entry.value_or(default_entry(b));
      check_attachment(b, *entry, "entry");
    }
    if (!last) {
      exit = b.exit.value_or(default_exit(b, !first));
      check_attachment(b, *exit, "exit");
    }
    if (entry && exit && *entry == *exit) throw InputError("block entry and exit coincide");

    std::vector<Vertex> global(b.size);
    for (std::size_t local = 0; local < b.size; ++local) {
      global[local] = (entry && local == *entry) ? *carry : next_label++;
    }
    if (b.kind == BlockKind::kStar) {
      for (std::size_t leaf = 1; leaf < b.size; ++leaf) edges.emplace_back(global[0], global[leaf]);
    } else {
      for (std::size_t u = 0; u < b.size; ++u) {
        for (std::size_t w = u + 1; w < b.size; ++w) edges.emplace_back(global[u], global[w]);
      }
    }
    if (exit) {
      carry = global[*exit];
      out.cut_vertices.push_back(*carry);
    }
    out.blocks.push_back(std::move(global));
  }
  for (auto& [u, w] : edges) {
    if (u > w) std::swap(u, w);
  }
  out.graph = Graph(next_label, edges);
  return out;
}

std::string to_string(const StarCliqueSpec& spec) {
  std::string s;
  for (const auto& b : spec) {
    if (!s.empty()) s += ',';
    s += (b.kind == BlockKind::kStar ? "star" : "clique") + std::to_string(b.size);
  }
  return s;
}

StarCliqueSpec parse_star_clique_spec(std::string_view text) {
  StarCliqueSpec spec;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string item;
    for (char c : text.substr(pos, comma - pos)) {
      if (!std::isspace(static_cast<unsigned char>(c))) item.push_back(c);
    }
    std::size_t digits = 0;
    while (digits < item.size() && !std::isdigit(static_cast<unsigned char>(item[digits]))) ++digits;
    const std::string kind = item.substr(0, digits);
    const std::string size = item.substr(digits);
    StarCliqueBlock b;
    if (kind == "star" || kind == "s") {
      b.kind = BlockKind::kStar;
    } else if (kind == "clique" || kind == "c") {
      b.kind = BlockKind::kClique;
    } else {
      throw InputError("unknown block kind in '" + item + "'");
    }
    if (size.empty() || size.size() > 4 ||
        !std::all_of(size.begin(), size.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InputError("bad block size in '" + item + "'");
    }
    b.size = std::stoul(size);
    spec.push_back(b);
    pos = comma + 1;
  }
  build_star_clique_path(spec);
  return spec;
}

namespace {

std::vector<StarCliqueBlock> block_types(std::size_t max_size) {
  std::vector<StarCliqueBlock> types;
  for (std::size_t s = 2; s <= max_size; ++s) types.push_back({BlockKind::kClique, s, {}, {}});
  for (std::size_t s = 3; s <= max_size; ++s) types.push_back({BlockKind::kStar, s, {}, {}});
  return types;
}

void extend_to_order(std::size_t remaining, const std::vector<StarCliqueBlock>& types,
                     StarCliqueSpec& current, std::vector<StarCliqueSpec>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (const auto& t : types) {
    // Every block after the first adds size - 1 new vertices.
    const std::size_t added = current.empty() ? t.size : t.size - 1;
    if (added > remaining) continue;
    current.push_back(t);
    extend_to_order(remaining - added, types, current, out);
    current.pop_back();
  }
}

std::pair<int, std::size_t> block_key(const StarCliqueBlock& b) {
  return {b.kind == BlockKind::kStar ? 1 : 0, b.size};
}

}  // namespace

std::vector<StarCliqueSpec> star_clique_specs_of_order(std::size_t order) {
  std::vector<StarCliqueSpec> out;
  if (order < 2) return out;
  StarCliqueSpec current;
  extend_to_order(order, block_types(order), current, out);
  return out;
}

std::vector<StarCliqueSpec> star_clique_specs(std::size_t max_blocks, std::size_t max_size) {
  const std::vector<StarCliqueBlock> types = block_types(max_size);
  std::vector<StarCliqueSpec> out;
  std::vector<StarCliqueSpec> level{{}};
  for (std::size_t k = 1; k <= max_blocks; ++k) {
    std::vector<StarCliqueSpec> next;
    for (const auto& prefix : level) {
      for (const auto& t : types) {
        next.push_back(prefix);
        next.back().push_back(t);
      }
    }
    for (const auto& spec : next) {
      std::vector<std::pair<int, std::size_t>> fwd;
      for (const auto& b : spec) fwd.push_back(block_key(b));
      std::vector<std::pair<int, std::size_t>> rev(fwd.rbegin(), fwd.rend());
      if (fwd <= rev) out.push_back(spec);
    }
    level = std::move(next);
  }
  return out;
}

bool is_star_clique_path(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kStarCliqueRecognizerCap) {
    throw CapExceeded("star-clique recognition limited to order " +
                      std::to_string(kStarCliqueRecognizerCap));
  }
  static std::mutex mutex;
  static std::map<std::size_t, std::set<std::string>> keys_by_order;
  std::set<std::string>* keys = nullptr;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = keys_by_order.find(n);
    if (it == keys_by_order.end()) {
      std::set<std::string> keys_for_n;
      for (const auto& spec : star_clique_specs_of_order(n)) {
        keys_for_n.insert(canonical_key(build_star_clique_path(spec).graph));
      }
      it = keys_by_order.emplace(n, std::move(keys_for_n)).first;
    }
    keys = &it->second;
  }
  if (!g.is_connected()) return false;
  return keys->count(canonical_key(g)) != 0;
}

}  // namespace zfort
