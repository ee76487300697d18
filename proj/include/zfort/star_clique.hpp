#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zfort/graph.hpp"

namespace zfort {

enum class BlockKind { kStar, kClique };

/// One block of a star-clique path. `size` counts vertices, so a star of
/// size s is K_{1,s-1}. Local labels: a star has its center at 0 and leaves
/// 1..s-1; a clique uses 0..s-1. `entry` is the vertex shared with the
/// previous block, `exit` the one shared with the next.
struct StarCliqueBlock {
  BlockKind kind = BlockKind::kClique;
  std::size_t size = 2;
  std::optional<std::size_t> entry;
  std::optional<std::size_t> exit;
};

using StarCliqueSpec = std::vector<StarCliqueBlock>;

struct StarCliquePath {
  Graph graph;
  /// Global labels of each block, indexed by local label.
  std::vector<std::vector<Vertex>> blocks;
  /// The shared vertices, between block i and i+1.
  std::vector<Vertex> cut_vertices;
};

/// Glues the blocks in order. Unset attachments default to: star entry 1,
/// star exit s-1 (2 in the middle when s = 3); clique entry 0, exit s-1.
/// Throws InputError when a star is smaller than 3 vertices (use clique 2
/// for K_2), a clique is smaller than 2, an attachment is out of range or at
/// a star center, a block's entry equals its exit, or an end block is given
/// an attachment it cannot have.
StarCliquePath build_star_clique_path(const StarCliqueSpec& spec);

/// The block itself as a standalone graph.
Graph block_graph(const StarCliqueBlock& block);

/// "clique3,star4"; attachments are omitted.
std::string to_string(const StarCliqueSpec& spec);
/// Parses the to_string form; "c3" and "s4" are accepted as short forms.
StarCliqueSpec parse_star_clique_spec(std::string_view text);

/// Every block sequence (clique 2..order, star 3..order) whose glued order is
/// exactly `order`, with default attachments.
std::vector<StarCliqueSpec> star_clique_specs_of_order(std::size_t order);

/// Block sequences of 1..max_blocks blocks with sizes up to max_size, one per
/// reversal pair (the reversed sequence gives an isomorphic graph).
std::vector<StarCliqueSpec> star_clique_specs(std::size_t max_blocks, std::size_t max_size);

inline constexpr std::size_t kStarCliqueRecognizerCap = 10;

/// Compares g's canonical form with every star-clique path of its order.
/// Attachments are unique up to isomorphism (any two clique vertices, any two
/// star leaves), so the search over block sequences is exhaustive.
bool is_star_clique_path(const Graph& g);

}  // namespace zfort
