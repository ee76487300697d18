#pragma once

#include <string>
#include <string_view>

#include "zfort/graph.hpp"

namespace zfort {

/// Largest order representable with the one-byte graph6 size prefix.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Accepts the native edge list ("n <order>" then one "u v" per line, u < v)
/// or a graph6 string; text starting with "n " is read as native.
Graph parse_graph(std::string_view text);

/// Canonical native form: "n <order>\n" followed by edges in sorted order.
std::string emit_graph(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace zfort
