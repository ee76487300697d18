#include "zfort/graph_io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "zfort/errors.hpp"

namespace zfort {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::size_t parse_index(std::string_view word, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("line " + std::to_string(line_no) + ": not a vertex index: '" +
                     std::string(word) + "'");
  }
  return value;
}

Graph parse_native(std::string_view text) {
  std::size_t order = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto words = split_words(line);
    if (words.empty()) continue;
    if (!have_header) {
      if (words.size() != 2 || words[0] != "n") {
        throw InputError("line " + std::to_string(line_no) + ": expected 'n <order>'");
      }
      order = parse_index(words[1], line_no);
      if (order == 0) throw InputError("graph order must be at least 1");
      have_header = true;
      continue;
    }
    if (words.size() != 2) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    const std::size_t u = parse_index(words[0], line_no);
    const std::size_t v = parse_index(words[1], line_no);
    if (u >= order || v >= order) {
      throw InputError("line " + std::to_string(line_no) + ": vertex index >= order " +
                       std::to_string(order));
    }
    if (u >= v) {
      throw InputError("line " + std::to_string(line_no) + ": edges must be written u < v");
    }
    if (!seen.insert({u, v}).second) {
      throw InputError("line " + std::to_string(line_no) + ": duplicate edge");
    }
    edges.emplace_back(u, v);
  }
  if (!have_header) throw InputError("empty graph text");
  return Graph(order, edges);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.size() >= 2 && body[0] == 'n' && (body[1] == ' ' || body[1] == '\t')) {
    return parse_native(body);
  }
  return parse_graph6(body);
}

std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw InputError("graph6: character outside the printable range");
  }
  if (text[0] == 126) throw InputError("graph6: orders above 62 are not supported");
  const std::size_t order = static_cast<std::size_t>(text[0] - 63);
  if (order == 0) throw InputError("graph6: order must be at least 1");
  const std::size_t bits = order * (order - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected) {
    throw InputError("graph6: expected " + std::to_string(expected) + " characters, got " +
                     std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  for (; k % 6 != 0; ++k) {
    const int chunk = text[1 + k / 6] - 63;
    if ((chunk >> (5 - k % 6)) & 1) throw InputError("graph6: nonzero padding bits");
  }
  return Graph(order, edges);
}

std::string to_graph6(const Graph& g) {
  if (g.order() > kGraph6MaxOrder) {
    throw InputError("graph6 output supports order <= 62, got " + std::to_string(g.order()));
  }
  const std::size_t n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int chunk = 0;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (k % 6 == 5) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
      }
    }
  }
  if (k % 6 != 0) {
    chunk <<= 6 - k % 6;
    out.push_back(static_cast<char>(63 + chunk));
  }
  return out;
}

}  // namespace zfort
