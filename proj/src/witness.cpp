#include "zfort/witness.hpp"

#include "zfort/errors.hpp"
#include "zfort/forts.hpp"

namespace zfort {

PatternMatrix fort_null_matrix(const Graph& g, const VertexSet& f) {
  if (f.universe() != g.order()) throw InputError("fort set does not match the graph order");
  if (f.empty() || !is_fort(g, f)) throw InputError("not a fort: " + f.to_string());
  const std::size_t n = g.order();
  PatternMatrix a{n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0)))};
  for (Vertex u = 0; u < n; ++u) {
    auto& row = a.entries[u];
    const VertexSet inside = g.neighbors(u) & f;
    const VertexSet outside = g.neighbors(u) - f;
    outside.for_each([&](Vertex w) { row[w] = 1; });
    const std::vector<Vertex> hits = inside.members();
    const long k = static_cast<long>(hits.size());
    if (f.contains(u)) {
      for (Vertex w : hits) row[w] = 1;
      row[u] = -k;
    } else {
      row[u] = 1;
      for (std::size_t i = 0; i < hits.size(); ++i) row[hits[i]] = i + 1 == hits.size() ? Rational(-(k - 1)) : Rational(1);
    }
  }
  return a;
}

PatternMatrix disjoint_forts_witness(const Graph& g, const std::vector<VertexSet>& forts) {
  if (forts.empty()) throw InputError("at least one fort is required");
  for (std::size_t i = 0; i < forts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (forts[i].intersects(forts[j])) {
        throw InputError("forts overlap: " + forts[j].to_string() + " and " + forts[i].to_string());
      }
    }
  }
  std::vector<PatternMatrix> parts;
  for (const auto& f : forts) parts.push_back(fort_null_matrix(g, f));
  const std::size_t n = g.order();
  PatternMatrix a{n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
  for (Vertex j = 0; j < n; ++j) {
    std::size_t source = parts.size() - 1;
    for (std::size_t i = 0; i < forts.size(); ++i) {
      if (forts[i].contains(j)) source = i;
    }
    for (Vertex r = 0; r < n; ++r) a.entries[r][j] = parts[source].entries[r][j];
  }
  return a;
}

std::size_t exact_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t exact_nullity(const PatternMatrix& m) { return m.order - exact_rank(m.entries); }

bool has_graph_pattern(const PatternMatrix& m, const Graph& g) {
  if (m.order != g.order() || m.entries.size() != m.order) return false;
  for (Vertex i = 0; i < m.order; ++i) {
    if (m.entries[i].size() != m.order) return false;
    for (Vertex j = 0; j < m.order; ++j) {
      if (i != j && (m.entries[i][j] != 0) != g.adjacent(i, j)) return false;
    }
  }
  return true;
}

bool annihilates(const PatternMatrix& m, const VertexSet& s) {
  for (const auto& row : m.entries) {
    Rational sum = 0;
    s.for_each([&](Vertex j) { sum += row[j]; });
    if (sum != 0) return false;
  }
  return true;
}

}  // namespace zfort
