#include "zfort/hypergraph_opt.hpp"

#include <algorithm>
#include <string>

#include "zfort/errors.hpp"

namespace zfort {

bool is_transversal(const Hypergraph& h, const VertexSet& s) {
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const VertexSet& e) { return e.intersects(s); });
}

bool is_fractional_transversal(const Hypergraph& h, const std::vector<Rational>& weights) {
  if (weights.size() != h.universe()) return false;
  for (const auto& w : weights) {
    if (w < 0) return false;
  }
  for (const auto& e : h.edges()) {
    Rational total = 0;
    e.for_each([&](Vertex v) { total += weights[v]; });
    if (total < 1) return false;
  }
  return true;
}

bool is_fractional_matching(const Hypergraph& h, const std::vector<Rational>& weights) {
  if (weights.size() != h.edge_count()) return false;
  std::vector<Rational> load(h.universe(), Rational(0));
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (weights[i] < 0) return false;
    h.edges()[i].for_each([&](Vertex v) { load[v] += weights[i]; });
  }
  return std::all_of(load.begin(), load.end(), [](const Rational& l) { return l <= 1; });
}

lp::LinearProgram transversal_lp(const Hypergraph& h) {
  const std::vector<Vertex> vars = h.vertices().members();
  std::vector<std::size_t> column(h.universe(), 0);
  for (std::size_t j = 0; j < vars.size(); ++j) column[vars[j]] = j;

  lp::LinearProgram program;
  program.direction = lp::Direction::kMinimize;
  program.objective.assign(vars.size(), Rational(1));
  for (const auto& e : h.edges()) {
    lp::Constraint row{std::vector<Rational>(vars.size(), Rational(0)), lp::RowSense::kGreaterEqual,
                       Rational(1)};
    e.for_each([&](Vertex v) { row.coefficients[column[v]] = 1; });
    program.constraints.push_back(std::move(row));
  }
  program.upper_bounds.assign(vars.size(), Rational(1));
  return program;
}

lp::LinearProgram matching_lp(const Hypergraph& h) {
  const std::vector<Vertex> vars = h.vertices().members();
  lp::LinearProgram program;
  program.direction = lp::Direction::kMaximize;
  program.objective.assign(h.edge_count(), Rational(1));
  for (Vertex v : vars) {
    lp::Constraint row{std::vector<Rational>(h.edge_count(), Rational(0)), lp::RowSense::kLessEqual,
                       Rational(1)};
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      if (h.edges()[i].contains(v)) row.coefficients[i] = 1;
    }
    program.constraints.push_back(std::move(row));
  }
  return program;
}

namespace {

lp::Solution solve_matching_lp(const Hypergraph& h, FractionalMatching& out) {
  lp::Solution sol = lp::solve(matching_lp(h));
  if (sol.status != lp::Status::kOptimal) throw lp::NoOptimum(sol.status);
  out = {sol.value, sol.primal};
  if (!is_fractional_matching(h, out.weights)) {
    throw std::logic_error("fractional matching certificate failed");
  }
  return sol;
}

}  // namespace

FractionalMatching fractional_matching(const Hypergraph& h) {
  if (h.empty()) return {Rational(0), {}};
  FractionalMatching out;
  solve_matching_lp(h, out);
  return out;
}

FractionalTransversal fractional_transversal(const Hypergraph& h, FractionalMatching* matching_out) {
  if (h.empty()) {
    if (matching_out != nullptr) *matching_out = {Rational(0), {}};
    return {Rational(0), std::vector<Rational>(h.universe(), Rational(0))};
  }
  FractionalMatching matching;
  const lp::Solution matching_sol = solve_matching_lp(h, matching);
  FractionalTransversal out{Rational(0), std::vector<Rational>(h.universe(), Rational(0))};
  const std::vector<Vertex> vars = h.vertices().members();
  if (h.edge_count() <= kDirectTransversalLpEdgeLimit) {
    const lp::Solution sol = lp::solve(transversal_lp(h));
    if (sol.status != lp::Status::kOptimal) throw lp::NoOptimum(sol.status);
    out.value = sol.value;
    for (std::size_t j = 0; j < vars.size(); ++j) out.weights[vars[j]] = sol.primal[j];
  } else {
    // The vertex-row multipliers of the matching LP form a weighting; it is
    // optimal once it checks out as a valid fractional transversal whose total
    // equals the certified matching value.
    for (std::size_t j = 0; j < vars.size(); ++j) {
      out.weights[vars[j]] = matching_sol.dual[j];
      out.value += matching_sol.dual[j];
    }
  }
  if (!is_fractional_transversal(h, out.weights)) {
    throw std::logic_error("fractional transversal certificate failed");
  }
  Rational total = 0;
  for (const auto& w : out.weights) total += w;
  if (total != out.value || out.value != matching.value) {
    throw std::logic_error("fractional transversal " + to_string(out.value) +
                           " differs from fractional matching " + to_string(matching.value));
  }
  if (matching_out != nullptr) *matching_out = std::move(matching);
  return out;
}

namespace {

/// Greedy lower bound: uncovered edges that are pairwise disjoint on their
/// still-allowed vertices each need a distinct chosen vertex.
std::size_t packing_bound(const std::vector<VertexSet>& open_edges) {
  std::size_t count = 0;
  if (open_edges.empty()) return 0;
  VertexSet used(open_edges.front().universe());
  for (const auto& e : open_edges) {
    if (!e.intersects(used)) {
      used |= e;
      ++count;
    }
  }
  return count;
}

class TransversalSearch {
 public:
  TransversalSearch(const Hypergraph& h, std::size_t lower_bound)
      : h_(h), lower_bound_(lower_bound) {}

  void set_incumbent(const VertexSet& s) {
    best_ = s;
    best_size_ = s.count();
  }

  void run() {
    VertexSet chosen(h_.universe());
    VertexSet excluded(h_.universe());
    search(chosen, excluded);
  }

  const VertexSet& best() const { return best_; }
  std::size_t best_size() const { return best_size_; }

 private:
  void search(VertexSet& chosen, VertexSet& excluded) {
    if (best_size_ <= lower_bound_) return;
    std::vector<VertexSet> open;
    for (const auto& e : h_.edges()) {
      if (e.intersects(chosen)) continue;
      VertexSet allowed = e - excluded;
      if (allowed.empty()) return;
      open.push_back(std::move(allowed));
    }
    if (open.empty()) {
      if (chosen.count() < best_size_) set_incumbent(chosen);
      return;
    }
    std::sort(open.begin(), open.end(), size_lex_less);
    const VertexSet branch = open.front();
    if (chosen.count() + packing_bound(open) >= best_size_) return;

    std::vector<Vertex> tried;
    branch.for_each([&](Vertex v) {
      if (best_size_ <= lower_bound_) return;
      chosen.insert(v);
      search(chosen, excluded);
      chosen.erase(v);
      excluded.insert(v);
      tried.push_back(v);
    });
    for (Vertex v : tried) excluded.erase(v);
  }

  const Hypergraph& h_;
  std::size_t lower_bound_;
  VertexSet best_;
  std::size_t best_size_ = 0;
};

VertexSet greedy_transversal(const Hypergraph& h) {
  VertexSet chosen(h.universe());
  std::vector<const VertexSet*> open;
  for (const auto& e : h.edges()) open.push_back(&e);
  while (!open.empty()) {
    std::vector<std::size_t> hits(h.universe(), 0);
    for (const auto* e : open) e->for_each([&](Vertex v) { ++hits[v]; });
    const auto best = std::max_element(hits.begin(), hits.end());
    const Vertex v = static_cast<Vertex>(best - hits.begin());
    chosen.insert(v);
    std::erase_if(open, [&](const VertexSet* e) { return e->contains(v); });
  }
  return chosen;
}

}  // namespace

TransversalResult transversal_number(const Hypergraph& h) {
  if (h.empty()) return {0, VertexSet(h.universe())};
  return transversal_number(h, fractional_matching(h).value);
}

TransversalResult transversal_number(const Hypergraph& h, const Rational& tau_star) {
  if (h.empty()) return {0, VertexSet(h.universe())};
  const auto lower = static_cast<std::size_t>(ceil(tau_star).get_ui());
  TransversalSearch search(h, lower);
  search.set_incumbent(greedy_transversal(h));
  search.run();
  TransversalResult out{search.best_size(), search.best()};
  if (!is_transversal(h, out.set) || out.set.count() != out.size) {
    throw std::logic_error("transversal certificate failed");
  }
  return out;
}

namespace {

class MatchingSearch {
 public:
  MatchingSearch(const Hypergraph& h, std::size_t upper_bound)
      : h_(h), upper_bound_(upper_bound) {}

  void set_incumbent(std::vector<std::size_t> picks) { best_ = std::move(picks); }

  void run() {
    std::vector<std::size_t> picks;
    VertexSet used(h_.universe());
    search(0, used, picks);
  }

  const std::vector<std::size_t>& best() const { return best_; }

 private:
  void search(std::size_t next, VertexSet& used, std::vector<std::size_t>& picks) {
    if (best_.size() >= upper_bound_) return;
    if (picks.size() > best_.size()) best_ = picks;
    // Bound: every further pick is a distinct compatible edge.
    std::size_t compatible = 0;
    const std::size_t need = best_.size() + 1 - picks.size();
    for (std::size_t i = next; i < h_.edge_count() && compatible < need; ++i) {
      if (!h_.edges()[i].intersects(used)) ++compatible;
    }
    if (compatible < need) return;
    for (std::size_t i = next; i < h_.edge_count(); ++i) {
      const VertexSet& e = h_.edges()[i];
      if (e.intersects(used)) continue;
      used |= e;
      picks.push_back(i);
      search(i + 1, used, picks);
      picks.pop_back();
      used -= e;
      if (best_.size() >= upper_bound_) return;
    }
  }

  const Hypergraph& h_;
  std::size_t upper_bound_;
  std::vector<std::size_t> best_;
};

}  // namespace

MatchingResult matching_number(const Hypergraph& h) {
  if (h.empty()) return {0, {}};
  return matching_number(h, fractional_matching(h).value);
}

MatchingResult matching_number(const Hypergraph& h, const Rational& mu_star) {
  if (h.empty()) return {0, {}};
  const auto upper = static_cast<std::size_t>(floor(mu_star).get_ui());

  std::vector<std::size_t> greedy;
  VertexSet used(h.universe());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (!h.edges()[i].intersects(used)) {
      used |= h.edges()[i];
      greedy.push_back(i);
    }
  }
  MatchingSearch search(h, upper);
  search.set_incumbent(greedy);
  search.run();

  MatchingResult out;
  out.size = search.best().size();
  VertexSet seen(h.universe());
  for (std::size_t i : search.best()) {
    const VertexSet& e = h.edges()[i];
    if (e.intersects(seen)) throw std::logic_error("matching certificate failed");
    seen |= e;
    out.edges.push_back(e);
  }
  return out;
}

std::size_t independence_number(const Hypergraph& h) {
  return h.vertex_count() - transversal_number(h).size;
}

std::size_t independence_number_direct(const Hypergraph& h) {
  const std::vector<Vertex> vars = h.vertices().members();
  if (vars.size() > 24) throw CapExceeded("direct independence search limited to 24 vertices");
  std::size_t best = 0;
  const std::uint64_t limit = std::uint64_t{1} << vars.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    VertexSet s(h.universe());
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if ((mask >> j) & 1U) s.insert(vars[j]);
    }
    const bool independent = std::none_of(h.edges().begin(), h.edges().end(),
                                          [&](const VertexSet& e) { return e.is_subset_of(s); });
    if (independent) best = size;
  }
  return best;
}

HypergraphInvariants hypergraph_invariants(const Hypergraph& h) {
  HypergraphInvariants out;
  FractionalMatching fm;
  const FractionalTransversal ft = fractional_transversal(h, &fm);
  const TransversalResult t = transversal_number(h, fm.value);
  const MatchingResult m = matching_number(h, fm.value);
  out.tau = t.size;
  out.transversal = t.set;
  out.mu = m.size;
  out.matching = m.edges;
  out.tau_star = ft.value;
  out.vertex_weights = ft.weights;
  out.mu_star = fm.value;
  out.edge_weights = fm.weights;
  out.vertex_count = h.vertex_count();
  out.alpha = out.vertex_count - out.tau;
  out.uniform_k = h.uniform_k();
  out.regular_d = h.regular_d();
  out.edge_count = h.edge_count();
  out.max_degree = h.max_degree();
  out.min_edge_size = h.min_edge_size();
  if (!(Rational(out.mu) <= out.mu_star && out.mu_star == out.tau_star &&
        out.tau_star <= Rational(out.tau))) {
    throw std::logic_error("matching/transversal chain violated");
  }
  return out;
}

GraphInvariants graph_invariants(const Graph& g, const InvariantOptions& options) {
  GraphInvariants out{minimal_forts(g, options.forts), {}};
  out.values = hypergraph_invariants(out.forts);
  if (options.check_direct) {
    const ZeroForcingResult direct = zero_forcing_number_direct(g, options.search);
    if (direct.number != out.values.tau) {
      throw std::logic_error("tau(F_G) = " + std::to_string(out.values.tau) +
                             " but direct search gives Z = " + std::to_string(direct.number));
    }
  }
  return out;
}

}  // namespace zfort
