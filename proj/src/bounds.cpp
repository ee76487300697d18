#include "zfort/bounds.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "zfort/census.hpp"
#include "zfort/errors.hpp"
#include "zfort/families.hpp"
#include "zfort/forcing.hpp"
#include "zfort/forts.hpp"
#include "zfort/graph_io.hpp"

namespace zfort {

const char* to_string(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kGreaterEqual:
      return ">=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreater:
      return ">";
  }
  return "?";
}

BoundReport make_report(std::string bound, std::string citation, Relation relation, Rational left,
                        Rational right, std::vector<std::string> inputs) {
  BoundReport r;
  r.bound = std::move(bound);
  r.citation = std::move(citation);
  r.relation = relation;
  r.left = std::move(left);
  r.right = std::move(right);
  r.inputs = std::move(inputs);
  switch (relation) {
    case Relation::kLessEqual:
      r.holds = r.left <= r.right;
      break;
    case Relation::kGreaterEqual:
      r.holds = r.left >= r.right;
      break;
    case Relation::kEqual:
      r.holds = r.left == r.right;
      break;
    case Relation::kGreater:
      r.holds = r.left > r.right;
      break;
  }
  r.sharp = r.left == r.right;
  return r;
}

BoundReport not_applicable(std::string bound, std::string citation, Relation relation,
                           std::vector<std::string> inputs) {
  BoundReport r;
  r.bound = std::move(bound);
  r.citation = std::move(citation);
  r.relation = relation;
  r.left = 0;
  r.right = 0;
  r.holds = false;
  r.sharp = false;
  r.applicable = false;
  r.inputs = std::move(inputs);
  return r;
}

namespace {

Rational q(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

std::string descriptor(const NamedGraph& g) {
  if (!g.name.empty()) return g.name;
  if (g.graph.order() <= kGraph6MaxOrder) return "graph6:" + to_graph6(g.graph);
  return "order " + std::to_string(g.graph.order());
}

}  // namespace

std::vector<BoundReport> product_bound_battery(const NamedGraph& gn, const NamedGraph& hn,
                                               const BatteryOptions& options) {
  const Graph& g = gn.graph;
  const Graph& h = hn.graph;
  const std::size_t product_order = g.order() * h.order();
  if (product_order > options.product_cap) {
    throw CapExceeded("product order " + std::to_string(product_order) + " exceeds cap " +
                      std::to_string(options.product_cap));
  }
  const std::vector<std::string> inputs{descriptor(gn), descriptor(hn)};

  const GraphInvariants ig = graph_invariants(g, options.invariants);
  const GraphInvariants ih = graph_invariants(h, options.invariants);
  InvariantOptions product_options = options.invariants;
  product_options.forts.cap = std::max(product_options.forts.cap, options.product_cap);
  product_options.search.cap = std::max(product_options.search.cap, options.product_cap);
  const GraphInvariants ip = graph_invariants(cartesian_product(g, h), product_options);
  const Hypergraph cross = hypergraph_cross_product(ig.forts, ih.forts);
  const HypergraphInvariants ic = hypergraph_invariants(cross);

  const Rational zg = q(ig.zero_forcing());
  const Rational zh = q(ih.zero_forcing());
  const Rational zp = q(ip.zero_forcing());
  const Rational ng = q(g.order());
  const Rational nh = q(h.order());
  const bool edges = g.edge_count() > 0 && h.edge_count() > 0;
  const auto& vg = ig.values;
  const auto& vh = ih.values;

  std::vector<BoundReport> out;
  auto add = [&](const char* id, const char* citation, Relation rel, Rational left, Rational right) {
    out.push_back(make_report(id, citation, rel, std::move(left), std::move(right), inputs));
  };
  auto add_if_edges = [&](const char* id, const char* citation, Relation rel, const Rational& left,
                          const Rational& right) {
    if (edges) {
      add(id, citation, rel, left, right);
    } else {
      out.push_back(not_applicable(id, citation, rel, inputs));
    }
  };

  add("a", "Z(G x H) <= min(|V(H)| Z(G), |V(G)| Z(H))", Relation::kLessEqual, zp,
      std::min(nh * zg, ng * zh));
  add_if_edges("b", "conjecture: Z(G x H) >= Z(G) Z(H) + 1", Relation::kGreaterEqual, zp, zg * zh + 1);
  out.back().conjecture = true;
  add_if_edges("c", "Z(G x H) >= tau(F_G x F_H) + 1", Relation::kGreaterEqual, zp, q(ic.tau) + 1);
  add("d", "Z(G x H) >= Z*(G) Z(H)", Relation::kGreaterEqual, zp, vg.tau_star * zh);
  add("e", "ft(G x H) >= ft(G) ft(H)", Relation::kGreaterEqual, q(ip.fort_number()),
      q(vg.mu) * q(vh.mu));
  add("f", "Z*(G x H) >= Z*(G) Z*(H)", Relation::kGreaterEqual, ip.fractional_zero_forcing(),
      vg.tau_star * vh.tau_star);
  add_if_edges("g", "Z(G x H) >= Z(G) + Z(H)", Relation::kGreaterEqual, zp, zg + zh);
  add_if_edges("h", "Z(G x H) >= |V(H)| Z(G) - |E(F_G)| (|V(H)| - Z(H)) + 1", Relation::kGreaterEqual,
               zp, nh * zg - q(vg.edge_count) * (nh - zh) + 1);
  {
    const Rational lower_log = log_lower_bound(Integer(static_cast<unsigned long>(vh.max_degree)));
    add_if_edges("i", "Z(G x H) >= 1 + Z(G) Z(H) / (1 + ln Delta(F_H)), ln bounded below at 64 bits",
                 Relation::kGreaterEqual, zp, 1 + zg * zh / (1 + lower_log));
  }
  const Rational mu1 = q(vg.mu), mu2 = q(vh.mu), t1 = q(vg.tau), t2 = q(vh.tau);
  add("j1", "mu(F_G) mu(F_H) <= mu(F_G x F_H)", Relation::kLessEqual, mu1 * mu2, q(ic.mu));
  add("j2", "mu(F_G x F_H) <= tau*(F_G) mu(F_H)", Relation::kLessEqual, q(ic.mu), vg.tau_star * mu2);
  add("j3", "tau*(F_G) mu(F_H) <= tau*(F_G) tau*(F_H)", Relation::kLessEqual, vg.tau_star * mu2,
      vg.tau_star * vh.tau_star);
  add("j4", "tau*(F_G) tau*(F_H) = tau*(F_G x F_H)", Relation::kEqual, vg.tau_star * vh.tau_star,
      ic.tau_star);
  add("j5", "tau*(F_G x F_H) <= tau*(F_G) tau(F_H)", Relation::kLessEqual, ic.tau_star,
      vg.tau_star * t2);
  add("j6", "tau*(F_G) tau(F_H) <= tau(F_G x F_H)", Relation::kLessEqual, vg.tau_star * t2, q(ic.tau));
  add("j7", "tau(F_G x F_H) <= tau(F_G) tau(F_H)", Relation::kLessEqual, q(ic.tau), t1 * t2);
  add("k", "tau(F_G x F_H) >= tau(F_G) + tau(F_H) - 1", Relation::kGreaterEqual, q(ic.tau), t1 + t2 - 1);
  add("l", "alpha(F_G x F_H) <= |V(F_H)| alpha(F_G) + |E(F_G)| alpha(F_H)", Relation::kLessEqual,
      q(ic.alpha), q(vh.vertex_count) * q(vg.alpha) + q(vg.edge_count) * q(vh.alpha));

  std::sort(out.begin(), out.end(), [](const BoundReport& a, const BoundReport& b) { return a.bound < b.bound; });
  return out;
}

namespace {

struct TableRow {
  std::string name;
  Graph graph;
  Rational ft;
  Rational zstar;
  Rational z;
};

void add_row_reports(const TableRow& row, const InvariantOptions& options, std::vector<BoundReport>& out) {
  InvariantOptions opts = options;
  opts.forts.cap = std::max(opts.forts.cap, row.graph.order());
  opts.search.cap = std::max(opts.search.cap, row.graph.order());
  const GraphInvariants inv = graph_invariants(row.graph, opts);
  const std::vector<std::string> inputs{row.name};
  out.push_back(make_report("table1/" + row.name + "/ft", "fort number closed form", Relation::kEqual,
                            q(inv.fort_number()), row.ft, inputs));
  out.push_back(make_report("table1/" + row.name + "/zstar", "fractional zero forcing closed form",
                            Relation::kEqual, inv.fractional_zero_forcing(), row.zstar, inputs));
  out.push_back(make_report("table1/" + row.name + "/z", "zero forcing closed form", Relation::kEqual,
                            q(inv.zero_forcing()), row.z, inputs));
  for (auto& r : consistency_reports("table1/" + row.name, row.name, inv.values)) out.push_back(std::move(r));
}

std::vector<std::vector<long>> even_polygonal_sequences(std::size_t max_order, std::size_t max_cycles) {
  std::vector<std::vector<long>> out;
  std::set<std::string> seen;
  std::vector<std::vector<long>> level{{}};
  for (std::size_t c = 1; c <= max_cycles; ++c) {
    std::vector<std::vector<long>> next;
    for (const auto& prefix : level) {
      long order = 0;
      for (std::size_t i = 0; i < prefix.size(); ++i) order += i == 0 ? prefix[i] : prefix[i] - 2;
      for (long len = 3;; ++len) {
        const long grown = prefix.empty() ? len : order + len - 2;
        if (grown > static_cast<long>(max_order)) break;
        auto seq = prefix;
        seq.push_back(len);
        next.push_back(seq);
        if (grown % 2 == 0 && seen.insert(canonical_key(family::polygonal_path(seq))).second) {
          out.push_back(seq);
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

std::string join_lengths(const std::vector<long>& v) {
  std::string s;
  for (long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

std::vector<BoundReport> consistency_reports(const std::string& prefix, const std::string& input,
                                             const HypergraphInvariants& v) {
  const std::vector<std::string> in{input};
  return {make_report(prefix + "/duality", "tau*(F_G) = mu*(F_G)", Relation::kEqual, v.tau_star, v.mu_star, in),
          make_report(prefix + "/chain_ft", "ft(G) <= Z*(G)", Relation::kLessEqual, q(v.mu), v.tau_star, in),
          make_report(prefix + "/chain_z", "Z*(G) <= Z(G)", Relation::kLessEqual, v.tau_star, q(v.tau), in),
          make_report(prefix + "/lower", "m/Delta <= Z*(G)", Relation::kLessEqual,
                      q(v.edge_count) / q(v.max_degree), v.tau_star, in),
          make_report(prefix + "/upper", "Z*(G) <= n'/k", Relation::kLessEqual, v.tau_star,
                      q(v.vertex_count) / q(v.min_edge_size), in)};
}

std::vector<BoundReport> oracle_sweep(const OracleOptions& options) {
  std::vector<Graph> graphs = graph_census(options.max_order, true);
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.random_count; ++i) {
    const std::size_t order = 1 + static_cast<std::size_t>(rng() % options.max_random_order);
    graphs.push_back(random_graph(order, rng()));
  }
  std::vector<BoundReport> out;
  for (const Graph& g : graphs) {
    InvariantOptions opts = options.invariants;
    opts.check_direct = false;
    const GraphInvariants inv = graph_invariants(g, opts);
    const std::size_t z = zero_forcing_number_direct(g, options.invariants.search).number;
    const std::string name = "graph6:" + to_graph6(g);
    out.push_back(make_report("oracle/" + name + "/tau", "tau(F_G) = Z(G) by direct search", Relation::kEqual,
                              q(inv.values.tau), q(z), {name}));
    for (auto& r : consistency_reports("oracle/" + name, name, inv.values)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<BoundReport> verify_table1(const InvariantOptions& options) {
  std::vector<TableRow> rows;
  for (long n = 1; n <= 10; ++n) rows.push_back({"P" + std::to_string(n), family::path(n), 1, 1, 1});
  for (long n = 2; n <= 9; ++n) {
    rows.push_back({"K" + std::to_string(n), family::complete(n), n / 2, make_rational(n, 2), n - 1});
  }
  for (long n = 1; n <= 8; ++n) rows.push_back({"empty" + std::to_string(n), family::empty(n), n, n, n});
  for (long p = 1; p <= 4; ++p) {
    for (long qq = 1; qq <= 4; ++qq) {
      const long lo = std::min(p, qq), hi = std::max(p, qq);
      if (hi < 2) continue;
      const std::string name = "K" + std::to_string(p) + "," + std::to_string(qq);
      if (lo == 1) {
        rows.push_back({name, family::complete_bipartite(p, qq), hi / 2, make_rational(hi, 2), hi - 1});
      } else {
        rows.push_back({name, family::complete_bipartite(p, qq), p / 2 + qq / 2, make_rational(p + qq, 2),
                        p + qq - 2});
      }
    }
  }
  for (long n = 3; n <= 11; ++n) {
    if (n % 2 == 0) {
      rows.push_back({"C" + std::to_string(n), family::cycle(n), 2, 2, 2});
    } else {
      const long k = (n - 1) / 2;
      rows.push_back({"C" + std::to_string(n), family::cycle(n), 1, make_rational(2 * k + 1, k + 1), 2});
    }
  }
  const std::vector<std::pair<std::string, Graph>> bases{
      {"P2", family::path(2)}, {"P3", family::path(3)}, {"K3", family::complete(3)}, {"P4", family::path(4)}};
  for (const auto& [name, base] : bases) {
    const long r = static_cast<long>(base.order());
    rows.push_back({name + "o2K1", corona(base, family::empty(2)), r, r, r});
    const long z_base = name == "K3" ? 2 : 1;
    rows.push_back({name + "oK2", corona(base, family::complete(2)), r, r, r + z_base});
  }
  for (long s = 2; s <= 3; ++s) {
    rows.push_back({std::to_string(s) + "K3vK1", family::join_clique_union(s, 3, 1), s + 1,
                    make_rational(3 * s, 2), 2 * s + 1});
    rows.push_back({std::to_string(s) + "K2vK2", family::join_clique_union(s, 2, 2), s + 1, s + 1, s + 2});
  }
  rows.push_back({"K4xK4", cartesian_product(family::complete(4), family::complete(4)), 4, 4, 10});
  for (const auto& seq : even_polygonal_sequences(12, 3)) {
    rows.push_back({"polygonal[" + join_lengths(seq) + "]", family::polygonal_path(seq), 2, 2, 2});
  }
  rows.push_back({"petersen", family::petersen(), 2, make_rational(5, 2), 5});

  std::vector<BoundReport> out;
  for (const auto& row : rows) add_row_reports(row, options, out);
  return out;
}

std::vector<VertexSet> diagonal_forts(std::size_t m) {
  std::vector<VertexSet> out;
  for (std::size_t k = 0; k < m; ++k) {
    VertexSet d(m * m);
    for (std::size_t i = 0; i < m; ++i) d.insert(product_vertex(i, (i + k) % m, m));
    out.push_back(d);
  }
  return out;
}

BoundReport diagonal_forts_check(std::size_t m) {
  if (m < 3 || m > 7 || m % 2 == 0) throw InputError("diagonal check needs odd m with 3 <= m <= 7");
  const Graph cm = family::cycle(static_cast<long>(m));
  const Graph g = cartesian_product(cm, cm);
  std::vector<VertexSet> kept;
  for (const VertexSet& d : diagonal_forts(m)) {
    if (!is_fort(g, d)) continue;
    if (std::any_of(kept.begin(), kept.end(), [&](const VertexSet& e) { return e.intersects(d); })) continue;
    kept.push_back(d);
  }
  const std::size_t ft_cycle = matching_number(minimal_forts(cm)).size;
  const std::string name = "C" + std::to_string(m) + "xC" + std::to_string(m);
  BoundReport r = make_report("diagonals/" + std::to_string(m), "ft(C_m x C_m) >= m > ft(C_m)^2 via disjoint diagonals",
                              Relation::kGreater, q(kept.size()), q(ft_cycle * ft_cycle), {name});
  if (kept.size() != m) r.holds = false;
  return r;
}

StarCliqueCheck star_clique_verify(const StarCliqueSpec& spec, const std::vector<std::size_t>& rs,
                                   std::size_t product_cap, std::size_t workers) {
  StarCliqueCheck out{build_star_clique_path(spec), {}, {}};
  const Graph& g = out.path.graph;
  const std::string name = to_string(spec);
  SearchOptions search{std::max<std::size_t>(g.order(), 1), workers};
  const std::size_t z = zero_forcing_number_direct(g, search).number;
  std::size_t block_sum = 0;
  for (const auto& b : spec) block_sum += zero_forcing_number_direct(block_graph(b)).number;
  out.z_formula = make_report("starclique/" + name + "/z", "Z(G) = sum Z(G_i) - k + 1", Relation::kEqual, q(z),
                              q(block_sum) - q(spec.size()) + 1, {name});
  for (std::size_t r : rs) {
    if (r < 2) throw InputError("complete factor needs r >= 2");
    const std::string id = "starclique/" + name + "/K" + std::to_string(r);
    const char* citation = "Z(K_r x G) = (r-1) Z(G) + 1";
    const std::size_t order = r * g.order();
    if (order > product_cap || order > 64) {
      out.product_formula.push_back(not_applicable(id, citation, Relation::kEqual, {name}));
      continue;
    }
    const Graph p = cartesian_product(family::complete(static_cast<long>(r)), g);
    const std::size_t zp = zero_forcing_number_direct(p, {order, workers}).number;
    out.product_formula.push_back(
        make_report(id, citation, Relation::kEqual, q(zp), q((r - 1) * z + 1), {"K" + std::to_string(r), name}));
  }
  return out;
}

std::vector<StarCliqueCheck> star_clique_suite(std::size_t max_blocks, std::size_t max_size,
                                               const std::vector<std::size_t>& rs, std::size_t product_cap,
                                               std::size_t workers) {
  std::vector<StarCliqueCheck> out;
  for (const auto& spec : star_clique_specs(max_blocks, max_size)) {
    out.push_back(star_clique_verify(spec, rs, product_cap, workers));
  }
  return out;
}

std::vector<ConverseCandidate> converse_scan(const std::vector<Graph>& census, std::size_t workers) {
  std::vector<ConverseCandidate> out;
  const Graph k2 = family::complete(2);
  for (const Graph& g : census) {
    if (!g.is_connected()) continue;
    if (g.order() > kConverseOrderCap) {
      throw CapExceeded("converse scan limited to order " + std::to_string(kConverseOrderCap));
    }
    const std::size_t z = zero_forcing_number_direct(g, {g.order(), workers}).number;
    const Graph p = cartesian_product(k2, g);
    const std::size_t zp = zero_forcing_number_direct(p, {p.order(), workers}).number;
    if (zp != z + 1) continue;
    out.push_back({g, z, zp, is_star_clique_path(g)});
  }
  return out;
}

std::vector<ConverseCandidate> converse_scan(std::size_t max_order, std::size_t workers) {
  if (max_order > kConverseOrderCap) {
    throw CapExceeded("converse scan limited to order " + std::to_string(kConverseOrderCap));
  }
  return converse_scan(graph_census(max_order, true), workers);
}

std::vector<BoundReport> double_branch_tree_check(std::size_t spine, const std::vector<long>& legs,
                                                  const InvariantOptions& options) {
  const Graph t = family::double_branch_tree(static_cast<long>(spine), legs);
  const std::string name = "double_branch_tree[" + std::to_string(spine) + ";" + join_lengths(legs) + "]";
  const Rational expected = q(spine);
  std::vector<BoundReport> out;
  if (t.order() <= options.forts.cap) {
    const GraphInvariants inv = graph_invariants(t, options);
    out.push_back(make_report(name + "/ft", "ft(T) = spine order", Relation::kEqual, q(inv.fort_number()),
                              expected, {name}));
    out.push_back(make_report(name + "/zstar", "Z*(T) = spine order", Relation::kEqual,
                              inv.fractional_zero_forcing(), expected, {name}));
    out.push_back(make_report(name + "/z", "Z(T) = spine order", Relation::kEqual, q(inv.zero_forcing()),
                              expected, {name}));
    return out;
  }
  // ft >= (number of disjoint leg forts) and Z is exact, so ft = Z* = Z when they meet.
  const std::size_t z = zero_forcing_number_direct(t, {std::min<std::size_t>(t.order(), 64), options.search.workers}).number;
  std::vector<VertexSet> leg_forts;
  for (Vertex s = 0; s < spine; ++s) {
    VertexSet rq = t.neighbors(s);
    for (Vertex w = 0; w < spine; ++w) rq.erase(w);
    // Grow each leg outward from the spine.
    VertexSet frontier = rq;
    while (!frontier.empty()) {
      VertexSet grown(t.order());
      frontier.for_each([&](Vertex v) { grown |= t.neighbors(v); });
      grown -= rq;
      grown.erase(s);
      rq |= grown;
      frontier = grown;
    }
    leg_forts.push_back(rq);
  }
  bool valid = true;
  for (std::size_t i = 0; i < leg_forts.size(); ++i) {
    valid = valid && is_fort(t, leg_forts[i]);
    for (std::size_t j = 0; j < i; ++j) valid = valid && !leg_forts[i].intersects(leg_forts[j]);
  }
  const Rational ft_lower = valid ? q(leg_forts.size()) : Rational(0);
  const bool pinned = ft_lower == q(z);
  const Rational certified = pinned ? q(z) : ft_lower;
  out.push_back(make_report(name + "/ft", "ft(T) = spine order (disjoint leg forts meet Z)", Relation::kEqual,
                            certified, expected, {name}));
  out.push_back(make_report(name + "/zstar", "Z*(T) = spine order (squeezed between ft and Z)", Relation::kEqual,
                            certified, expected, {name}));
  out.push_back(make_report(name + "/z", "Z(T) = spine order", Relation::kEqual, q(z), expected, {name}));
  return out;
}

std::vector<BoundReport> verify_families(const InvariantOptions& options) {
  std::vector<BoundReport> out;
  for (long s = 3; s <= 5; ++s) {
    const Graph ps = family::path(s);
    const std::string name = "P" + std::to_string(s) + "xP" + std::to_string(s);
    const GraphInvariants base = graph_invariants(ps, options);
    const Graph prod = cartesian_product(ps, ps);
    const std::size_t z_prod = zero_forcing_number_direct(prod, {prod.order(), options.search.workers}).number;
    const std::size_t cross = transversal_number(hypergraph_cross_product(base.forts, base.forts)).size;
    out.push_back(make_report("gap/" + name + "/z", "Z(P_s x P_s) = s", Relation::kEqual, q(z_prod),
                              s, {name}));
    out.push_back(make_report("gap/" + name + "/cross", "tau(F_P x F_P) + 1 = 2", Relation::kEqual, q(cross + 1), 2,
                              {name}));
    out.push_back(make_report("gap/" + name + "/strict", "Z(P_s x P_s) > tau(F_P x F_P) + 1", Relation::kGreater,
                              q(z_prod), q(cross + 1), {name}));
  }
  for (long k = 2; k <= 3; ++k) {
    const std::string name = "C" + std::to_string(2 * k + 1);
    const GraphInvariants inv = graph_invariants(family::cycle(2 * k + 1), options);
    out.push_back(make_report("midpoint/" + name, "Z*(C_{2k+1}) > (ft + Z) / 2", Relation::kGreater,
                              inv.fractional_zero_forcing(),
                              (q(inv.fort_number()) + q(inv.zero_forcing())) / 2, {name}));
  }
  for (std::size_t spine = 1; spine <= 4; ++spine) {
    for (long a = 1; a <= 3; ++a) {
      for (long b = a; b <= 3; ++b) {
        for (auto& r : double_branch_tree_check(spine, {a, b}, options)) out.push_back(std::move(r));
      }
    }
  }
  return out;
}

}  // namespace zfort
