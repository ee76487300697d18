#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "zfort/bounds.hpp"
#include "zfort/census.hpp"
#include "zfort/errors.hpp"
#include "zfort/families.hpp"
#include "zfort/forcing.hpp"
#include "zfort/forts.hpp"
#include "zfort/graph_io.hpp"
#include "zfort/hypergraph_opt.hpp"
#include "zfort/star_clique.hpp"
#include "zfort/witness.hpp"

namespace zfort::cli {

namespace {

using nlohmann::json;

struct GraphSource {
  std::string family;
  std::vector<long> params;
  std::string file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NamedGraph load_graph(const GraphSource& src, const std::string& family_flag, const std::string& file_flag) {
  if (!src.family.empty() && !src.file.empty()) {
    throw InputError("give either " + family_flag + " or " + file_flag + ", not both");
  }
  if (!src.file.empty()) return {"file:" + src.file, parse_graph(read_file(src.file))};
  if (src.family.empty()) throw InputError("no graph given: use " + family_flag + " or " + file_flag);
  std::string name = src.family;
  if (!src.params.empty()) {
    name += "(";
    for (std::size_t i = 0; i < src.params.size(); ++i) name += (i ? "," : "") + std::to_string(src.params[i]);
    name += ")";
  }
  return {name, family::make(src.family, src.params)};
}

std::vector<std::size_t> members(const VertexSet& s) { return s.members(); }

json set_list(const std::vector<VertexSet>& sets) {
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(members(s));
  return arr;
}

json graph_json(const NamedGraph& g) {
  return {{"name", g.name}, {"order", g.graph.order()}, {"edges", g.graph.edge_count()}};
}

std::string graph_line(const NamedGraph& g) {
  return "graph: " + g.name + " (order " + std::to_string(g.graph.order()) + ", " +
         std::to_string(g.graph.edge_count()) + " edges)";
}

json report_json(const BoundReport& r) {
  return {{"bound", r.bound},         {"citation", r.citation},     {"relation", to_string(r.relation)},
          {"left", to_string(r.left)}, {"right", to_string(r.right)}, {"holds", r.holds},
          {"sharp", r.sharp},         {"applicable", r.applicable}, {"conjecture", r.conjecture},
          {"inputs", r.inputs}};
}

const char* status_tag(const BoundReport& r) {
  if (!r.applicable) return "N/A ";
  if (r.holds) return "PASS";
  return r.conjecture ? "CEX " : "FAIL";
}

std::string report_line(const BoundReport& r) {
  std::string line = std::string("[") + status_tag(r) + "] " + r.bound + ": " + r.citation;
  if (r.applicable) {
    line += " | " + to_string(r.left) + " " + to_string(r.relation) + " " + to_string(r.right);
    if (r.sharp && r.relation != Relation::kEqual) line += " (sharp)";
  }
  return line;
}

bool all_hold(const std::vector<BoundReport>& reports) {
  for (const auto& r : reports) {
    if (r.applicable && !r.holds) return false;
  }
  return true;
}

int emit_reports(const std::vector<BoundReport>& reports, const RunConfig& cfg, std::ostream& out) {
  const bool ok = all_hold(reports);
  if (cfg.format == Format::kJson) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    out << arr.dump(2) << "\n";
  } else {
    std::size_t failed = 0;
    for (const auto& r : reports) {
      out << report_line(r) << "\n";
      if (r.applicable && !r.holds) ++failed;
    }
    out << "summary: " << reports.size() << " checks, " << failed << " failed\n";
  }
  return ok ? kPass : kMismatch;
}

InvariantOptions invariant_options(const RunConfig& cfg, std::size_t order) {
  InvariantOptions o;
  o.forts = {cfg.enumeration_cap, cfg.workers};
  o.search = {cfg.search_cap, cfg.workers};
  o.check_direct = order <= cfg.search_cap;
  return o;
}

int cmd_compute(const NamedGraph& g, std::vector<std::string> which, bool all, const RunConfig& cfg,
                std::ostream& out) {
  const std::vector<std::string> everything{"z", "ft", "zstar", "forts", "invariants"};
  if (all) which = everything;
  if (which.empty()) which = {"z", "ft", "zstar"};
  std::set<std::string> want(which.begin(), which.end());
  for (const auto& w : want) {
    if (std::find(everything.begin(), everything.end(), w) == everything.end()) {
      throw InputError("unknown --which value '" + w + "'");
    }
  }

  json j;
  j["graph"] = graph_json(g);
  std::vector<std::string> lines{graph_line(g)};
  const bool need_forts = want.size() > 1 || !want.count("z");
  if (!need_forts) {
    const ZeroForcingResult z = zero_forcing_number_direct(g.graph, {cfg.search_cap, cfg.workers});
    j["z"] = z.number;
    j["zero_forcing_set"] = members(z.set);
    lines.push_back("z=" + std::to_string(z.number));
    lines.push_back("zero_forcing_set=" + z.set.to_string());
  } else {
    const GraphInvariants inv = graph_invariants(g.graph, invariant_options(cfg, g.graph.order()));
    const auto& v = inv.values;
    if (want.count("z")) {
      j["z"] = v.tau;
      lines.push_back("z=" + std::to_string(v.tau));
    }
    if (want.count("ft")) {
      j["ft"] = v.mu;
      lines.push_back("ft=" + std::to_string(v.mu));
    }
    if (want.count("zstar")) {
      j["zstar"] = to_string(v.tau_star);
      lines.push_back("zstar=" + to_string(v.tau_star));
    }
    if (want.count("forts")) {
      j["forts"] = set_list(inv.forts.edges());
      lines.push_back("forts=" + std::to_string(inv.forts.edge_count()));
      for (const auto& f : inv.forts.edges()) lines.push_back("  " + f.to_string());
    }
    if (want.count("invariants")) {
      json w = json::array();
      for (const auto& x : v.vertex_weights) w.push_back(to_string(x));
      json e = json::array();
      for (const auto& x : v.edge_weights) e.push_back(to_string(x));
      Rational lower(static_cast<unsigned long>(v.edge_count), static_cast<unsigned long>(v.max_degree));
      Rational upper(static_cast<unsigned long>(v.vertex_count), static_cast<unsigned long>(v.min_edge_size));
      lower.canonicalize();
      upper.canonicalize();
      j["invariants"] = {{"tau", v.tau},
                         {"mu", v.mu},
                         {"tau_star", to_string(v.tau_star)},
                         {"mu_star", to_string(v.mu_star)},
                         {"alpha", v.alpha},
                         {"edge_count", v.edge_count},
                         {"vertex_count", v.vertex_count},
                         {"max_degree", v.max_degree},
                         {"min_edge_size", v.min_edge_size},
                         {"uniform_k", v.uniform_k ? json(*v.uniform_k) : json(nullptr)},
                         {"regular_d", v.regular_d ? json(*v.regular_d) : json(nullptr)},
                         {"lower_ratio", to_string(lower)},
                         {"upper_ratio", to_string(upper)},
                         {"transversal", members(v.transversal)},
                         {"matching", set_list(v.matching)},
                         {"vertex_weights", w},
                         {"edge_weights", e}};
      lines.push_back("tau=" + std::to_string(v.tau) + " mu=" + std::to_string(v.mu) +
                      " tau_star=" + to_string(v.tau_star) + " mu_star=" + to_string(v.mu_star) +
                      " alpha=" + std::to_string(v.alpha));
      lines.push_back("edges=" + std::to_string(v.edge_count) + " vertices=" + std::to_string(v.vertex_count) +
                      " max_degree=" + std::to_string(v.max_degree) +
                      " min_edge_size=" + std::to_string(v.min_edge_size) +
                      " uniform=" + (v.uniform_k ? std::to_string(*v.uniform_k) : "no") +
                      " regular=" + (v.regular_d ? std::to_string(*v.regular_d) : "no"));
      lines.push_back("m/delta=" + to_string(lower) + " <= zstar <= n'/k=" + to_string(upper));
      lines.push_back("transversal=" + v.transversal.to_string());
      std::string m;
      for (const auto& s : v.matching) m += (m.empty() ? "" : " ") + s.to_string();
      lines.push_back("matching=" + m);
    }
  }
  if (cfg.format == Format::kJson) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& l : lines) out << l << "\n";
  }
  return kPass;
}

int cmd_product(const NamedGraph& g, const NamedGraph& h, bool battery, const RunConfig& cfg, std::ostream& out) {
  if (battery) {
    BatteryOptions opts;
    opts.invariants = invariant_options(cfg, std::max(g.graph.order(), h.graph.order()));
    opts.product_cap = cfg.enumeration_cap;
    return emit_reports(product_bound_battery(g, h, opts), cfg, out);
  }
  const std::size_t order = g.graph.order() * h.graph.order();
  if (order > cfg.enumeration_cap) {
    throw CapExceeded("product order " + std::to_string(order) + " exceeds enumeration cap " +
                      std::to_string(cfg.enumeration_cap));
  }
  const NamedGraph p{g.name + " x " + h.name, cartesian_product(g.graph, h.graph)};
  return cmd_compute(p, {}, false, cfg, out);
}

std::vector<BoundReport> converse_reports(const std::vector<ConverseCandidate>& found) {
  std::vector<BoundReport> out;
  for (const auto& c : found) {
    const std::string key = to_graph6(c.graph);
    BoundReport r = make_report("converse/" + key, "Z(K_2 x G) = Z(G) + 1 only for star-clique paths",
                                Relation::kEqual, Rational(static_cast<unsigned long>(c.z_product)),
                                Rational(static_cast<unsigned long>(c.z + 1)), {"graph6:" + key});
    r.holds = r.holds && c.star_clique;
    out.push_back(std::move(r));
  }
  return out;
}

int cmd_witness(const NamedGraph& g, const RunConfig& cfg, std::ostream& out) {
  const Hypergraph forts = minimal_forts(g.graph, {cfg.enumeration_cap, cfg.workers});
  const MatchingResult disjoint = matching_number(forts);
  const PatternMatrix a = disjoint_forts_witness(g.graph, disjoint.edges);
  const std::size_t nullity = exact_nullity(a);
  const bool pattern = has_graph_pattern(a, g.graph);
  bool kills = true;
  for (const auto& f : disjoint.edges) kills = kills && annihilates(a, f);
  const bool ok = pattern && kills && nullity >= disjoint.size;
  if (cfg.format == Format::kJson) {
    json m = json::array();
    for (const auto& row : a.entries) {
      json jr = json::array();
      for (const auto& x : row) jr.push_back(to_string(x));
      m.push_back(jr);
    }
    json j{{"graph", graph_json(g)},   {"ft", disjoint.size},      {"forts", set_list(disjoint.edges)},
           {"matrix", m},              {"nullity", nullity},       {"pattern_ok", pattern},
           {"annihilates_forts", kills}, {"certified", ok}};
    out << j.dump(2) << "\n";
  } else {
    out << graph_line(g) << "\n";
    out << "ft=" << disjoint.size << "\n";
    out << "forts=";
    for (std::size_t i = 0; i < disjoint.edges.size(); ++i) out << (i ? " " : "") << disjoint.edges[i].to_string();
    out << "\n";
    out << "matrix:\n";
    for (const auto& row : a.entries) {
      out << " ";
      for (const auto& x : row) out << " " << to_string(x);
      out << "\n";
    }
    out << "pattern " << (pattern ? "ok" : "MISMATCH") << ", forts " << (kills ? "annihilated" : "NOT annihilated")
        << "\n";
    out << "nullity=" << nullity << (ok ? " >= " : " < ") << "ft=" << disjoint.size << "\n";
  }
  return ok ? kPass : kMismatch;
}

void add_source(CLI::App* cmd, GraphSource& src, const std::string& suffix) {
  cmd->add_option("--family" + suffix, src.family, "graph family: " + [] {
    std::string s;
    for (const auto& n : family::names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  cmd->add_option("--n" + suffix, src.params, "family parameters")->expected(1, 64);
  cmd->add_option("--file" + suffix, src.file, "edge list ('n N' then 'u v' lines) or graph6");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zero forcing, forts and fractional zero forcing"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap-enum", cfg.enumeration_cap, "largest order for fort enumeration")
      ->check(CLI::Range(std::size_t{1}, kHardEnumerationCap));
  app.add_option("--cap-search", cfg.search_cap, "largest order for direct zero forcing search")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  app.add_option("--seed", cfg.seed, "seed for random sweeps");

  GraphSource src, src2;
  std::vector<std::string> which;
  bool all = false;
  auto* compute = app.add_subcommand("compute", "invariants of one graph");
  add_source(compute, src, "");
  compute->add_option("--which", which, "any of z, ft, zstar, forts, invariants")->delimiter(',');
  compute->add_flag("--all", all, "everything");

  bool battery = false;
  auto* product = app.add_subcommand("product", "Cartesian product of two graphs");
  add_source(product, src, "");
  add_source(product, src2, "2");
  product->add_flag("--battery", battery, "evaluate every product bound");

  auto* witness = app.add_subcommand("witness", "matrix whose null space holds disjoint fort vectors");
  add_source(witness, src, "");

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* v_table = verify->add_subcommand("table1", "family values against their closed forms");
  auto* v_families = verify->add_subcommand("families", "gap, midpoint and double branch tree checks");
  std::string spec_text;
  std::vector<std::size_t> rs{2, 3};
  std::size_t max_blocks = 3, max_size = 4, product_cap = kStarCliqueProductCap;
  auto* v_star = verify->add_subcommand("starclique", "star-clique path formulas");
  v_star->add_option("--spec", spec_text, "one path, e.g. clique3,star4 (default: all small specs)");
  v_star->add_option("--r", rs, "complete factor orders")->expected(1, 8);
  v_star->add_option("--max-blocks", max_blocks)->check(CLI::Range(1, 4));
  v_star->add_option("--max-size", max_size)->check(CLI::Range(2, 6));
  v_star->add_option("--product-cap", product_cap)->check(CLI::Range(1, 64));
  std::size_t max_order = 5;
  std::string census_file;
  auto* v_converse = verify->add_subcommand("converse", "graphs with Z(K_2 x G) = Z(G) + 1");
  v_converse->add_option("--max-order", max_order)->check(CLI::Range(std::size_t{1}, kConverseOrderCap));
  v_converse->add_option("--census", census_file, "graph6 lines to scan instead of the generated census");
  std::size_t m = 5;
  auto* v_diag = verify->add_subcommand("diagonals", "disjoint diagonal forts of C_m x C_m");
  v_diag->add_option("--m", m, "odd, 3..7");
  std::size_t oracle_order = 7, random_count = 200, random_order = 10;
  auto* v_oracle = verify->add_subcommand("oracle", "tau(F_G) against direct Z, duality and the chain");
  v_oracle->add_option("--max-order", oracle_order)->check(CLI::Range(std::size_t{1}, kCensusOrderCap));
  v_oracle->add_option("--random", random_count);
  v_oracle->add_option("--max-random-order", random_order)->check(CLI::Range(1, 16));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  cfg.format = format == "json" ? Format::kJson : Format::kText;

  try {
    if (*compute) return cmd_compute(load_graph(src, "--family", "--file"), which, all, cfg, out);
    if (*product) {
      return cmd_product(load_graph(src, "--family", "--file"), load_graph(src2, "--family2", "--file2"), battery,
                         cfg, out);
    }
    if (*witness) return cmd_witness(load_graph(src, "--family", "--file"), cfg, out);
    const InvariantOptions opts = invariant_options(cfg, 0);
    if (*v_table) {
      InvariantOptions o = opts;
      o.check_direct = true;
      return emit_reports(verify_table1(o), cfg, out);
    }
    if (*v_families) {
      InvariantOptions o = opts;
      o.check_direct = true;
      return emit_reports(verify_families(o), cfg, out);
    }
    if (*v_star) {
      std::vector<StarCliqueCheck> checks;
      if (!spec_text.empty()) {
        checks.push_back(star_clique_verify(parse_star_clique_spec(spec_text), rs, product_cap, cfg.workers));
      } else {
        checks = star_clique_suite(max_blocks, max_size, rs, product_cap, cfg.workers);
      }
      std::vector<BoundReport> reports;
      for (auto& c : checks) {
        reports.push_back(c.z_formula);
        for (auto& r : c.product_formula) reports.push_back(r);
      }
      return emit_reports(reports, cfg, out);
    }
    if (*v_converse) {
      std::vector<ConverseCandidate> found;
      if (!census_file.empty()) {
        std::vector<Graph> census;
        std::istringstream lines(read_file(census_file));
        for (std::string line; std::getline(lines, line);) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (!line.empty()) census.push_back(parse_graph6(line));
        }
        found = converse_scan(census, cfg.workers);
      } else {
        found = converse_scan(max_order, cfg.workers);
      }
      return emit_reports(converse_reports(found), cfg, out);
    }
    if (*v_diag) return emit_reports({diagonal_forts_check(m)}, cfg, out);
    if (*v_oracle) {
      OracleOptions o{oracle_order, random_count, random_order, cfg.seed, opts};
      return emit_reports(oracle_sweep(o), cfg, out);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kInputError;
}

}  // namespace zfort::cli
