#include <doctest.h>

#include <random>

#include "zfort/errors.hpp"
#include "zfort/families.hpp"
#include "zfort/forts.hpp"
#include "zfort/hypergraph_opt.hpp"
#include "zfort/lp.hpp"
#include "zfort/rational.hpp"

using namespace zfort;
using lp::Constraint;
using lp::LinearProgram;
using lp::RowSense;
using lp::Status;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

LinearProgram pair_cover(std::size_t n) {
  LinearProgram p;
  p.objective.assign(n, q(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Rational> row(n, q(0));
      row[i] = row[j] = 1;
      p.constraints.push_back({row, RowSense::kGreaterEqual, q(1)});
    }
  }
  return p;
}

bool feasible(const LinearProgram& p, const std::vector<Rational>& x) {
  for (const auto& c : p.constraints) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += c.coefficients[j] * x[j];
    if (c.sense == RowSense::kLessEqual && s > c.rhs) return false;
    if (c.sense == RowSense::kGreaterEqual && s < c.rhs) return false;
    if (c.sense == RowSense::kEqual && s != c.rhs) return false;
  }
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("lp-exact") {
  TEST_CASE("rationals") {
    CHECK(to_string(q(10, 4)) == "5/2");
    CHECK(to_string(q(-6, 3)) == "-2");
    CHECK(to_string(q(0, 7)) == "0");
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(parse_rational("-3") == q(-3));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK(floor(q(-5, 2)) == -3);
    CHECK(ceil(q(5, 2)) == 3);
  }

  TEST_CASE("log brackets") {
    CHECK(log_lower_bound(1) == 0);
    CHECK(log_upper_bound(1) == 0);
    for (long d : {2L, 3L, 5L, 8L, 10L, 64L, 1000L, 123457L}) {
      const Rational lo = log_lower_bound(d), hi = log_upper_bound(d);
      CHECK(lo < hi);
      CHECK(hi - lo < q(1, 1L << 40));
      CHECK(lo.get_d() <= std::log(static_cast<double>(d)) + 1e-12);
      CHECK(hi.get_d() >= std::log(static_cast<double>(d)) - 1e-12);
    }
    // ln 2 = 0.6931471805599453094172321...
    CHECK(log_lower_bound(2) < Rational("6931471805599453094172322/10000000000000000000000000"));
    CHECK(log_upper_bound(2) > Rational("6931471805599453094172321/10000000000000000000000000"));
  }

  TEST_CASE("small programs") {
    LinearProgram one;
    one.objective = {q(1)};
    one.constraints = {{{q(1)}, RowSense::kGreaterEqual, q(1)}};
    const auto s1 = lp::solve(one);
    CHECK(s1.status == Status::kOptimal);
    CHECK(s1.value == 1);

    const auto s3 = lp::solve(pair_cover(3));
    CHECK(s3.value == q(3, 2));
    CHECK(lp::verify_certificate(pair_cover(3), s3));

    const auto c5 = lp::solve(transversal_lp(minimal_forts(family::cycle(5))));
    CHECK(c5.value == q(5, 3));
  }

  TEST_CASE("statuses") {
    LinearProgram inf;
    inf.objective = {q(1)};
    inf.constraints = {{{q(1)}, RowSense::kLessEqual, q(-1)}};
    CHECK(lp::solve(inf).status == Status::kInfeasible);

    LinearProgram unb;
    unb.direction = lp::Direction::kMaximize;
    unb.objective = {q(1)};
    unb.constraints = {{{q(1)}, RowSense::kGreaterEqual, q(1)}};
    CHECK(lp::solve(unb).status == Status::kUnbounded);
    CHECK_THROWS_AS(lp::coordinate_range_at_optimum(unb, 0), lp::NoOptimum);

    LinearProgram bad;
    bad.objective = {q(1), q(1)};
    bad.constraints = {{{q(1)}, RowSense::kLessEqual, q(1)}};
    CHECK_THROWS_AS(lp::solve(bad), InputError);
  }

  TEST_CASE("upper bounds and equality rows") {
    LinearProgram p;
    p.direction = lp::Direction::kMaximize;
    p.objective = {q(3), q(2)};
    p.constraints = {{{q(1), q(1)}, RowSense::kEqual, q(3, 2)}};
    p.upper_bounds = {q(1), std::nullopt};
    const auto s = lp::solve(p);
    CHECK(s.status == Status::kOptimal);
    CHECK(s.value == q(4));
    CHECK(s.primal == std::vector<Rational>{q(1), q(1, 2)});
    CHECK(lp::verify_certificate(p, s));
  }

  TEST_CASE("optimal face ranges") {
    const auto k3 = transversal_lp(minimal_forts(family::complete(3)));
    for (std::size_t i = 0; i < 3; ++i) {
      const auto [lo, hi] = lp::coordinate_range_at_optimum(k3, i);
      CHECK(lo == q(1, 2));
      CHECK(hi == q(1, 2));
    }
    // Vertex 1 lies in no minimal fort of P3, so it carries no variable; give
    // it one by hand to see it pinned at zero.
    lp::LinearProgram p3;
    p3.objective = {q(1), q(1), q(1)};
    p3.constraints = {{{q(1), q(0), q(1)}, RowSense::kGreaterEqual, q(1)}};
    p3.upper_bounds.assign(3, q(1));
    const auto [lo0, hi0] = lp::coordinate_range_at_optimum(p3, 0);
    CHECK(lo0 == 0);
    CHECK(hi0 == 1);
    const auto [lo1, hi1] = lp::coordinate_range_at_optimum(p3, 1);
    CHECK(lo1 == 0);
    CHECK(hi1 == 0);
    const auto tp3 = transversal_lp(minimal_forts(family::path(3)));
    CHECK(tp3.variable_count() == 2);
    CHECK(lp::coordinate_range_at_optimum(tp3, 0) == std::pair<Rational, Rational>{q(0), q(1)});

    const auto g = transversal_lp(minimal_forts(family::join_clique_union(2, 3, 1)));
    const auto [lc, hc] = lp::coordinate_range_at_optimum(g, 6);
    CHECK(lc == 0);
    CHECK(hc == 0);
  }

  TEST_CASE("random programs: certificates, feasibility, duality, scaling") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
      const std::size_t vars = 2 + rng() % 4, rows = 1 + rng() % 4;
      LinearProgram p;
      for (std::size_t j = 0; j < vars; ++j) p.objective.push_back(q(1 + static_cast<long>(rng() % 5)));
      for (std::size_t r = 0; r < rows; ++r) {
        Constraint c;
        for (std::size_t j = 0; j < vars; ++j) c.coefficients.push_back(q(static_cast<long>(rng() % 4)));
        c.sense = RowSense::kGreaterEqual;
        c.rhs = q(static_cast<long>(rng() % 5));
        p.constraints.push_back(c);
      }
      const auto s = lp::solve(p);
      if (s.status != Status::kOptimal) continue;
      CHECK(lp::verify_certificate(p, s));
      CHECK(feasible(p, s.primal));
      Rational dual_value = 0;
      for (std::size_t r = 0; r < rows; ++r) dual_value += p.constraints[r].rhs * s.dual[r];
      CHECK(dual_value == s.value);

      LinearProgram scaled = p;
      const Rational factor = q(3, 7);
      for (auto& c : scaled.objective) c *= factor;
      const auto t = lp::solve(scaled);
      CHECK(t.value == s.value * factor);
      CHECK(t.primal == s.primal);
    }
  }
}
