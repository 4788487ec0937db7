#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lbsim/sweep.hpp"

using namespace lbsim::sweep;
using lbsim::Error;
using lbsim::ParseError;

TEST_CASE("noise specs parse, print, resolve") {
  EpsSpec a = EpsSpec::parse("0");
  CHECK(a.resolve(9) == 0.0);

  EpsSpec b = EpsSpec::parse("1e-3");
  CHECK(b.resolve(20) == 1e-3);

  EpsSpec c = EpsSpec::parse("2^-20");
  CHECK(c.resolve(5) == std::ldexp(1.0, -20));

  EpsSpec d = EpsSpec::parse("2^-n-1");
  CHECK(d.resolve(9) == std::ldexp(1.0, -10));
  CHECK(d.resolve(20) == std::ldexp(1.0, -21));
  CHECK(d.str() == "2^-n-1");

  CHECK(EpsSpec::parse(EpsSpec::absolute(0.25).str()).resolve(3) == 0.25);

  CHECK_THROWS_AS(EpsSpec::parse("banana"), ParseError);
  CHECK_THROWS_AS(EpsSpec::parse("2^-n-x"), ParseError);
  CHECK_THROWS_AS(EpsSpec::parse("-0.5"), ParseError);
  CHECK_THROWS_AS(EpsSpec::parse("1.5"), ParseError);
}

TEST_CASE("ideal-clone ceiling sweep holds everywhere") {
  ExactSweepReport r = exact_bound_sweep(5, 8, 0, 8, 3, 3, 2024);
  CHECK(r.all_hold);
  // crafted one-model, two-model, tautology plus 3 random per n, 9 offsets
  CHECK(r.rows.size() == 4 * 6 * 9);
  bool saw_unsat = false, saw_sat = false;
  for (const auto& row : r.rows) {
    if (!row.applicable) {
      saw_unsat = true;
      CHECK(row.models == 0);
      CHECK(!row.bound.has_value());
      CHECK(row.holds);
    } else {
      saw_sat = true;
      REQUIRE(row.bound.has_value());
      CHECK(row.d_final < *row.bound);
    }
  }
  CHECK(saw_sat);
  (void)saw_unsat;  // random instances at ratio 4 are usually satisfiable
}

TEST_CASE("noisy decay sweep holds with checkpoints") {
  SatSideReport r = sat_side_sweep(7, 12, 10, EpsSpec::pow2_offset(1));
  CHECK(r.all_hold);
  CHECK(r.rows.size() == 6 * 11);
  CHECK(r.milestones.size() == 6);
  for (const auto& row : r.rows) {
    CHECK(row.vacuous == (row.level - row.var_count <= 4));
    if (!row.vacuous) CHECK(row.d < row.bound);
  }
  for (const auto& ms : r.milestones) CHECK(ms.all_hold);
}

TEST_CASE("decay sweep enforces its hypotheses") {
  CHECK_THROWS_AS(sat_side_sweep(5, 6, 8, EpsSpec::pow2_offset(1)), lbsim::HypothesisError);
  CHECK_THROWS_AS(sat_side_sweep(8, 8, 8, EpsSpec::absolute(0.25)), lbsim::HypothesisError);
}

TEST_CASE("drift floor sweep stops at the vacuity point") {
  UnsatSideReport r = unsat_side_sweep(8, 40, EpsSpec::absolute(1.0 / 1024.0));
  CHECK(r.all_hold);
  CHECK(r.first_vacuous_level == 11);  // (2^11 - 1) / 1024 > 1
  CHECK(r.rows.size() == 10);
  CHECK(r.rows[0].level == 1);
  CHECK(r.rows[0].d.to_double() == 1.0 - 1.0 / 1024.0);

  UnsatSideReport tiny = unsat_side_sweep(8, 30, EpsSpec::absolute(1e-12));
  CHECK(tiny.all_hold);
  CHECK(tiny.first_vacuous_level == -1);
  CHECK(tiny.rows.size() == 30);
}

TEST_CASE("error-bound grid flags hypothesis failures instead of dying") {
  MaxBoundGrid g = max_bound_grid(7, 9, 10, 12, {EpsSpec::parse("2^-n-62"), EpsSpec::parse("0.01")});
  CHECK(g.rows.size() == 3 * 3 * 2);
  for (const auto& row : g.rows) {
    if (row.eps_label == "0.01") {
      CHECK(!row.hypotheses_ok);  // 0.01 > 2^-(n+1) for n >= 7
    } else {
      CHECK(row.hypotheses_ok);
      REQUIRE(row.report.has_value());
      if (row.level == row.var_count + 12)
        CHECK(row.report->p_err_bound == lbsim::ExtProb::pow2(-50));
    }
  }
}

TEST_CASE("sweep windows validate") {
  CHECK_THROWS_AS(exact_bound_sweep(5, 4, 0, 2, 1, 3, 1), Error);
  CHECK_THROWS_AS(exact_bound_sweep(5, 6, 3, 2, 1, 3, 1), Error);
  CHECK_THROWS_AS(exact_bound_sweep(5, 30, 0, 2, 1, 3, 1), Error);
  CHECK_THROWS_AS(unsat_side_sweep(8, 63, EpsSpec::absolute(1e-3)), Error);
}
