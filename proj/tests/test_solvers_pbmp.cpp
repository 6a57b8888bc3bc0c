#include <doctest.h>

#include <random>

#include "bordermin/solvers.hpp"
#include "support/testutil.hpp"

using namespace bordermin;

TEST_CASE("alternating 1x3 optimum is 4 with the a-first sequence") {
  const Instance inst(Alphabet("ab"), 1, 3, {"a", "b", "a"});
  const Solution sol = solve_pbmp(inst, Placement::identity(1, 3));
  CHECK(sol.border_length == 4);
  CHECK(sol.deposition == "ab");
  CHECK(verify_solution(inst, sol));
}

TEST_CASE("identical probes embed for free") {
  const Instance inst(Alphabet("ACT"), 2, 2, {"CAT", "CAT", "CAT", "CAT"});
  const Solution sol = solve_pbmp(inst, Placement::identity(2, 2));
  CHECK(sol.border_length == 0);
  CHECK(sol.deposition == "CAT");
}

TEST_CASE("golden 2x2 placement optimum matches brute force at 10") {
  const Instance inst(Alphabet("ACT"), 2, 2, {"CA", "CT", "TA", "AC"});
  const Placement placement = Placement::identity(2, 2);
  const Solution sol = solve_pbmp(inst, placement);
  const testutil::BruteResult brute = testutil::brute_pbmp(inst, placement);
  CHECK(sol.border_length == 10);
  CHECK(sol.border_length == brute.bl);
  // Two optimal sequences exist (ACTA and CTAC); the tie-break takes the
  // lexicographically smaller one.
  CHECK(sol.deposition == brute.deposition);
  CHECK(sol.deposition == "ACTA");
}

TEST_CASE("fixed-placement solver matches brute force on random instances") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(testutil::draw_below(rng, 2));
    const int cols = 1 + static_cast<int>(testutil::draw_below(rng, 3));
    const Instance inst = testutil::random_instance(rng, rows, cols, "ABC", 3);
    const Placement placement = testutil::random_placement(rng, rows, cols);
    const Solution sol = solve_pbmp(inst, placement);
    const testutil::BruteResult brute = testutil::brute_pbmp(inst, placement);
    CHECK(sol.border_length == brute.bl);
    CHECK(sol.deposition == brute.deposition);
  }
}

TEST_CASE("placement dimensions are validated") {
  const Instance inst(Alphabet("A"), 1, 2, {"A", "A"});
  CHECK_THROWS_AS(solve_pbmp(inst, Placement::identity(2, 1)), Error);
}

TEST_CASE("node budget failures are loud") {
  const Instance inst(Alphabet("ABC"), 2, 3, {"ABC", "BCA", "CAB", "ACB", "BAC", "CBA"});
  SolverOptions options;
  options.limits.node_budget = 50;
  CHECK_THROWS_AS(solve_pbmp(inst, Placement::identity(2, 3), options), Error);
}

TEST_CASE("budgeted solver on the alternating 1x3 instance") {
  const Instance inst(Alphabet("ab"), 1, 3, {"a", "b", "a"});
  const Placement placement = Placement::identity(1, 3);
  const auto at4 = solve_pbmp_budget(inst, placement, 4);
  REQUIRE(at4.has_value());
  CHECK(at4->border_length == 4);
  CHECK(at4->deposition == "ab");
  CHECK_FALSE(solve_pbmp_budget(inst, placement, 3).has_value());
}

TEST_CASE("identical probes solve at budget zero through the empty primal") {
  const Instance inst(Alphabet("AB"), 2, 2, {"AB", "AB", "AB", "AB"});
  const auto sol = solve_pbmp_budget(inst, Placement::identity(2, 2), 0);
  REQUIRE(sol.has_value());
  CHECK(sol->border_length == 0);
  CHECK(sol->deposition == "AB");
}

TEST_CASE("too many distinct probes are rejected without search") {
  const Instance inst(Alphabet("ABC"), 1, 3, {"A", "B", "C"});
  SolveStats stats;
  CHECK_FALSE(solve_pbmp_budget(inst, Placement::identity(1, 3), 1, {}, &stats).has_value());
  CHECK(stats.branches == 0);
  CHECK(stats.candidates == 0);
}

TEST_CASE("budget semantics bracket the optimum") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int rows = 1 + static_cast<int>(testutil::draw_below(rng, 2));
    const int cols = 1 + static_cast<int>(testutil::draw_below(rng, 3));
    const Instance inst = testutil::random_instance(rng, rows, cols, "AB", 3);
    const Placement placement = testutil::random_placement(rng, rows, cols);
    const long long opt = solve_pbmp(inst, placement).border_length;
    for (long long o : {opt - 1, opt, opt + 1}) {
      if (o < 0) continue;
      const auto sol = solve_pbmp_budget(inst, placement, o);
      if (o >= opt) {
        REQUIRE(sol.has_value());
        CHECK(sol->border_length == opt);
      } else {
        CHECK_FALSE(sol.has_value());
      }
    }
  }
}

TEST_CASE("budgeted result is stable above the threshold") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    const Instance inst = testutil::random_instance(rng, 2, 2, "AB", 2);
    const Placement placement = testutil::random_placement(rng, 2, 2);
    const long long opt = solve_pbmp(inst, placement).border_length;
    const auto base = solve_pbmp_budget(inst, placement, opt);
    REQUIRE(base.has_value());
    for (long long extra = 1; extra <= 3; ++extra) {
      const auto sol = solve_pbmp_budget(inst, placement, opt + extra);
      REQUIRE(sol.has_value());
      CHECK(sol->border_length == base->border_length);
      CHECK(sol->deposition == base->deposition);
    }
  }
}
