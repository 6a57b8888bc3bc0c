#include <doctest.h>

#include <random>

#include "bordermin/solvers.hpp"
#include "support/testutil.hpp"

using namespace bordermin;

TEST_CASE("oracle pairs identical probes on the 2x2 array") {
  const Instance inst(Alphabet("AB"), 2, 2, {"A", "A", "B", "B"});
  const Solution sol = solve_bmp_oracle(inst);
  CHECK(sol.border_length == 4);
  CHECK(sol.deposition == "AB");
  CHECK(verify_solution(inst, sol));
  CHECK(sol.border_length == testutil::brute_bmp_value(inst));
}

TEST_CASE("oracle on a single cell") {
  const Instance inst(Alphabet("A"), 1, 1, {"A"});
  CHECK(solve_bmp_oracle(inst).border_length == 0);
}

TEST_CASE("oracle groups the duplicate probes of the 1x3 multiset") {
  // With the placement free, the two copies of "a" sit together, unlike the
  // fixed alternating placement whose optimum is 4.
  const Instance inst(Alphabet("ab"), 1, 3, {"a", "b", "a"});
  const Solution sol = solve_bmp_oracle(inst);
  CHECK(sol.border_length == 2);
  CHECK(sol.border_length == testutil::brute_bmp_value(inst));
}

TEST_CASE("oracle refuses oversized instances") {
  const Instance inst(Alphabet("A"), 3, 3, std::vector<std::string>(9, "A"));
  CHECK_THROWS_AS(solve_bmp_oracle(inst), Error);
  SolverOptions options;
  options.oracle_cell_cap = 9;
  CHECK(solve_bmp_oracle(inst, options).border_length == 0);
}

TEST_CASE("column decomposition and the consecutive predicate") {
  const Instance inst(Alphabet("AB"), 1, 3, {"A", "B", "A"});
  CHECK(decompose_columns(inst, Placement::identity(1, 3)) ==
        std::vector<ColumnPlacement>{{0}, {1}, {0}});  // probes A,B,A -> distinct ids
  CHECK_FALSE(is_consecutive(inst, Placement::identity(1, 3)));
  CHECK(is_consecutive(inst, Placement(1, 3, {0, 2, 1})));
}

TEST_CASE("stray duplicate columns move next to their block") {
  const Instance inst(Alphabet("AB"), 1, 3, {"A", "B", "A"});
  const Placement scattered = Placement::identity(1, 3);  // A B A
  const Placement grouped = make_consecutive(inst, scattered, "AB");
  CHECK(is_consecutive(inst, grouped));
  CHECK(grouped == Placement(1, 3, {0, 2, 1}));  // A A B
  const long long before = compute_bl(inst, scattered, "AB", BorderMethod::kFast);
  const long long after = compute_bl(inst, grouped, "AB", BorderMethod::kFast);
  CHECK(before == 4);
  CHECK(after == 2);

  // Fixpoint on an already consecutive placement.
  CHECK(make_consecutive(inst, grouped, "AB") == grouped);
}

TEST_CASE("consecutive normalization never raises the cost") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = 1 + static_cast<int>(testutil::draw_below(rng, 2));
    const int cols = 2 + static_cast<int>(testutil::draw_below(rng, 3));
    const Instance inst = testutil::random_instance(rng, rows, cols, "AB", 2);
    const Placement placement = testutil::random_placement(rng, rows, cols);
    const std::string dep = testutil::random_good_deposition(rng, inst);
    const Placement grouped = make_consecutive(inst, placement, dep);
    CHECK(is_consecutive(inst, grouped));
    CHECK(compute_bl(inst, grouped, dep, BorderMethod::kFast) <=
          compute_bl(inst, placement, dep, BorderMethod::kFast));
  }
}

TEST_CASE("multiplicity program of the two-column-type 2x4 instance") {
  const Instance inst(Alphabet("AB"), 2, 4, {"A", "A", "A", "A", "B", "B", "B", "B"});
  // Distinct ids: 0 = "A", 1 = "B"; template is one all-A and one all-B column.
  const Template tpl{{0, 0}, {1, 1}};
  const IntegerProgram program = build_multiplicity_program(inst, "AB", tpl);
  const auto sol = solve_min(program);
  REQUIRE(sol.has_value());
  CHECK(sol->assignment == std::vector<long long>{2, 2});
  CHECK(sol->objective_value == 0);
}

TEST_CASE("template solver on block instances") {
  const Instance inst(Alphabet("AB"), 2, 4, {"A", "A", "A", "A", "B", "B", "B", "B"});
  const Solution sol = solve_bmp_template(inst);
  CHECK(sol.border_length == 4);
  CHECK(sol.deposition == "AB");
  CHECK(verify_solution(inst, sol));
  CHECK(is_consecutive(inst, sol.placement));
}

TEST_CASE("template solver on identical probes") {
  const Instance inst(Alphabet("AB"), 2, 2, {"AB", "AB", "AB", "AB"});
  const Solution sol = solve_bmp_template(inst);
  CHECK(sol.border_length == 0);
}

TEST_CASE("template solver agrees with the oracle on the 1x3 multiset") {
  const Instance inst(Alphabet("ab"), 1, 3, {"a", "b", "a"});
  CHECK(solve_bmp_template(inst).border_length == solve_bmp_oracle(inst).border_length);
}

TEST_CASE("template solver agrees with the oracle on random instances") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const int rows = 1 + static_cast<int>(testutil::draw_below(rng, 2));
    const int cols = 1 + static_cast<int>(testutil::draw_below(rng, 3));
    const Instance inst = testutil::random_instance(rng, rows, cols, "ABC", 2);
    CHECK(solve_bmp_template(inst).border_length == solve_bmp_oracle(inst).border_length);
  }
}

TEST_CASE("the best consecutive placement is globally optimal on small instances") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = testutil::random_instance(rng, 2, 3, "AB", 2);
    // Unrestricted brute force over all slot permutations.
    const long long unrestricted = testutil::brute_bmp_value(inst);
    // Restricted to consecutive placements.
    std::vector<int> slots(6);
    for (int i = 0; i < 6; ++i) slots[i] = i;
    std::optional<long long> consecutive_best;
    do {
      const Placement placement(2, 3, slots);
      if (!is_consecutive(inst, placement)) continue;
      const long long bl = testutil::brute_pbmp(inst, placement).bl;
      if (!consecutive_best || bl < *consecutive_best) consecutive_best = bl;
    } while (std::next_permutation(slots.begin(), slots.end()));
    CHECK(*consecutive_best == unrestricted);
  }
}

TEST_CASE("enveloping probe detection") {
  std::vector<std::string> probes(102, "A");
  probes[100] = "B";
  probes[101] = "B";
  const Instance skewed(Alphabet("AB"), 6, 17, probes);
  CHECK(enveloping_probe(skewed, 2) == "A");

  std::vector<std::string> half(100, "A");
  std::fill(half.begin() + 50, half.end(), "B");
  const Instance split(Alphabet("AB"), 10, 10, half);
  CHECK_FALSE(enveloping_probe(split, 2).has_value());

  const Instance uniform(Alphabet("A"), 2, 2, {"A", "A", "A", "A"});
  CHECK(enveloping_probe(uniform, 0) == "A");
}

TEST_CASE("budgeted solver, both dimensions small: 5x5 with one outlier") {
  std::vector<std::string> probes(25, "A");
  probes[12] = "B";
  const Instance inst(Alphabet("AB"), 5, 5, probes);
  const auto sol = solve_bmp_budget(inst, 4);
  REQUIRE(sol.has_value());
  CHECK(sol->border_length == 4);  // the outlier lands in a corner
  CHECK(verify_solution(inst, *sol));
  CHECK_FALSE(solve_bmp_budget(inst, 3).has_value());
}

TEST_CASE("budgeted solver matches the oracle on the 1x3 multiset") {
  const Instance inst(Alphabet("ab"), 1, 3, {"a", "b", "a"});
  const auto sol = solve_bmp_budget(inst, 4);
  REQUIRE(sol.has_value());
  CHECK(sol->border_length == 2);
  CHECK_FALSE(solve_bmp_budget(inst, 1).has_value());
}

TEST_CASE("distinct neighbors force a positive budget") {
  std::vector<std::string> probes(9, "A");
  probes[0] = "B";
  const Instance inst(Alphabet("AB"), 3, 3, probes);
  CHECK_FALSE(solve_bmp_budget(inst, 0).has_value());
}

TEST_CASE("budgeted solver, both dimensions large: majority with one outlier") {
  // 9x9 with a single distinct cell; the corner costs 2 border pairs of
  // Hamming distance 2 each.
  std::vector<std::string> probes(81, "A");
  probes[40] = "B";
  const Instance inst(Alphabet("AB"), 9, 9, probes);
  const auto sol = solve_bmp_budget(inst, 4);
  REQUIRE(sol.has_value());
  CHECK(sol->border_length == 4);
  CHECK(verify_solution(inst, *sol));
  CHECK_FALSE(solve_bmp_budget(inst, 3).has_value());
}

TEST_CASE("budgeted solver, both dimensions large: prefix outlier costs less") {
  // "AB" extends the majority probe "A", so one neighbor border costs 1.
  std::vector<std::string> probes(25, "A");
  probes[7] = "AB";
  const Instance inst(Alphabet("AB"), 5, 5, probes);
  const auto sol = solve_bmp_budget(inst, 2);
  REQUIRE(sol.has_value());
  CHECK(sol->border_length == 2);
  CHECK_FALSE(solve_bmp_budget(inst, 1).has_value());
}

TEST_CASE("budgeted solver, both dimensions large: two outliers share a corner") {
  std::vector<std::string> probes(49, "A");
  probes[3] = "AB";
  probes[42] = "AB";
  const Instance inst(Alphabet("AB"), 7, 7, probes);
  const auto sol = solve_bmp_budget(inst, 3);
  REQUIRE(sol.has_value());
  CHECK(sol->border_length == 3);
  CHECK(verify_solution(inst, *sol));
  CHECK_FALSE(solve_bmp_budget(inst, 2).has_value());
}

TEST_CASE("budgeted solver, all-identical probes solve at budget zero") {
  const Instance inst(Alphabet("AB"), 3, 4, std::vector<std::string>(12, "AB"));
  const auto sol = solve_bmp_budget(inst, 0);
  REQUIRE(sol.has_value());
  CHECK(sol->border_length == 0);
}

TEST_CASE("budgeted solver, one large dimension uses the primal route") {
  std::vector<std::string> probes(6, "A");
  probes[5] = "AB";
  const Instance inst(Alphabet("AB"), 1, 6, probes);
  const auto sol = solve_bmp_budget(inst, 1);
  REQUIRE(sol.has_value());
  CHECK(sol->border_length == 1);
  CHECK(sol->border_length == solve_bmp_oracle(inst, {SearchLimits{}, 8}).border_length);

  // The transposed shape takes the symmetric path.
  const Instance tall = inst.transposed();
  const auto tall_sol = solve_bmp_budget(tall, 1);
  REQUIRE(tall_sol.has_value());
  CHECK(tall_sol->border_length == 1);
  CHECK(verify_solution(tall, *tall_sol));
}

TEST_CASE("budgeted solver agrees with the oracle across budgets") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 1 + static_cast<int>(testutil::draw_below(rng, 2));
    const int cols = 1 + static_cast<int>(testutil::draw_below(rng, 3));
    const Instance inst = testutil::random_instance(rng, rows, cols, "ABC", 2);
    const long long opt = solve_bmp_oracle(inst).border_length;
    for (long long o : {opt - 1, opt, opt + 1}) {
      if (o < 0) continue;
      const auto sol = solve_bmp_budget(inst, o);
      if (o >= opt) {
        REQUIRE(sol.has_value());
        CHECK(sol->border_length == opt);
        CHECK(verify_solution(inst, *sol));
      } else {
        CHECK_FALSE(sol.has_value());
      }
    }
  }
}

TEST_CASE("transposing the instance preserves the optimum") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = testutil::random_instance(rng, 2, 3, "AB", 2);
    CHECK(solve_bmp_oracle(inst).border_length ==
          solve_bmp_oracle(inst.transposed()).border_length);
    CHECK(solve_bmp_template(inst).border_length ==
          solve_bmp_template(inst.transposed()).border_length);
  }
}
