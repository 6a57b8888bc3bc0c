#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bordermin/core.hpp"
#include "bordermin/enumeration.hpp"
#include "bordermin/ilp.hpp"

namespace bordermin {

/// Search effort counters reported by the solvers.
struct SolveStats {
  std::uint64_t nodes = 0;       // search-tree nodes expanded
  std::uint64_t branches = 0;    // top-level branches (placements, templates, primals)
  std::uint64_t candidates = 0;  // complete candidate solutions scored

  void merge(const SolveStats& other) {
    nodes += other.nodes;
    branches += other.branches;
    candidates += other.candidates;
  }
};

struct SolverOptions {
  SearchLimits limits;
  /// Cell-count cap for the exhaustive placement baseline.
  int oracle_cell_cap = 8;
};

/// Minimum-border-length deposition sequence for a fixed placement, found by
/// depth-first search over good deposition sequences with incurred-cost
/// pruning. Ties resolve to the lexicographically smallest sequence.
Solution solve_pbmp(const Instance& instance, const Placement& placement,
                    const SolverOptions& options = {}, SolveStats* stats = nullptr);

/// Budgeted variant: branches over primal sequences of length at most
/// `budget`, expands each to its good deposition sequence and keeps the best
/// scored candidate. Returns nullopt when no solution meets the budget.
/// Instances with more than budget+1 distinct probes are rejected without
/// search.
std::optional<Solution> solve_pbmp_budget(const Instance& instance, const Placement& placement,
                                          long long budget, const SolverOptions& options = {},
                                          SolveStats* stats = nullptr);

/// Exhaustive baseline: minimum over all placements (modulo duplicate
/// probes and the four flip symmetries) and all good deposition sequences.
/// Refuses instances larger than options.oracle_cell_cap cells.
Solution solve_bmp_oracle(const Instance& instance, const SolverOptions& options = {},
                          SolveStats* stats = nullptr);

/// Decomposition of a placement into per-column distinct-probe tuples.
std::vector<ColumnPlacement> decompose_columns(const Instance& instance,
                                               const Placement& placement);

/// True iff identical column placements occupy contiguous column blocks.
bool is_consecutive(const Instance& instance, const Placement& placement);

/// Repeatedly moves a stray duplicate column next to its block until the
/// placement is consecutive. Never increases the border length of the given
/// deposition sequence.
Placement make_consecutive(const Instance& instance, const Placement& placement,
                           std::string_view deposition);

/// An ordered list of pairwise distinct column placements; together with a
/// multiplicity function it describes a consecutive placement.
using Template = std::vector<ColumnPlacement>;

/// The integer program whose solution is the multiplicity function of a
/// template: one variable per template column (each at least 1, at most the
/// column count), one equality per distinct probe matching supply, and the
/// summed vertical border cost as the objective.
IntegerProgram build_multiplicity_program(const Instance& instance, std::string_view deposition,
                                          const Template& columns);

/// Exact solver branching on good deposition sequences and ordered templates
/// of distinct column placements, with the per-template multiplicities
/// delegated to the integer programming subroutine. Searches consecutive
/// placements only, which is sufficient for optimality.
Solution solve_bmp_template(const Instance& instance, const SolverOptions& options = {},
                            SolveStats* stats = nullptr);

/// The probe from which at most budget^2 multiset members differ, if one
/// exists (preferring the most frequent, then alphabet order). When both
/// dimensions exceed the budget and no such probe exists, the budgeted
/// instance is infeasible.
std::optional<std::string> enveloping_probe(const Instance& instance, long long budget);

/// Budgeted exact solver with a three-way dispatch on array dimensions:
/// majority-probe branching when both dimensions are large, the template
/// solver seeded by primal-sequence expansion when exactly one is large, and
/// exhaustive placement search otherwise. Returns nullopt when no solution
/// meets the budget.
std::optional<Solution> solve_bmp_budget(const Instance& instance, long long budget,
                                         const SolverOptions& options = {},
                                         SolveStats* stats = nullptr);

}  // namespace bordermin
