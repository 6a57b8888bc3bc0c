#include <algorithm>
#include <functional>

#include "bordermin/solvers.hpp"
#include "solvers_internal.hpp"

namespace bordermin {

namespace {

struct Candidate {
  long long bl;
  std::string deposition;
  Placement placement;
};

void consider(const Instance& instance, std::optional<Candidate>& best, long long bl,
              const std::string& deposition, const Placement& placement, SolveStats* stats) {
  if (stats) ++stats->candidates;
  if (!best || solution_less(instance, bl, deposition, placement, best->bl, best->deposition,
                             best->placement))
    best = Candidate{bl, deposition, placement};
}

void bump_branches(std::uint64_t& branches, const SearchLimits& limits, SolveStats* stats) {
  ++branches;
  if (stats) ++stats->branches;
  if (branches > limits.node_budget)
    fail(ErrorKind::kInstanceTooLarge,
         "branch budget exceeded (" + std::to_string(limits.node_budget) + " branches)");
  if (limits.deadline && (branches & 255) == 0 &&
      std::chrono::steady_clock::now() > *limits.deadline)
    fail(ErrorKind::kInstanceTooLarge, "search deadline exceeded");
}

}  // namespace

std::vector<ColumnPlacement> decompose_columns(const Instance& instance,
                                               const Placement& placement) {
  if (placement.rows() != instance.rows || placement.cols() != instance.cols)
    fail(ErrorKind::kInvalidPlacement, "placement dimensions do not match the instance");
  const DistinctProbes dp = distinct_probes(instance);
  std::vector<ColumnPlacement> columns(instance.cols, ColumnPlacement(instance.rows));
  for (int c = 0; c < instance.cols; ++c)
    for (int r = 0; r < instance.rows; ++r)
      columns[c][r] = dp.of_slot[placement.slot_at(r, c)];
  return columns;
}

bool is_consecutive(const Instance& instance, const Placement& placement) {
  const std::vector<ColumnPlacement> columns = decompose_columns(instance, placement);
  for (std::size_t a = 0; a < columns.size(); ++a)
    for (std::size_t b = a + 2; b < columns.size(); ++b)
      if (columns[a] == columns[b] && columns[a + 1] != columns[a]) return false;
  return true;
}

Placement make_consecutive(const Instance& instance, const Placement& placement,
                           std::string_view deposition) {
  // Touch the deposition only to validate it; the move itself is purely a
  // column permutation and preserves all embeddings.
  (void)compute_bl(instance, placement, deposition, BorderMethod::kFast);

  const DistinctProbes dp = distinct_probes(instance);
  std::vector<std::vector<int>> slot_columns(instance.cols, std::vector<int>(instance.rows));
  for (int c = 0; c < instance.cols; ++c)
    for (int r = 0; r < instance.rows; ++r) slot_columns[c][r] = placement.slot_at(r, c);
  const auto key = [&](const std::vector<int>& column) {
    ColumnPlacement k(column.size());
    for (std::size_t r = 0; r < column.size(); ++r) k[r] = dp.of_slot[column[r]];
    return k;
  };

  const int m = instance.cols;
  for (int guard = 0; guard <= m * m + m; ++guard) {
    int move_a = -1, move_b = -1;
    for (int a = 0; a < m && move_a < 0; ++a) {
      for (int b = a + 2; b < m; ++b) {
        if (key(slot_columns[a]) == key(slot_columns[b]) &&
            key(slot_columns[a + 1]) != key(slot_columns[a])) {
          move_a = a;
          move_b = b;
          break;
        }
      }
    }
    if (move_a < 0) {
      std::vector<int> slots(static_cast<std::size_t>(instance.rows) * m);
      for (int c = 0; c < m; ++c)
        for (int r = 0; r < instance.rows; ++r) slots[r * m + c] = slot_columns[c][r];
      return Placement(instance.rows, m, std::move(slots));
    }
    std::vector<int> moved = slot_columns[move_b];
    slot_columns.erase(slot_columns.begin() + move_b);
    slot_columns.insert(slot_columns.begin() + move_a + 1, std::move(moved));
  }
  fail(ErrorKind::kInvalidArgument, "column normalization did not converge");
}

IntegerProgram build_multiplicity_program(const Instance& instance, std::string_view deposition,
                                          const Template& columns) {
  const DistinctProbes dp = distinct_probes(instance);
  const int p = dp.count();
  const int t = static_cast<int>(columns.size());
  if (t < 1 || t > instance.cols)
    fail(ErrorKind::kInvalidArgument, "template must have between 1 and cols columns");

  std::vector<std::string> emb(p);
  for (int d = 0; d < p; ++d) emb[d] = embed(dp.values[d], deposition);

  IntegerProgram program;
  program.num_vars = t;
  program.lower_bounds.assign(t, 1);
  program.upper_bounds.assign(t, instance.cols);
  program.objective.assign(t, 0);
  for (int z = 0; z < t; ++z) {
    const ColumnPlacement& column = columns[z];
    if (static_cast<int>(column.size()) != instance.rows)
      fail(ErrorKind::kInvalidArgument, "template column height mismatch");
    long long vertical = 0;
    for (int r = 0; r + 1 < instance.rows; ++r)
      vertical += border_pair(emb[column[r]], emb[column[r + 1]]);
    program.objective[z] = vertical;
  }
  for (int d = 0; d < p; ++d) {
    std::vector<long long> coeffs(t, 0);
    for (int z = 0; z < t; ++z)
      coeffs[z] = std::count(columns[z].begin(), columns[z].end(), d);
    program.equalities.emplace_back(std::move(coeffs), dp.multiplicity[d]);
  }
  return program;
}

namespace {

// Per-deposition-sequence tables shared by the template search.
struct TemplateTables {
  std::vector<std::string> emb;
  std::vector<long long> pair_border;  // p*p Hamming table
  std::vector<long long> vertical;     // per column placement
  std::vector<std::vector<int>> column_counts;  // per column, per distinct

  TemplateTables(const DistinctProbes& dp, const std::vector<ColumnPlacement>& columns,
                 std::string_view deposition) {
    const int p = dp.count();
    emb.resize(p);
    for (int d = 0; d < p; ++d) emb[d] = embed(dp.values[d], deposition);
    pair_border.assign(static_cast<std::size_t>(p) * p, 0);
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b)
        pair_border[a * p + b] = pair_border[b * p + a] = border_pair(emb[a], emb[b]);
    vertical.resize(columns.size());
    column_counts.assign(columns.size(), std::vector<int>(p, 0));
    for (std::size_t i = 0; i < columns.size(); ++i) {
      long long v = 0;
      for (std::size_t r = 0; r + 1 < columns[i].size(); ++r)
        v += pair_border[columns[i][r] * p + columns[i][r + 1]];
      vertical[i] = v;
      for (int d : columns[i]) ++column_counts[i][d];
    }
  }

  long long horizontal(const ColumnPlacement& u, const ColumnPlacement& v, int p) const {
    long long total = 0;
    for (std::size_t r = 0; r < u.size(); ++r) total += pair_border[u[r] * p + v[r]];
    return total;
  }
};

// Branches over ordered templates of pairwise distinct column placements for
// one fixed deposition sequence, solving the multiplicity program at every
// template and keeping the best candidate. Prunes extensions whose incurred
// horizontal cost plus one copy of each chosen column's vertical cost already
// exceeds the incumbent (or the budget cap).
void template_search(const Instance& instance, const DistinctProbes& dp,
                     const std::vector<ColumnPlacement>& columns, const std::string& deposition,
                     std::optional<long long> cap, const SolverOptions& options,
                     std::optional<Candidate>& best, std::uint64_t& branches, SolveStats* stats) {
  const int p = dp.count();
  const int column_count = static_cast<int>(columns.size());
  const int max_t = std::min(instance.cols, column_count);
  const TemplateTables tables(dp, columns, deposition);

  std::vector<int> chosen;
  std::vector<char> used(column_count, 0);
  std::vector<int> demand(p, 0);  // one copy of each chosen column

  const auto try_template = [&](long long bound) {
    // Every distinct probe must be covered and not oversupplied at h = 1.
    for (int d = 0; d < p; ++d) {
      if (demand[d] == 0 || demand[d] > dp.multiplicity[d]) return;
    }
    bump_branches(branches, options.limits, stats);
    Template tpl(chosen.size());
    for (std::size_t i = 0; i < chosen.size(); ++i) tpl[i] = columns[chosen[i]];
    IntegerProgram program = build_multiplicity_program(instance, deposition, tpl);
    // The bound already contains the horizontal cost, which the program
    // cannot see; fold it back in after solving.
    const auto ilp = solve_min(program);
    if (!ilp) return;
    const long long horizontal = bound - [&] {
      long long v = 0;
      for (int i : chosen) v += tables.vertical[i];
      return v;
    }();
    const long long total = ilp->objective_value + horizontal;
    if (cap && total > *cap) return;
    std::vector<int> grid(static_cast<std::size_t>(instance.rows) * instance.cols);
    int col_pos = 0;
    for (std::size_t z = 0; z < chosen.size(); ++z) {
      for (long long k = 0; k < ilp->assignment[z]; ++k, ++col_pos)
        for (int r = 0; r < instance.rows; ++r)
          grid[r * instance.cols + col_pos] = columns[chosen[z]][r];
    }
    consider(instance, best, total,
             deposition, detail::placement_from_distinct_grid(instance, dp, grid), stats);
  };

  // bound = horizontal cost of the chosen order + one vertical copy each.
  const auto recurse = [&](auto&& self, long long bound) -> void {
    if (best && bound > best->bl) return;
    if (cap && bound > *cap) return;
    if (!chosen.empty()) try_template(bound);
    if (static_cast<int>(chosen.size()) == max_t) return;
    for (int i = 0; i < column_count; ++i) {
      if (used[i]) continue;
      long long next_bound = bound + tables.vertical[i];
      if (!chosen.empty())
        next_bound += tables.horizontal(columns[chosen.back()], columns[i], p);
      used[i] = 1;
      chosen.push_back(i);
      for (int d = 0; d < p; ++d) demand[d] += tables.column_counts[i][d];
      self(self, next_bound);
      for (int d = 0; d < p; ++d) demand[d] -= tables.column_counts[i][d];
      chosen.pop_back();
      used[i] = 0;
    }
  };
  recurse(recurse, 0);
}

}  // namespace

Solution solve_bmp_template(const Instance& instance, const SolverOptions& options,
                            SolveStats* stats) {
  const DistinctProbes dp = distinct_probes(instance);
  const std::vector<ColumnPlacement> columns = column_placements(instance);
  std::optional<Candidate> best;
  std::uint64_t branches = 0;

  GoodDepositionStream goods(instance, static_cast<std::size_t>(dp.total_length()),
                             options.limits);
  while (auto deposition = goods.next()) {
    if (stats) ++stats->nodes;
    template_search(instance, dp, columns, *deposition, std::nullopt, options, best, branches,
                    stats);
  }
  if (!best) fail(ErrorKind::kInstanceTooLarge, "template search found no candidate");
  return Solution{best->placement, best->deposition, best->bl};
}

Solution solve_bmp_oracle(const Instance& instance, const SolverOptions& options,
                          SolveStats* stats) {
  if (instance.cell_count() > options.oracle_cell_cap)
    fail(ErrorKind::kInstanceTooLarge,
         "instance exceeds the exhaustive baseline cap of " +
             std::to_string(options.oracle_cell_cap) + " cells");
  const DistinctProbes dp = distinct_probes(instance);
  std::optional<Candidate> best;
  std::uint64_t branches = 0;
  detail::for_each_canonical_grid(dp, instance.rows, instance.cols,
                                  [&](const std::vector<int>& grid) {
    bump_branches(branches, options.limits, stats);
    Placement placement = detail::placement_from_distinct_grid(instance, dp, grid);
    const std::optional<long long> cap =
        best ? std::optional<long long>(best->bl) : std::nullopt;
    const auto result = detail::pbmp_search(instance, placement, options.limits, cap, stats);
    if (result) consider(instance, best, result->bl, result->deposition, placement, stats);
    return true;
  });
  if (!best) fail(ErrorKind::kInstanceTooLarge, "placement search found no candidate");
  return Solution{best->placement, best->deposition, best->bl};
}

std::optional<std::string> enveloping_probe(const Instance& instance, long long budget) {
  if (budget < 0) fail(ErrorKind::kInvalidArgument, "budget must be non-negative");
  const DistinctProbes dp = distinct_probes(instance);
  const long long n = instance.cell_count();
  int best = -1;
  for (int d = 0; d < dp.count(); ++d) {
    const long long others = n - dp.multiplicity[d];
    if (others > budget * budget) continue;
    if (best < 0 || dp.multiplicity[d] > dp.multiplicity[best]) best = d;
  }
  if (best < 0) return std::nullopt;
  return dp.values[best];
}

namespace {

// Both dimensions exceed twice the budget: all but the majority probe live
// in the budget-bounded corner region of a consecutive placement.
std::optional<Candidate> budget_case_majority(const Instance& instance, long long budget,
                                              const SolverOptions& options, SolveStats* stats) {
  const DistinctProbes dp = distinct_probes(instance);
  const long long n = instance.cell_count();
  int mode = 0;
  for (int d = 1; d < dp.count(); ++d)
    if (dp.multiplicity[d] > dp.multiplicity[mode]) mode = d;
  if (2LL * dp.multiplicity[mode] <= n) return std::nullopt;
  const long long others = n - dp.multiplicity[mode];
  if (others > budget * budget) return std::nullopt;

  // Admissible cells: intersections of the first/last `budget` rows and
  // columns, in row-major order.
  std::vector<int> region;
  for (int r = 0; r < instance.rows; ++r) {
    if (r >= budget && r < instance.rows - budget) continue;
    for (int c = 0; c < instance.cols; ++c) {
      if (c >= budget && c < instance.cols - budget) continue;
      region.push_back(r * instance.cols + c);
    }
  }
  if (others > static_cast<long long>(region.size())) return std::nullopt;

  std::vector<int> labels;
  for (int d = 0; d < dp.count(); ++d) {
    if (d == mode) continue;
    labels.insert(labels.end(), dp.multiplicity[d], d);
  }
  labels.insert(labels.end(), region.size() - labels.size(), mode);
  std::sort(labels.begin(), labels.end());

  std::optional<Candidate> best;
  std::uint64_t branches = 0;
  do {
    bump_branches(branches, options.limits, stats);
    std::vector<int> grid(n, mode);
    for (std::size_t i = 0; i < region.size(); ++i) grid[region[i]] = labels[i];
    Placement placement = detail::placement_from_distinct_grid(instance, dp, grid);
    SolveStats sub;
    const auto solved = solve_pbmp_budget(instance, placement, budget, options, &sub);
    if (stats) stats->merge(sub);
    if (solved)
      consider(instance, best, solved->border_length, solved->deposition, solved->placement,
               stats);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best;
}

// Exactly one dimension exceeds twice the budget (columns, after a possible
// transpose): run the template solver, but draw deposition sequences from
// primal expansion instead of full enumeration.
std::optional<Candidate> budget_case_template(const Instance& instance, long long budget,
                                              const SolverOptions& options, SolveStats* stats) {
  const DistinctProbes dp = distinct_probes(instance);
  const std::vector<ColumnPlacement> columns = column_placements(instance);
  std::optional<Candidate> best;
  std::uint64_t branches = 0;
  PrimalSequenceStream primals(instance.alphabet, static_cast<std::size_t>(budget));
  while (auto primal = primals.next()) {
    if (best && static_cast<long long>(primal->size()) > best->bl) break;
    const auto deposition = expand_primal(instance, *primal);
    if (!deposition) continue;
    template_search(instance, dp, columns, *deposition, budget, options, best, branches, stats);
  }
  return best;
}

// Both dimensions are budget-bounded: exhaust placements modulo duplicates
// and flips, solving each with the budgeted fixed-placement solver.
std::optional<Candidate> budget_case_exhaustive(const Instance& instance, long long budget,
                                                const SolverOptions& options, SolveStats* stats) {
  const DistinctProbes dp = distinct_probes(instance);
  std::optional<Candidate> best;
  std::uint64_t branches = 0;
  detail::for_each_canonical_grid(dp, instance.rows, instance.cols,
                                  [&](const std::vector<int>& grid) {
    bump_branches(branches, options.limits, stats);
    Placement placement = detail::placement_from_distinct_grid(instance, dp, grid);
    SolveStats sub;
    const auto solved = solve_pbmp_budget(instance, placement, budget, options, &sub);
    if (stats) stats->merge(sub);
    if (solved)
      consider(instance, best, solved->border_length, solved->deposition, solved->placement,
               stats);
    return true;
  });
  return best;
}

}  // namespace

std::optional<Solution> solve_bmp_budget(const Instance& instance, long long budget,
                                         const SolverOptions& options, SolveStats* stats) {
  if (budget < 0) fail(ErrorKind::kInvalidArgument, "budget must be non-negative");
  const DistinctProbes dp = distinct_probes(instance);
  if (static_cast<long long>(dp.count()) > budget + 1) return std::nullopt;

  const bool tall = static_cast<long long>(instance.rows) > 2 * budget;
  const bool wide = static_cast<long long>(instance.cols) > 2 * budget;
  std::optional<Candidate> best;
  if (tall && wide) {
    best = budget_case_majority(instance, budget, options, stats);
  } else if (tall || wide) {
    if (tall) {
      best = budget_case_template(instance.transposed(), budget, options, stats);
      if (best) best->placement = best->placement.transposed();
    } else {
      best = budget_case_template(instance, budget, options, stats);
    }
  } else {
    best = budget_case_exhaustive(instance, budget, options, stats);
  }
  if (!best || best->bl > budget) return std::nullopt;
  return Solution{best->placement, best->deposition, best->bl};
}

}  // namespace bordermin
