#include "bordermin/ilp.hpp"

#include <algorithm>

namespace bordermin {

namespace {

void validate(const IntegerProgram& p) {
  if (p.num_vars < 1) fail(ErrorKind::kInvalidArgument, "program needs at least one variable");
  const std::size_t n = static_cast<std::size_t>(p.num_vars);
  if (p.lower_bounds.size() != n || p.upper_bounds.size() != n || p.objective.size() != n)
    fail(ErrorKind::kInvalidArgument, "bound/objective vectors must have num_vars entries");
  for (std::size_t i = 0; i < n; ++i) {
    if (p.lower_bounds[i] > p.upper_bounds[i])
      fail(ErrorKind::kInvalidArgument, "variable lower bound exceeds upper bound");
  }
  for (const auto& [coeffs, rhs] : p.equalities) {
    (void)rhs;
    if (coeffs.size() != n)
      fail(ErrorKind::kInvalidArgument, "equality coefficient vector length mismatch");
  }
}

long long term_min(long long coeff, long long lo, long long hi) {
  return coeff >= 0 ? coeff * lo : coeff * hi;
}

long long term_max(long long coeff, long long lo, long long hi) {
  return coeff >= 0 ? coeff * hi : coeff * lo;
}

}  // namespace

std::optional<IlpSolution> solve_min(const IntegerProgram& program) {
  validate(program);
  const int n = program.num_vars;
  const int q = static_cast<int>(program.equalities.size());

  // Suffix extrema of each equality's remaining terms, and of the objective,
  // indexed by the first unassigned variable.
  std::vector<std::vector<long long>> eq_suffix_min(q, std::vector<long long>(n + 1, 0));
  std::vector<std::vector<long long>> eq_suffix_max(q, std::vector<long long>(n + 1, 0));
  std::vector<long long> obj_suffix_min(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    for (int e = 0; e < q; ++e) {
      const long long c = program.equalities[e].first[i];
      eq_suffix_min[e][i] =
          eq_suffix_min[e][i + 1] + term_min(c, program.lower_bounds[i], program.upper_bounds[i]);
      eq_suffix_max[e][i] =
          eq_suffix_max[e][i + 1] + term_max(c, program.lower_bounds[i], program.upper_bounds[i]);
    }
    obj_suffix_min[i] =
        obj_suffix_min[i + 1] +
        term_min(program.objective[i], program.lower_bounds[i], program.upper_bounds[i]);
  }

  std::vector<long long> current(n, 0);
  std::vector<long long> eq_partial(q, 0);
  std::optional<IlpSolution> best;

  const auto feasible_prefix = [&](int next) {
    for (int e = 0; e < q; ++e) {
      const long long need = program.equalities[e].second - eq_partial[e];
      if (need < eq_suffix_min[e][next] || need > eq_suffix_max[e][next]) return false;
    }
    return true;
  };

  const auto recurse = [&](auto&& self, int i, long long partial_obj) -> void {
    if (best && partial_obj + obj_suffix_min[i] >= best->objective_value) return;
    if (!feasible_prefix(i)) return;
    if (i == n) {
      best = IlpSolution{current, partial_obj};
      return;
    }
    for (long long v = program.lower_bounds[i]; v <= program.upper_bounds[i]; ++v) {
      current[i] = v;
      for (int e = 0; e < q; ++e) eq_partial[e] += program.equalities[e].first[i] * v;
      self(self, i + 1, partial_obj + program.objective[i] * v);
      for (int e = 0; e < q; ++e) eq_partial[e] -= program.equalities[e].first[i] * v;
    }
  };
  recurse(recurse, 0, 0);

  if (best) {
    // Re-check the returned assignment against every constraint and bound.
    long long obj = 0;
    for (int i = 0; i < n; ++i) {
      if (best->assignment[i] < program.lower_bounds[i] ||
          best->assignment[i] > program.upper_bounds[i])
        fail(ErrorKind::kInvalidArgument, "solver produced an out-of-bounds assignment");
      obj += program.objective[i] * best->assignment[i];
    }
    for (const auto& [coeffs, rhs] : program.equalities) {
      long long lhs = 0;
      for (int i = 0; i < n; ++i) lhs += coeffs[i] * best->assignment[i];
      if (lhs != rhs) fail(ErrorKind::kInvalidArgument, "solver produced an infeasible assignment");
    }
    if (obj != best->objective_value)
      fail(ErrorKind::kInvalidArgument, "solver produced an inconsistent objective value");
  }
  return best;
}

}  // namespace bordermin
