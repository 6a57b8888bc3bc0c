#pragma once

#include <optional>
#include <vector>

#include "bordermin/core.hpp"

namespace bordermin {

/// A boxed integer minimization problem with equality constraints only.
struct IntegerProgram {
  int num_vars = 0;
  /// Each equality is (coefficients, rhs) with coefficients.size() == num_vars.
  std::vector<std::pair<std::vector<long long>, long long>> equalities;
  std::vector<long long> lower_bounds;
  std::vector<long long> upper_bounds;
  std::vector<long long> objective;
};

struct IlpSolution {
  std::vector<long long> assignment;
  long long objective_value = 0;
};

/// Minimizes the objective over the box subject to all equalities.
/// Returns the lexicographically smallest optimal assignment, or nullopt if
/// infeasible. Branch and bound over variables in order, with partial-sum
/// feasibility pruning on every equality and an objective bound.
std::optional<IlpSolution> solve_min(const IntegerProgram& program);

}  // namespace bordermin
