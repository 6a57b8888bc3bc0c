#pragma once

#include <optional>
#include <string>

#include "bordermin/core.hpp"
#include "bordermin/enumeration.hpp"
#include "bordermin/solvers.hpp"

namespace bordermin::detail {

struct PbmpResult {
  long long bl;
  std::string deposition;
};

/// Depth-first search over good deposition sequences for a fixed placement,
/// accumulating per-step mask borders and pruning on incurred cost.
/// Candidates costing more than `cap` (when set) are discarded; ties with
/// the cap survive so callers can compare equal-cost solutions.
std::optional<PbmpResult> pbmp_search(const Instance& instance, const Placement& placement,
                                      const SearchLimits& limits, std::optional<long long> cap,
                                      SolveStats* stats);

/// Builds the placement whose row-major cells hold the given distinct-probe
/// ids; duplicate probes receive slots in ascending order.
Placement placement_from_distinct_grid(const Instance& instance, const DistinctProbes& dp,
                                       const std::vector<int>& grid);

/// Calls fn for every distinct assignment of the probe multiset to the grid,
/// modulo duplicate probes and the four flip symmetries, in lexicographic
/// order of the distinct-id grid. fn returns false to stop.
void for_each_canonical_grid(const DistinctProbes& dp, int rows, int cols,
                             const std::function<bool(const std::vector<int>&)>& fn);

}  // namespace bordermin::detail
