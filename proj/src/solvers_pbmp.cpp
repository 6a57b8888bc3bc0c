#include <algorithm>
#include <functional>

#include "bordermin/solvers.hpp"
#include "solvers_internal.hpp"

namespace bordermin {

namespace detail {

namespace {

void bump(std::uint64_t& counter, const SearchLimits& limits, SolveStats* stats) {
  ++counter;
  if (stats) ++stats->nodes;
  if (counter > limits.node_budget)
    fail(ErrorKind::kInstanceTooLarge,
         "search node budget exceeded (" + std::to_string(limits.node_budget) + " nodes)");
  if (limits.deadline && (counter & 1023) == 0 &&
      std::chrono::steady_clock::now() > *limits.deadline)
    fail(ErrorKind::kInstanceTooLarge, "search deadline exceeded");
}

}  // namespace

std::optional<PbmpResult> pbmp_search(const Instance& instance, const Placement& placement,
                                      const SearchLimits& limits, std::optional<long long> cap,
                                      SolveStats* stats) {
  if (placement.rows() != instance.rows || placement.cols() != instance.cols)
    fail(ErrorKind::kInvalidPlacement, "placement dimensions do not match the instance");
  const DistinctProbes dp = distinct_probes(instance);
  const int p = dp.count();

  // Count of neighboring cell pairs per unordered distinct-probe pair; a
  // step's mask border is the sum over pairs with differing transparency.
  std::vector<long long> pair_count(static_cast<std::size_t>(p) * p, 0);
  for (int r = 0; r < instance.rows; ++r) {
    for (int c = 0; c < instance.cols; ++c) {
      const int d = dp.of_slot[placement.slot_at(r, c)];
      if (c + 1 < instance.cols) {
        const int e = dp.of_slot[placement.slot_at(r, c + 1)];
        ++pair_count[std::min(d, e) * p + std::max(d, e)];
      }
      if (r + 1 < instance.rows) {
        const int e = dp.of_slot[placement.slot_at(r + 1, c)];
        ++pair_count[std::min(d, e) * p + std::max(d, e)];
      }
    }
  }

  const std::size_t max_len = static_cast<std::size_t>(dp.total_length());
  std::vector<std::size_t> cursor(p, 0);
  std::vector<char> transparent(p, 0);

  struct Frame {
    int next_symbol = 0;
    std::vector<int> advanced;
    long long step_cost = 0;
  };
  std::vector<Frame> stack;
  std::string current;
  long long cost = 0;
  std::uint64_t nodes = 0;
  std::optional<PbmpResult> best;

  const auto all_done = [&]() {
    for (int d = 0; d < p; ++d)
      if (cursor[d] != dp.values[d].size()) return false;
    return true;
  };

  stack.push_back(Frame{});
  while (!stack.empty()) {
    Frame& top = stack.back();
    bool descended = false;
    while (top.next_symbol < instance.alphabet.size() && current.size() < max_len) {
      const char x = instance.alphabet.symbol(top.next_symbol++);
      std::vector<int> advanced;
      for (int d = 0; d < p; ++d) {
        transparent[d] = cursor[d] < dp.values[d].size() && dp.values[d][cursor[d]] == x;
        if (transparent[d]) advanced.push_back(d);
      }
      if (advanced.empty()) continue;
      long long step = 0;
      for (int a = 0; a < p; ++a) {
        for (int b = a + 1; b < p; ++b) {
          if (transparent[a] != transparent[b]) step += pair_count[a * p + b];
        }
      }
      const long long next_cost = cost + step;
      if (best && next_cost >= best->bl) continue;  // later ties are lex-greater
      if (cap && next_cost > *cap) continue;
      bump(nodes, limits, stats);
      for (int d : advanced) ++cursor[d];
      current.push_back(x);
      cost = next_cost;
      stack.push_back(Frame{0, std::move(advanced), step});
      if (all_done()) {
        best = PbmpResult{cost, current};
        if (stats) ++stats->candidates;
      }
      descended = true;
      break;
    }
    if (!descended) {
      for (int d : stack.back().advanced) --cursor[d];
      cost -= stack.back().step_cost;
      if (stack.size() > 1) current.pop_back();
      stack.pop_back();
    }
  }
  return best;
}

Placement placement_from_distinct_grid(const Instance& instance, const DistinctProbes& dp,
                                       const std::vector<int>& grid) {
  std::vector<std::vector<int>> free_slots(dp.count());
  for (int s = static_cast<int>(instance.probes.size()) - 1; s >= 0; --s)
    free_slots[dp.of_slot[s]].push_back(s);  // ascending from the back
  std::vector<int> slots(grid.size());
  for (std::size_t cell = 0; cell < grid.size(); ++cell) {
    std::vector<int>& pool = free_slots[grid[cell]];
    slots[cell] = pool.back();
    pool.pop_back();
  }
  return Placement(instance.rows, instance.cols, std::move(slots));
}

namespace {

std::vector<int> flip_grid(const std::vector<int>& grid, int rows, int cols, bool horizontal,
                           bool vertical) {
  std::vector<int> out(grid.size());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int sr = vertical ? rows - 1 - r : r;
      const int sc = horizontal ? cols - 1 - c : c;
      out[r * cols + c] = grid[sr * cols + sc];
    }
  }
  return out;
}

}  // namespace

void for_each_canonical_grid(const DistinctProbes& dp, int rows, int cols,
                             const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> grid;
  grid.reserve(static_cast<std::size_t>(rows) * cols);
  for (int d = 0; d < dp.count(); ++d)
    for (int k = 0; k < dp.multiplicity[d]; ++k) grid.push_back(d);
  do {
    bool canonical = true;
    for (int flip = 1; flip < 4 && canonical; ++flip) {
      const std::vector<int> image = flip_grid(grid, rows, cols, flip & 1, flip & 2);
      if (std::lexicographical_compare(image.begin(), image.end(), grid.begin(), grid.end()))
        canonical = false;
    }
    if (canonical && !fn(grid)) return;
  } while (std::next_permutation(grid.begin(), grid.end()));
}

}  // namespace detail

Solution solve_pbmp(const Instance& instance, const Placement& placement,
                    const SolverOptions& options, SolveStats* stats) {
  const auto result = detail::pbmp_search(instance, placement, options.limits, std::nullopt, stats);
  // A good deposition sequence always exists, so only a budget stop can
  // leave the search empty, and that raises before reaching here.
  if (!result) fail(ErrorKind::kInstanceTooLarge, "search terminated without a candidate");
  const long long scored = compute_bl(instance, placement, result->deposition, BorderMethod::kFast);
  if (scored != result->bl)
    fail(ErrorKind::kInvalidArgument, "incremental cost disagrees with the scored border length");
  return Solution{placement, result->deposition, scored};
}

std::optional<Solution> solve_pbmp_budget(const Instance& instance, const Placement& placement,
                                          long long budget, const SolverOptions& options,
                                          SolveStats* stats) {
  if (budget < 0) fail(ErrorKind::kInvalidArgument, "budget must be non-negative");
  if (placement.rows() != instance.rows || placement.cols() != instance.cols)
    fail(ErrorKind::kInvalidPlacement, "placement dimensions do not match the instance");
  const DistinctProbes dp = distinct_probes(instance);
  // More than budget+1 distinct probes force more than budget borders;
  // reject before any search.
  if (static_cast<long long>(dp.count()) > budget + 1) return std::nullopt;
  const int p = dp.count();

  // Branch over primal sequences as a prefix tree, carrying the expansion
  // state along. Expansion is deterministic, so a prefix that rejects (a
  // character depositing nowhere) rejects every extension, and the incurred
  // mask borders of a prefix bound every completion from below. Only the
  // non-trivial steps cost anything, and their borders come from the
  // neighbor-pair table as in the unbudgeted search.
  std::vector<long long> pair_count(static_cast<std::size_t>(p) * p, 0);
  for (int r = 0; r < instance.rows; ++r) {
    for (int c = 0; c < instance.cols; ++c) {
      const int d = dp.of_slot[placement.slot_at(r, c)];
      if (c + 1 < instance.cols) {
        const int e = dp.of_slot[placement.slot_at(r, c + 1)];
        ++pair_count[std::min(d, e) * p + std::max(d, e)];
      }
      if (r + 1 < instance.rows) {
        const int e = dp.of_slot[placement.slot_at(r + 1, c)];
        ++pair_count[std::min(d, e) * p + std::max(d, e)];
      }
    }
  }

  std::vector<std::size_t> cursor(p, 0);
  std::string expansion;
  std::uint64_t branches = 0;
  std::optional<detail::PbmpResult> best;

  const auto finished = [&](int d) { return cursor[d] == dp.values[d].size(); };
  const auto all_finished = [&]() {
    for (int d = 0; d < p; ++d)
      if (!finished(d)) return false;
    return true;
  };
  // Applies every all-transparent step (they cost nothing and are forced);
  // returns how many cursors moved so the caller can rewind.
  const auto apply_trivial_run = [&]() {
    int steps = 0;
    while (true) {
      if (p == 0) break;
      char x = 0;
      bool trivial = true;
      for (int d = 0; d < p && trivial; ++d) {
        if (finished(d)) {
          trivial = false;
        } else if (d == 0 || x == 0) {
          x = dp.values[d][cursor[d]];
        } else if (dp.values[d][cursor[d]] != x) {
          trivial = false;
        }
      }
      if (!trivial) break;
      for (int d = 0; d < p; ++d) ++cursor[d];
      expansion.push_back(x);
      ++steps;
    }
    return steps;
  };
  const auto rewind = [&](int trivial_steps, const std::vector<int>& advanced) {
    for (int i = 0; i < trivial_steps; ++i) {
      expansion.pop_back();
      for (int d = 0; d < p; ++d) --cursor[d];
    }
    if (!advanced.empty()) {
      expansion.pop_back();
      for (int d : advanced) --cursor[d];
    }
  };

  const auto recurse = [&](auto&& self, long long depth, long long incurred) -> void {
    ++branches;
    if (stats) ++stats->branches;
    if (branches > options.limits.node_budget)
      fail(ErrorKind::kInstanceTooLarge, "primal branch budget exceeded");
    if (options.limits.deadline && (branches & 1023) == 0 &&
        std::chrono::steady_clock::now() > *options.limits.deadline)
      fail(ErrorKind::kInstanceTooLarge, "search deadline exceeded");
    if (all_finished()) {
      if (stats) ++stats->candidates;
      const long long bl = compute_bl(instance, placement, expansion, BorderMethod::kFast);
      if (!best || bl < best->bl ||
          (bl == best->bl && instance.alphabet.lex_less(expansion, best->deposition)))
        best = detail::PbmpResult{bl, expansion};
      return;
    }
    if (depth == budget) return;
    for (int i = 0; i < instance.alphabet.size(); ++i) {
      const char x = instance.alphabet.symbol(i);
      std::vector<int> advanced;
      std::vector<char> transparent(p, 0);
      for (int d = 0; d < p; ++d) {
        transparent[d] = !finished(d) && dp.values[d][cursor[d]] == x;
        if (transparent[d]) advanced.push_back(d);
      }
      if (advanced.empty()) continue;  // the expansion would reject here
      long long step = 0;
      for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
          if (transparent[a] != transparent[b]) step += pair_count[a * p + b];
      const long long next = incurred + step;
      if (next > budget) continue;
      if (best && next > best->bl) continue;  // ties stay alive for the lex rule
      for (int d : advanced) ++cursor[d];
      expansion.push_back(x);
      const int trivial_steps = apply_trivial_run();
      self(self, depth + 1, next);
      rewind(trivial_steps, advanced);
    }
  };

  const int root_trivial = apply_trivial_run();
  recurse(recurse, 0, 0);
  rewind(root_trivial, {});

  if (!best || best->bl > budget) return std::nullopt;
  return Solution{placement, best->deposition, best->bl};
}

}  // namespace bordermin
