#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bordermin/core.hpp"

namespace bordermin {

/// Caps on search effort. Exceeding the node budget (or the deadline, when
/// set) raises an instance-too-large error rather than hanging.
struct SearchLimits {
  std::uint64_t node_budget = 10'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Lazy, restartable stream of every good deposition sequence of length at
/// most max_len, in lexicographic order under the alphabet.
///
/// The search walks a frontier of per-distinct-probe cursors; a character
/// extends the current sequence only if it advances at least one cursor,
/// so every emitted sequence is good by construction.
class GoodDepositionStream {
 public:
  GoodDepositionStream(const Instance& instance, std::size_t max_len, SearchLimits limits = {});

  std::optional<std::string> next();
  std::uint64_t nodes_visited() const { return nodes_; }

 private:
  struct Frame {
    int next_symbol = 0;
    std::vector<int> advanced;  // distinct indices whose cursor moved on entry
  };

  bool all_done() const;
  void pop_frame();

  Alphabet alphabet_;
  std::vector<std::string> values_;
  std::vector<std::size_t> cursor_;
  std::size_t max_len_;
  SearchLimits limits_;
  std::string current_;
  std::vector<Frame> stack_;
  std::uint64_t nodes_ = 0;
  bool started_ = false;
};

std::vector<std::string> enumerate_good_depositions(const Instance& instance, std::size_t max_len,
                                                    SearchLimits limits = {});

/// Stream of all sequences over the alphabet of length 0..max_len, shortest
/// first and lexicographic within each length (the empty sequence first).
class PrimalSequenceStream {
 public:
  PrimalSequenceStream(const Alphabet& alphabet, std::size_t max_len);
  std::optional<std::string> next();

 private:
  Alphabet alphabet_;
  std::size_t max_len_;
  std::vector<int> digits_;
  bool emitted_empty_ = false;
  bool done_ = false;
};

std::vector<std::string> enumerate_primal_sequences(const Alphabet& alphabet, std::size_t max_len);

/// Replays a primal sequence into the unique good deposition sequence whose
/// non-trivial steps are exactly the primal characters: steps with an
/// all-transparent mask are inserted greedily whenever one applies, primal
/// characters are consumed in order, and the expansion is rejected (nullopt)
/// if a primal character deposits nowhere or some probe remains unfinished.
/// Expansion depends only on the probe multiset, not on cell positions.
std::optional<std::string> expand_primal(const Instance& instance, std::string_view primal);

/// The subsequence of a good deposition sequence whose masks have at least
/// one opaque cell. Raises not-good on a redundant input.
std::string primal_of(const Instance& instance, std::string_view deposition);

/// Assignment of distinct probes to the cells of a single column, topmost
/// first. Entries index into distinct_probes(instance).values.
using ColumnPlacement = std::vector<int>;

/// All column placements realizable from the multiset (per-probe demand of
/// one column never exceeds availability), in lexicographic order.
std::vector<ColumnPlacement> column_placements(const Instance& instance);

}  // namespace bordermin
