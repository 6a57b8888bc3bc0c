#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bordermin/core.hpp"

namespace bordermin {

/// Parameters of the two-character block separator
/// (x^{rows*cols*u} y^{rows*cols*u})^{rows*cols*u}.
struct SeparatorSpec {
  char x_char = 'x';
  char y_char = 'y';
  long long u = 1;
  int rows = 1;
  int cols = 1;
};

/// Smallest repeat constant that forces every optimal good deposition
/// sequence to keep the separator contiguous, given the longest prefix and
/// suffix lengths flanking it.
long long separator_min_u(long long max_prefix, long long max_suffix);

/// Materializes the separator string. Its length is 2*(rows*cols*u)^2;
/// exceeding size_cap raises instance-too-large.
std::string build_separator(const SeparatorSpec& spec, std::size_t size_cap = std::size_t(1) << 26);

/// A grid of prefix/suffix run-length probes with its canonical placement
/// and deposition sequence. Probe (i, j) is a^{i*t} sep b^{j*t}; under the
/// canonical pair the border length is ((rows-1)*cols + rows*(cols-1))*t.
struct AbGrid {
  Instance instance;
  Placement canonical_placement;
  std::string canonical_deposition;
};

AbGrid make_ab_grid(int rows, int cols, int t, std::string_view separator, char a = 'a',
                    char b = 'b');

/// The six characters the placement-encoding reduction prepends; all must be
/// absent from the source alphabet.
struct FreshChars {
  char a = 'a';
  char b = 'b';
  char x1 = 'w';
  char y1 = 'x';
  char x2 = 'y';
  char y2 = 'z';
};

struct ReductionConstants {
  long long t = 1;
  long long u1 = 1;
  long long u2 = 1;
};

/// Constants large enough for the reduction's optimum to certify the source
/// placement: t exceeds (max probe length * rows * cols)^2, and the two
/// separator constants dominate t^4 and t^3 respectively.
ReductionConstants faithful_reduction_constants(const Instance& instance);

/// Total character count of the reduced instance, for size screening.
long long reduced_instance_size(const Instance& instance, const ReductionConstants& constants);

struct ReducedInstance {
  Instance instance;
  ReductionConstants constants;
  /// True only when the constants meet the faithful thresholds; desk-scale
  /// constants keep the construction shape but carry no optimality claim.
  bool guaranteed;
};

/// Encodes a fixed-placement instance as a placement-free one: the probe at
/// cell (i, j) becomes a^{i*t} sep1 b^{j*t} sep2 probe. With `constants`
/// unset the faithful constants are used; materialization beyond size_cap
/// raises instance-too-large.
ReducedInstance encode_placement_instance(const Instance& instance, const Placement& placement,
                                          std::optional<ReductionConstants> constants = std::nullopt,
                                          FreshChars fresh = {},
                                          std::size_t size_cap = std::size_t(1) << 26);

struct GridGraph {
  int rows = 1;
  int cols = 1;
};

/// Balanced-partition instance: n = rows*cols single-character probes over k
/// characters with multiplicities as equal as possible (the first n mod k
/// characters get one extra copy).
Instance balanced_partition_instance(const GridGraph& grid, int k);

struct PartitionResult {
  /// Cell indices (row-major) grouped by placed character, in alphabet order.
  std::vector<std::vector<int>> classes;
  long long cut_size = 0;
};

/// Reads a partition off a solved balanced-partition instance: classes are
/// cells grouped by placed character and the cut is half the border length
/// (each crossing edge costs two embedding mismatches).
PartitionResult extract_partition(const Instance& instance, const Solution& solution, int k);

}  // namespace bordermin
