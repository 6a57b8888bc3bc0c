#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bordermin/core.hpp"

namespace bordermin {

/// Parsed instance file: the instance plus its optional placement section.
/// (The optional budget is carried inside the instance.)
struct ParsedInstance {
  Instance instance;
  std::optional<Placement> placement;
};

/// Instance text format, line oriented with '#' comments:
///
///   BMPE 1
///   alphabet ACT          (optional; inferred sorted from probes if absent)
///   2 2
///   CA CT
///   TA AC
///   placement             (optional; r*m 1-based slot indices, row-major)
///   1 2
///   3 4
///   budget 10             (optional)
///
/// Probes are whitespace-separated and may wrap lines arbitrarily; the
/// serializer emits one array row per line. Errors carry line numbers.
ParsedInstance parse_instance(std::string_view text);

std::string serialize_instance(const Instance& instance, const Placement* placement = nullptr);

/// Solution text format:
///
///   BMPS 1
///   deposition CTAC
///   placement
///   1 2
///   3 4
///   bl 10
struct SolutionFileData {
  std::string deposition;
  std::vector<int> placement_slots;  // 0-based, row-major
  long long claimed_bl = 0;
};

SolutionFileData parse_solution(std::string_view text);

std::string serialize_solution(const Solution& solution);

struct VerifyReport {
  bool pass = false;
  bool supersequence = false;
  bool good = false;
  long long claimed = 0;
  long long recomputed_hamming = -1;
  long long recomputed_masks = -1;
  std::vector<std::string> warnings;
  std::vector<std::string> failures;
};

/// Recomputes the border length with both the pairwise and the mask methods
/// and compares each against the claim. Redundant deposition sequences pass
/// with a warning; all failures are report entries, never exceptions.
VerifyReport verify(const Instance& instance, const Placement& placement,
                    std::string_view deposition, long long claimed_bl);

}  // namespace bordermin
