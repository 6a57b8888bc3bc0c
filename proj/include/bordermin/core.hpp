#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bordermin {

enum class ErrorKind {
  kNotASupersequence,
  kLengthMismatch,
  kInvalidPlacement,
  kInstanceTooLarge,
  kNotGood,
  kAlphabetCollision,
  kMalformedSolution,
  kSyntaxError,
  kCountMismatch,
  kAlphabetViolation,
  kInvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Library-wide error type. The kind discriminates programmer-facing
/// failure classes; the message carries context (line numbers, sizes).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

/// Idle marker used in embeddings and mask cells. Never a valid symbol.
inline constexpr char kGap = '-';

/// Ordered set of synthesis characters. The order is fixed at construction
/// and drives every lexicographic comparison in the library, including all
/// tie-breaking between equal-cost solutions.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  char symbol(int index) const { return symbols_.at(index); }
  const std::string& symbols() const { return symbols_; }
  bool contains(char c) const { return rank_[static_cast<unsigned char>(c)] >= 0; }
  /// Position of c in the alphabet order, or -1 if absent.
  int rank(char c) const { return rank_[static_cast<unsigned char>(c)]; }

  /// Lexicographic comparison under the alphabet order. Characters outside
  /// the alphabet compare after all members, by byte value.
  bool lex_less(std::string_view a, std::string_view b) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<int, 256> rank_;
};

/// A problem instance: a multiset of probes to synthesize on an
/// rows x cols array, with an optional border-length budget.
/// Probes are stored row-major by slot; slot indices identify multiset
/// members throughout the library.
struct Instance {
  Instance(Alphabet alphabet, int rows, int cols, std::vector<std::string> probes,
           std::optional<long long> budget = std::nullopt);

  Alphabet alphabet;
  int rows;
  int cols;
  std::vector<std::string> probes;
  std::optional<long long> budget;

  int cell_count() const { return rows * cols; }
  int max_probe_length() const;
  /// Same multiset on a cols x rows array.
  Instance transposed() const;
};

/// Bijection between probe slots and array cells, stored as the slot index
/// occupying each cell in row-major order.
class Placement {
 public:
  Placement(int rows, int cols, std::vector<int> slot_of_cell);
  static Placement identity(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int slot_at(int row, int col) const { return slots_[row * cols_ + col]; }
  const std::vector<int>& slots() const { return slots_; }

  Placement flipped_horizontal() const;  // mirror columns
  Placement flipped_vertical() const;    // mirror rows
  Placement transposed() const;

  bool operator==(const Placement& other) const;

 private:
  int rows_;
  int cols_;
  std::vector<int> slots_;
};

/// Deduplicated view of an instance's probe multiset. Values are sorted by
/// alphabet order, which fixes the deterministic ordering used by the
/// enumerators and solvers.
struct DistinctProbes {
  std::vector<std::string> values;
  std::vector<int> multiplicity;
  std::vector<int> of_slot;  // slot index -> distinct index

  int count() const { return static_cast<int>(values.size()); }
  int total_length() const;
};

DistinctProbes distinct_probes(const Instance& instance);

/// One synthesis step: the array pattern deposited for a single character.
/// Cells holding the deposit character are transparent; kGap cells are
/// opaque for this step.
struct Mask {
  char deposit_char;
  int rows;
  int cols;
  std::string cells;  // row-major, deposit_char or kGap

  /// Number of neighboring cell pairs with exactly one transparent cell.
  long long border_length() const;
  bool transparent(int row, int col) const { return cells[row * cols + col] != kGap; }
};

struct Solution {
  Placement placement;
  std::string deposition;
  long long border_length;
};

/// True iff `probe` is a subsequence of `sequence`.
bool is_subsequence(std::string_view probe, std::string_view sequence);

/// The trace of how `probe` is built by `deposition` under the exhaustive
/// rule: a string of length |deposition| holding the probe's characters at
/// the earliest admissible positions and kGap elsewhere.
std::string embed(std::string_view probe, std::string_view deposition);

/// Hamming distance between two equal-length embeddings.
long long border_pair(std::string_view e1, std::string_view e2);

/// The per-character mask sequence induced by a deposition sequence.
/// Transparency is recomputed from each cell's residual probe, so the
/// exhaustive rule holds by construction.
std::vector<Mask> derive_masks(const Instance& instance, const Placement& placement,
                               std::string_view deposition);

enum class BorderMethod {
  kHamming,  // sum of embedding Hamming distances over neighboring cells
  kMasks,    // sum of per-mask border lengths
  kFast,     // deduplicated pair table with halved neighbor accumulation
};

long long compute_bl(const Instance& instance, const Placement& placement,
                     std::string_view deposition, BorderMethod method);

/// Removes every position where no cell deposits. The border length is
/// unchanged and the result is good. Idempotent.
std::string strip_redundant(const Instance& instance, std::string_view deposition);

/// True iff every position of the deposition sequence deposits into at
/// least one cell.
bool is_good(const Instance& instance, std::string_view deposition);

/// Recomputes the border length of a solution against its own fields.
bool verify_solution(const Instance& instance, const Solution& solution);

/// Orders candidate solutions by border length, then deposition sequence
/// (alphabet order), then placement grid (row-major probe values).
bool solution_less(const Instance& instance, long long bl_a, std::string_view dep_a,
                   const Placement& pl_a, long long bl_b, std::string_view dep_b,
                   const Placement& pl_b);

}  // namespace bordermin
