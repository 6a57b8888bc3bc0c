#include "bordermin/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bordermin {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotASupersequence: return "not-a-supersequence";
    case ErrorKind::kLengthMismatch: return "length-mismatch";
    case ErrorKind::kInvalidPlacement: return "invalid-placement";
    case ErrorKind::kInstanceTooLarge: return "instance-too-large";
    case ErrorKind::kNotGood: return "not-good";
    case ErrorKind::kAlphabetCollision: return "alphabet-collision";
    case ErrorKind::kMalformedSolution: return "malformed-solution";
    case ErrorKind::kSyntaxError: return "syntax-error";
    case ErrorKind::kCountMismatch: return "count-mismatch";
    case ErrorKind::kAlphabetViolation: return "alphabet-violation";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) fail(ErrorKind::kInvalidArgument, "alphabet must be non-empty");
  rank_.fill(-1);
  for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
    unsigned char c = static_cast<unsigned char>(symbols_[i]);
    if (symbols_[i] == kGap)
      fail(ErrorKind::kInvalidArgument, "'-' is reserved and cannot be an alphabet symbol");
    if (std::isspace(c) || !std::isprint(c))
      fail(ErrorKind::kInvalidArgument, "alphabet symbols must be printable and non-whitespace");
    if (rank_[c] >= 0)
      fail(ErrorKind::kInvalidArgument, std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    rank_[c] = i;
  }
}

bool Alphabet::lex_less(std::string_view a, std::string_view b) const {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    const int ra = rank(a[i]);
    const int rb = rank(b[i]);
    if (ra >= 0 && rb >= 0) return ra < rb;
    if (ra >= 0) return true;   // alphabet members sort before foreign bytes
    if (rb >= 0) return false;
    return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[i]);
  }
  return a.size() < b.size();
}

Instance::Instance(Alphabet alphabet_in, int rows_in, int cols_in,
                   std::vector<std::string> probes_in, std::optional<long long> budget_in)
    : alphabet(std::move(alphabet_in)),
      rows(rows_in),
      cols(cols_in),
      probes(std::move(probes_in)),
      budget(budget_in) {
  if (rows < 1 || cols < 1) fail(ErrorKind::kInvalidArgument, "array dimensions must be positive");
  if (static_cast<long long>(probes.size()) != static_cast<long long>(rows) * cols) {
    std::ostringstream os;
    os << "expected " << static_cast<long long>(rows) * cols << " probes, got " << probes.size();
    fail(ErrorKind::kCountMismatch, os.str());
  }
  for (const std::string& p : probes) {
    if (p.empty()) fail(ErrorKind::kInvalidArgument, "probes must be non-empty");
    for (char c : p) {
      if (!alphabet.contains(c))
        fail(ErrorKind::kAlphabetViolation,
             std::string("probe character '") + c + "' is not in the alphabet");
    }
  }
  if (budget && *budget < 0) fail(ErrorKind::kInvalidArgument, "budget must be non-negative");
}

int Instance::max_probe_length() const {
  std::size_t m = 0;
  for (const std::string& p : probes) m = std::max(m, p.size());
  return static_cast<int>(m);
}

Instance Instance::transposed() const { return Instance(alphabet, cols, rows, probes, budget); }

Placement::Placement(int rows, int cols, std::vector<int> slot_of_cell)
    : rows_(rows), cols_(cols), slots_(std::move(slot_of_cell)) {
  if (rows_ < 1 || cols_ < 1) fail(ErrorKind::kInvalidPlacement, "placement dimensions must be positive");
  const std::size_t n = static_cast<std::size_t>(rows_) * cols_;
  if (slots_.size() != n) fail(ErrorKind::kInvalidPlacement, "placement grid size mismatch");
  std::vector<char> seen(n, 0);
  for (int s : slots_) {
    if (s < 0 || static_cast<std::size_t>(s) >= n || seen[s])
      fail(ErrorKind::kInvalidPlacement, "placement must be a bijection onto probe slots");
    seen[s] = 1;
  }
}

Placement Placement::identity(int rows, int cols) {
  std::vector<int> slots(static_cast<std::size_t>(rows) * cols);
  std::iota(slots.begin(), slots.end(), 0);
  return Placement(rows, cols, std::move(slots));
}

Placement Placement::flipped_horizontal() const {
  std::vector<int> out(slots_.size());
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r * cols_ + c] = slots_[r * cols_ + (cols_ - 1 - c)];
  return Placement(rows_, cols_, std::move(out));
}

Placement Placement::flipped_vertical() const {
  std::vector<int> out(slots_.size());
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r * cols_ + c] = slots_[(rows_ - 1 - r) * cols_ + c];
  return Placement(rows_, cols_, std::move(out));
}

Placement Placement::transposed() const {
  std::vector<int> out(slots_.size());
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[c * rows_ + r] = slots_[r * cols_ + c];
  return Placement(cols_, rows_, std::move(out));
}

bool Placement::operator==(const Placement& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && slots_ == other.slots_;
}

DistinctProbes distinct_probes(const Instance& instance) {
  DistinctProbes out;
  out.values = instance.probes;
  std::sort(out.values.begin(), out.values.end(),
            [&](const std::string& a, const std::string& b) {
              return instance.alphabet.lex_less(a, b);
            });
  out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
  out.multiplicity.assign(out.values.size(), 0);
  out.of_slot.resize(instance.probes.size());
  for (std::size_t s = 0; s < instance.probes.size(); ++s) {
    const auto it = std::lower_bound(out.values.begin(), out.values.end(), instance.probes[s],
                                     [&](const std::string& a, const std::string& b) {
                                       return instance.alphabet.lex_less(a, b);
                                     });
    const int d = static_cast<int>(it - out.values.begin());
    out.of_slot[s] = d;
    ++out.multiplicity[d];
  }
  return out;
}

int DistinctProbes::total_length() const {
  int sum = 0;
  for (const std::string& v : values) sum += static_cast<int>(v.size());
  return sum;
}

long long Mask::border_length() const {
  long long total = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const bool t = transparent(r, c);
      if (c + 1 < cols && t != transparent(r, c + 1)) ++total;
      if (r + 1 < rows && t != transparent(r + 1, c)) ++total;
    }
  }
  return total;
}

bool is_subsequence(std::string_view probe, std::string_view sequence) {
  std::size_t i = 0;
  for (char c : sequence) {
    if (i < probe.size() && probe[i] == c) ++i;
  }
  return i == probe.size();
}

std::string embed(std::string_view probe, std::string_view deposition) {
  std::string out(deposition.size(), kGap);
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < deposition.size(); ++i) {
    if (cursor < probe.size() && probe[cursor] == deposition[i]) {
      out[i] = deposition[i];
      ++cursor;
    }
  }
  if (cursor != probe.size())
    fail(ErrorKind::kNotASupersequence,
         "probe \"" + std::string(probe) + "\" is not a subsequence of the deposition sequence");
  return out;
}

long long border_pair(std::string_view e1, std::string_view e2) {
  if (e1.size() != e2.size())
    fail(ErrorKind::kLengthMismatch, "embeddings have different lengths");
  long long d = 0;
  for (std::size_t i = 0; i < e1.size(); ++i) d += e1[i] != e2[i];
  return d;
}

namespace {

void check_dims(const Instance& instance, const Placement& placement) {
  if (placement.rows() != instance.rows || placement.cols() != instance.cols)
    fail(ErrorKind::kInvalidPlacement, "placement dimensions do not match the instance");
}

}  // namespace

std::vector<Mask> derive_masks(const Instance& instance, const Placement& placement,
                               std::string_view deposition) {
  check_dims(instance, placement);
  const int n = instance.cell_count();
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Mask> masks;
  masks.reserve(deposition.size());
  for (char x : deposition) {
    Mask mask{x, instance.rows, instance.cols, std::string(n, kGap)};
    for (int cell = 0; cell < n; ++cell) {
      const std::string& probe = instance.probes[placement.slots()[cell]];
      if (cursor[cell] < probe.size() && probe[cursor[cell]] == x) {
        mask.cells[cell] = x;
        ++cursor[cell];
      }
    }
    masks.push_back(std::move(mask));
  }
  for (int cell = 0; cell < n; ++cell) {
    if (cursor[cell] != instance.probes[placement.slots()[cell]].size())
      fail(ErrorKind::kNotASupersequence,
           "deposition sequence does not cover probe \"" +
               instance.probes[placement.slots()[cell]] + "\"");
  }
  return masks;
}

namespace {

long long bl_hamming(const Instance& instance, const Placement& placement,
                     std::string_view deposition) {
  long long total = 0;
  for (int r = 0; r < instance.rows; ++r) {
    for (int c = 0; c < instance.cols; ++c) {
      const std::string& here = instance.probes[placement.slot_at(r, c)];
      if (c + 1 < instance.cols) {
        const std::string& right = instance.probes[placement.slot_at(r, c + 1)];
        total += border_pair(embed(here, deposition), embed(right, deposition));
      }
      if (r + 1 < instance.rows) {
        const std::string& down = instance.probes[placement.slot_at(r + 1, c)];
        total += border_pair(embed(here, deposition), embed(down, deposition));
      }
    }
  }
  return total;
}

long long bl_masks(const Instance& instance, const Placement& placement,
                   std::string_view deposition) {
  long long total = 0;
  for (const Mask& m : derive_masks(instance, placement, deposition)) total += m.border_length();
  return total;
}

long long bl_fast(const Instance& instance, const Placement& placement,
                  std::string_view deposition) {
  const DistinctProbes dp = distinct_probes(instance);
  const int p = dp.count();
  std::vector<std::string> emb(p);
  for (int d = 0; d < p; ++d) emb[d] = embed(dp.values[d], deposition);
  std::vector<long long> table(static_cast<std::size_t>(p) * p, 0);
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b)
      table[a * p + b] = table[b * p + a] = border_pair(emb[a], emb[b]);
  // Accumulate over every cell's full neighborhood, then halve.
  long long doubled = 0;
  for (int r = 0; r < instance.rows; ++r) {
    for (int c = 0; c < instance.cols; ++c) {
      const int d = dp.of_slot[placement.slot_at(r, c)];
      if (r > 0) doubled += table[d * p + dp.of_slot[placement.slot_at(r - 1, c)]];
      if (r + 1 < instance.rows) doubled += table[d * p + dp.of_slot[placement.slot_at(r + 1, c)]];
      if (c > 0) doubled += table[d * p + dp.of_slot[placement.slot_at(r, c - 1)]];
      if (c + 1 < instance.cols) doubled += table[d * p + dp.of_slot[placement.slot_at(r, c + 1)]];
    }
  }
  return doubled / 2;
}

}  // namespace

long long compute_bl(const Instance& instance, const Placement& placement,
                     std::string_view deposition, BorderMethod method) {
  check_dims(instance, placement);
  switch (method) {
    case BorderMethod::kHamming: return bl_hamming(instance, placement, deposition);
    case BorderMethod::kMasks: return bl_masks(instance, placement, deposition);
    case BorderMethod::kFast: return bl_fast(instance, placement, deposition);
  }
  fail(ErrorKind::kInvalidArgument, "unknown border method");
}

namespace {

// Marks each deposition position that advances at least one distinct probe.
// Also validates that every probe is covered.
std::vector<char> deposit_positions(const DistinctProbes& dp, std::string_view deposition) {
  const int p = dp.count();
  std::vector<std::size_t> cursor(p, 0);
  std::vector<char> used(deposition.size(), 0);
  for (std::size_t i = 0; i < deposition.size(); ++i) {
    for (int d = 0; d < p; ++d) {
      if (cursor[d] < dp.values[d].size() && dp.values[d][cursor[d]] == deposition[i]) {
        ++cursor[d];
        used[i] = 1;
      }
    }
  }
  for (int d = 0; d < p; ++d) {
    if (cursor[d] != dp.values[d].size())
      fail(ErrorKind::kNotASupersequence,
           "deposition sequence does not cover probe \"" + dp.values[d] + "\"");
  }
  return used;
}

}  // namespace

std::string strip_redundant(const Instance& instance, std::string_view deposition) {
  const std::vector<char> used = deposit_positions(distinct_probes(instance), deposition);
  std::string out;
  out.reserve(deposition.size());
  for (std::size_t i = 0; i < deposition.size(); ++i)
    if (used[i]) out.push_back(deposition[i]);
  return out;
}

bool is_good(const Instance& instance, std::string_view deposition) {
  const std::vector<char> used = deposit_positions(distinct_probes(instance), deposition);
  return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

bool verify_solution(const Instance& instance, const Solution& solution) {
  return compute_bl(instance, solution.placement, solution.deposition, BorderMethod::kHamming) ==
         solution.border_length;
}

bool solution_less(const Instance& instance, long long bl_a, std::string_view dep_a,
                   const Placement& pl_a, long long bl_b, std::string_view dep_b,
                   const Placement& pl_b) {
  if (bl_a != bl_b) return bl_a < bl_b;
  if (dep_a != dep_b) return instance.alphabet.lex_less(dep_a, dep_b);
  const std::vector<int>& sa = pl_a.slots();
  const std::vector<int>& sb = pl_b.slots();
  for (std::size_t i = 0; i < sa.size() && i < sb.size(); ++i) {
    const std::string& a = instance.probes[sa[i]];
    const std::string& b = instance.probes[sb[i]];
    if (a != b) return instance.alphabet.lex_less(a, b);
  }
  return false;
}

}  // namespace bordermin
