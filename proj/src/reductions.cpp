#include "bordermin/reductions.hpp"

#include <algorithm>
#include <set>

namespace bordermin {

long long separator_min_u(long long max_prefix, long long max_suffix) {
  return 8 * max_prefix + 8 * max_suffix + 1;
}

std::string build_separator(const SeparatorSpec& spec, std::size_t size_cap) {
  if (spec.x_char == spec.y_char)
    fail(ErrorKind::kInvalidArgument, "separator characters must differ");
  if (spec.u < 1 || spec.rows < 1 || spec.cols < 1)
    fail(ErrorKind::kInvalidArgument, "separator parameters must be positive");
  const long long run = static_cast<long long>(spec.rows) * spec.cols * spec.u;
  const long long length = 2 * run * run;
  if (length > static_cast<long long>(size_cap))
    fail(ErrorKind::kInstanceTooLarge,
         "separator of length " + std::to_string(length) + " exceeds the size cap");
  std::string out;
  out.reserve(static_cast<std::size_t>(length));
  for (long long block = 0; block < run; ++block) {
    out.append(static_cast<std::size_t>(run), spec.x_char);
    out.append(static_cast<std::size_t>(run), spec.y_char);
  }
  return out;
}

AbGrid make_ab_grid(int rows, int cols, int t, std::string_view separator, char a, char b) {
  if (rows < 1 || cols < 1 || t < 1)
    fail(ErrorKind::kInvalidArgument, "grid parameters must be positive");
  if (separator.find(a) != std::string_view::npos || separator.find(b) != std::string_view::npos)
    fail(ErrorKind::kAlphabetCollision, "separator reuses a run character");

  std::string symbols;
  symbols.push_back(a);
  symbols.push_back(b);
  std::set<char> seen{a, b};
  for (char c : separator) {
    if (seen.insert(c).second) symbols.push_back(c);
  }
  Alphabet alphabet(symbols);

  std::vector<std::string> probes;
  probes.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) {
      std::string probe;
      probe.reserve(static_cast<std::size_t>(i) * t + separator.size() +
                    static_cast<std::size_t>(j) * t);
      probe.append(static_cast<std::size_t>(i) * t, a);
      probe.append(separator);
      probe.append(static_cast<std::size_t>(j) * t, b);
      probes.push_back(std::move(probe));
    }
  }
  std::string deposition;
  deposition.append(static_cast<std::size_t>(rows) * t, a);
  deposition.append(separator);
  deposition.append(static_cast<std::size_t>(cols) * t, b);

  return AbGrid{Instance(alphabet, rows, cols, std::move(probes)),
                Placement::identity(rows, cols), std::move(deposition)};
}

ReductionConstants faithful_reduction_constants(const Instance& instance) {
  const long long base =
      static_cast<long long>(instance.max_probe_length()) * instance.rows * instance.cols;
  ReductionConstants k;
  k.t = base * base + 1;
  k.u2 = 100 * k.t * k.t * k.t + 1;
  k.u1 = 1000 * k.t * k.t * k.t * k.t + 1;
  return k;
}

long long reduced_instance_size(const Instance& instance, const ReductionConstants& constants) {
  const long long rm = static_cast<long long>(instance.rows) * instance.cols;
  const long long run1 = rm * constants.u1;
  const long long run2 = rm * constants.u2;
  const long long sep1 = 2 * run1 * run1;
  const long long sep2 = 2 * run2 * run2;
  long long total = 0;
  for (int i = 1; i <= instance.rows; ++i)
    for (int j = 1; j <= instance.cols; ++j)
      total += static_cast<long long>(i) * constants.t + sep1 +
               static_cast<long long>(j) * constants.t + sep2;
  for (const std::string& probe : instance.probes) total += static_cast<long long>(probe.size());
  return total;
}

ReducedInstance encode_placement_instance(const Instance& instance, const Placement& placement,
                                          std::optional<ReductionConstants> constants,
                                          FreshChars fresh, std::size_t size_cap) {
  if (placement.rows() != instance.rows || placement.cols() != instance.cols)
    fail(ErrorKind::kInvalidPlacement, "placement dimensions do not match the instance");
  const ReductionConstants faithful = faithful_reduction_constants(instance);
  const bool guaranteed =
      !constants || (constants->t >= faithful.t && constants->u1 >= faithful.u1 &&
                     constants->u2 >= faithful.u2);
  const ReductionConstants k = constants.value_or(faithful);
  if (k.t < 1 || k.u1 < 1 || k.u2 < 1)
    fail(ErrorKind::kInvalidArgument, "reduction constants must be positive");

  const char fresh_chars[6] = {fresh.a, fresh.b, fresh.x1, fresh.y1, fresh.x2, fresh.y2};
  std::set<char> unique;
  for (char c : fresh_chars) {
    if (instance.alphabet.contains(c))
      fail(ErrorKind::kAlphabetCollision,
           std::string("fresh character '") + c + "' is already in the alphabet");
    if (!unique.insert(c).second)
      fail(ErrorKind::kAlphabetCollision, "fresh characters must be pairwise distinct");
  }

  const long long size = reduced_instance_size(instance, k);
  if (size > static_cast<long long>(size_cap))
    fail(ErrorKind::kInstanceTooLarge, "reduced instance of " + std::to_string(size) +
                                           " characters exceeds the size cap");

  const std::string sep1 =
      build_separator({fresh.x1, fresh.y1, k.u1, instance.rows, instance.cols}, size_cap);
  const std::string sep2 =
      build_separator({fresh.x2, fresh.y2, k.u2, instance.rows, instance.cols}, size_cap);

  std::string symbols;
  for (char c : fresh_chars) symbols.push_back(c);
  symbols += instance.alphabet.symbols();

  std::vector<std::string> probes;
  probes.reserve(instance.probes.size());
  for (int i = 1; i <= instance.rows; ++i) {
    for (int j = 1; j <= instance.cols; ++j) {
      const std::string& source = instance.probes[placement.slot_at(i - 1, j - 1)];
      std::string probe;
      probe.reserve(static_cast<std::size_t>(i) * k.t + sep1.size() +
                    static_cast<std::size_t>(j) * k.t + sep2.size() + source.size());
      probe.append(static_cast<std::size_t>(i) * k.t, fresh.a);
      probe.append(sep1);
      probe.append(static_cast<std::size_t>(j) * k.t, fresh.b);
      probe.append(sep2);
      probe.append(source);
      probes.push_back(std::move(probe));
    }
  }
  return ReducedInstance{
      Instance(Alphabet(symbols), instance.rows, instance.cols, std::move(probes)), k, guaranteed};
}

namespace {

const char* kPartitionSymbols = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

}  // namespace

Instance balanced_partition_instance(const GridGraph& grid, int k) {
  if (grid.rows < 1 || grid.cols < 1)
    fail(ErrorKind::kInvalidArgument, "grid dimensions must be positive");
  const int n = grid.rows * grid.cols;
  if (k < 1 || k > n)
    fail(ErrorKind::kInvalidArgument, "class count must be between 1 and the cell count");
  if (k > static_cast<int>(std::string(kPartitionSymbols).size()))
    fail(ErrorKind::kInvalidArgument, "class count exceeds the available symbol pool");

  const int base = n / k;
  const int extra = n % k;  // first `extra` characters get one more copy
  std::string symbols(kPartitionSymbols, static_cast<std::size_t>(k));
  std::vector<std::string> probes;
  probes.reserve(n);
  for (int i = 0; i < k; ++i) {
    const int copies = base + (i < extra ? 1 : 0);
    for (int c = 0; c < copies; ++c) probes.push_back(std::string(1, symbols[i]));
  }
  return Instance(Alphabet(symbols), grid.rows, grid.cols, std::move(probes));
}

PartitionResult extract_partition(const Instance& instance, const Solution& solution, int k) {
  if (k < 1) fail(ErrorKind::kInvalidArgument, "class count must be positive");
  for (const std::string& probe : instance.probes) {
    if (probe.size() != 1)
      fail(ErrorKind::kMalformedSolution, "partition extraction needs single-character probes");
  }
  if (instance.alphabet.size() < k)
    fail(ErrorKind::kMalformedSolution, "alphabet smaller than the class count");

  const long long bl =
      compute_bl(instance, solution.placement, solution.deposition, BorderMethod::kHamming);
  if (bl % 2 != 0)
    fail(ErrorKind::kMalformedSolution, "border length of a partition solution must be even");

  PartitionResult out;
  out.cut_size = bl / 2;
  out.classes.assign(k, {});
  for (int cell = 0; cell < instance.cell_count(); ++cell) {
    const char c = instance.probes[solution.placement.slots()[cell]][0];
    const int cls = instance.alphabet.rank(c);
    if (cls < 0 || cls >= k)
      fail(ErrorKind::kMalformedSolution, "placed character outside the class alphabet");
    out.classes[cls].push_back(cell);
  }
  return out;
}

}  // namespace bordermin
