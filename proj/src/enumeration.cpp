#include "bordermin/enumeration.hpp"

#include <algorithm>

namespace bordermin {

namespace {

void bump_nodes(std::uint64_t& nodes, const SearchLimits& limits) {
  ++nodes;
  if (nodes > limits.node_budget)
    fail(ErrorKind::kInstanceTooLarge, "search node budget exceeded (" +
                                           std::to_string(limits.node_budget) + " nodes)");
  if (limits.deadline && (nodes & 1023) == 0 &&
      std::chrono::steady_clock::now() > *limits.deadline)
    fail(ErrorKind::kInstanceTooLarge, "search deadline exceeded");
}

}  // namespace

GoodDepositionStream::GoodDepositionStream(const Instance& instance, std::size_t max_len,
                                           SearchLimits limits)
    : alphabet_(instance.alphabet), max_len_(max_len), limits_(limits) {
  const DistinctProbes dp = distinct_probes(instance);
  values_ = dp.values;
  cursor_.assign(values_.size(), 0);
  if (max_len_ < static_cast<std::size_t>(instance.max_probe_length()))
    fail(ErrorKind::kInvalidArgument, "max_len is shorter than the longest probe");
}

bool GoodDepositionStream::all_done() const {
  for (std::size_t d = 0; d < values_.size(); ++d)
    if (cursor_[d] != values_[d].size()) return false;
  return true;
}

void GoodDepositionStream::pop_frame() {
  for (int d : stack_.back().advanced) --cursor_[d];
  if (stack_.size() > 1) current_.pop_back();
  stack_.pop_back();
}

std::optional<std::string> GoodDepositionStream::next() {
  if (!started_) {
    started_ = true;
    stack_.push_back(Frame{});
    // Probes are non-empty, so the empty sequence is never complete.
  }
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    bool descended = false;
    while (top.next_symbol < alphabet_.size() && current_.size() < max_len_) {
      const char x = alphabet_.symbol(top.next_symbol++);
      std::vector<int> advanced;
      for (std::size_t d = 0; d < values_.size(); ++d) {
        if (cursor_[d] < values_[d].size() && values_[d][cursor_[d]] == x)
          advanced.push_back(static_cast<int>(d));
      }
      if (advanced.empty()) continue;
      bump_nodes(nodes_, limits_);
      for (int d : advanced) ++cursor_[d];
      current_.push_back(x);
      stack_.push_back(Frame{0, std::move(advanced)});
      if (all_done()) return current_;  // leaf; popped on the next call
      descended = true;
      break;
    }
    if (!descended) pop_frame();
  }
  return std::nullopt;
}

std::vector<std::string> enumerate_good_depositions(const Instance& instance, std::size_t max_len,
                                                    SearchLimits limits) {
  GoodDepositionStream stream(instance, max_len, limits);
  std::vector<std::string> out;
  while (auto d = stream.next()) out.push_back(std::move(*d));
  return out;
}

PrimalSequenceStream::PrimalSequenceStream(const Alphabet& alphabet, std::size_t max_len)
    : alphabet_(alphabet), max_len_(max_len) {}

std::optional<std::string> PrimalSequenceStream::next() {
  if (done_) return std::nullopt;
  if (!emitted_empty_) {
    emitted_empty_ = true;
    if (max_len_ == 0) done_ = true;
    return std::string();
  }
  if (digits_.empty()) {
    digits_.assign(1, 0);
  } else {
    // Odometer increment; on overflow grow to the next length.
    int i = static_cast<int>(digits_.size()) - 1;
    while (i >= 0 && digits_[i] == alphabet_.size() - 1) {
      digits_[i] = 0;
      --i;
    }
    if (i >= 0) {
      ++digits_[i];
    } else {
      if (digits_.size() == max_len_) {
        done_ = true;
        return std::nullopt;
      }
      digits_.assign(digits_.size() + 1, 0);
    }
  }
  std::string out(digits_.size(), ' ');
  for (std::size_t i = 0; i < digits_.size(); ++i) out[i] = alphabet_.symbol(digits_[i]);
  return out;
}

std::vector<std::string> enumerate_primal_sequences(const Alphabet& alphabet,
                                                    std::size_t max_len) {
  PrimalSequenceStream stream(alphabet, max_len);
  std::vector<std::string> out;
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

namespace {

struct Residuals {
  const std::vector<std::string>& values;
  std::vector<std::size_t> cursor;

  explicit Residuals(const std::vector<std::string>& v) : values(v), cursor(v.size(), 0) {}

  bool finished(std::size_t d) const { return cursor[d] == values[d].size(); }
  bool all_finished() const {
    for (std::size_t d = 0; d < values.size(); ++d)
      if (!finished(d)) return false;
    return true;
  }
  // A step for x is trivial iff every cell would be transparent: no probe is
  // finished and every residual begins with x.
  std::optional<char> trivial_char() const {
    char x = 0;
    for (std::size_t d = 0; d < values.size(); ++d) {
      if (finished(d)) return std::nullopt;
      const char c = values[d][cursor[d]];
      if (d == 0)
        x = c;
      else if (c != x)
        return std::nullopt;
    }
    return x;
  }
  int apply(char x) {
    int advanced = 0;
    for (std::size_t d = 0; d < values.size(); ++d) {
      if (!finished(d) && values[d][cursor[d]] == x) {
        ++cursor[d];
        ++advanced;
      }
    }
    return advanced;
  }
};

}  // namespace

std::optional<std::string> expand_primal(const Instance& instance, std::string_view primal) {
  const DistinctProbes dp = distinct_probes(instance);
  Residuals res(dp.values);
  std::string out;
  out.reserve(primal.size() + dp.total_length());
  std::size_t i = 0;
  while (true) {
    while (auto t = res.trivial_char()) {
      res.apply(*t);
      out.push_back(*t);
    }
    if (i == primal.size()) break;
    const char x = primal[i++];
    if (res.apply(x) == 0) return std::nullopt;  // deposits nowhere
    out.push_back(x);
  }
  if (!res.all_finished()) return std::nullopt;
  return out;
}

std::string primal_of(const Instance& instance, std::string_view deposition) {
  const DistinctProbes dp = distinct_probes(instance);
  Residuals res(dp.values);
  std::string out;
  for (char x : deposition) {
    const bool trivial = res.trivial_char() == std::optional<char>(x);
    if (res.apply(x) == 0)
      fail(ErrorKind::kNotGood, "deposition sequence has a redundant position");
    if (!trivial) out.push_back(x);
  }
  if (!res.all_finished())
    fail(ErrorKind::kNotASupersequence, "deposition sequence does not cover every probe");
  return out;
}

std::vector<ColumnPlacement> column_placements(const Instance& instance) {
  const DistinctProbes dp = distinct_probes(instance);
  const int p = dp.count();
  std::vector<ColumnPlacement> out;
  ColumnPlacement column(instance.rows, 0);
  std::vector<int> used(p, 0);
  const auto recurse = [&](auto&& self, int row) -> void {
    if (row == instance.rows) {
      out.push_back(column);
      return;
    }
    for (int d = 0; d < p; ++d) {
      if (used[d] == dp.multiplicity[d]) continue;
      column[row] = d;
      ++used[d];
      self(self, row + 1);
      --used[d];
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace bordermin
