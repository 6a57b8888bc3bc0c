#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bordermin/enumeration.hpp"
#include "support/testutil.hpp"

using namespace bordermin;

namespace {

// Reference enumeration: every string over the alphabet up to max_len,
// filtered to good common supersequences.
std::set<std::string> brute_good_sequences(const Instance& inst, std::size_t max_len) {
  std::set<std::string> out;
  std::string current;
  const auto recurse = [&](auto&& self) -> void {
    if (!current.empty()) {
      const bool super = std::all_of(inst.probes.begin(), inst.probes.end(),
                                     [&](const std::string& p) {
                                       return is_subsequence(p, current);
                                     });
      if (super && is_good(inst, current)) out.insert(current);
    }
    if (current.size() == max_len) return;
    for (int i = 0; i < inst.alphabet.size(); ++i) {
      current.push_back(inst.alphabet.symbol(i));
      self(self);
      current.pop_back();
    }
  };
  recurse(recurse);
  return out;
}

}  // namespace

TEST_CASE("good sequences of the two-probe swap instance") {
  const Instance inst(Alphabet("AB"), 1, 2, {"AB", "BA"});
  const auto got = enumerate_good_depositions(inst, 4);
  CHECK(got == std::vector<std::string>{"ABA", "BAB"});
  // Nothing of length 4 and nothing missed, by full enumeration.
  const auto expected = brute_good_sequences(inst, 4);
  CHECK(std::set<std::string>(got.begin(), got.end()) == expected);
}

TEST_CASE("single-probe instance has a single good sequence") {
  const Instance inst(Alphabet("A"), 1, 1, {"A"});
  CHECK(enumerate_good_depositions(inst, 3) == std::vector<std::string>{"A"});
}

TEST_CASE("golden 2x2 stream contains the reference sequence") {
  const Instance inst(Alphabet("ACT"), 2, 2, {"CA", "CT", "TA", "AC"});
  const auto got = enumerate_good_depositions(inst, 8);
  CHECK(std::find(got.begin(), got.end(), "CTAC") != got.end());
  // Emission is lexicographic under the alphabet order.
  CHECK(std::is_sorted(got.begin(), got.end(), [&](const auto& a, const auto& b) {
    return inst.alphabet.lex_less(a, b);
  }));
  // Every emitted sequence is good and within the length bound.
  const int bound = distinct_probes(inst).total_length();
  for (const std::string& d : got) {
    CHECK(is_good(inst, d));
    CHECK(static_cast<int>(d.size()) <= bound);
  }
}

TEST_CASE("enumerator matches full string enumeration on small instances") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    const int rows = 1 + static_cast<int>(testutil::draw_below(rng, 2));
    const int cols = 1 + static_cast<int>(testutil::draw_below(rng, 2));
    const Instance inst = testutil::random_instance(rng, rows, cols, "AB", 2);
    const std::size_t max_len = distinct_probes(inst).total_length();
    const auto got = enumerate_good_depositions(inst, max_len);
    CHECK(std::set<std::string>(got.begin(), got.end()) == brute_good_sequences(inst, max_len));
  }
}

TEST_CASE("max_len below the longest probe is rejected") {
  const Instance inst(Alphabet("AB"), 1, 1, {"AB"});
  CHECK_THROWS_AS(enumerate_good_depositions(inst, 1), Error);
}

TEST_CASE("a tiny node budget trips the cap") {
  const Instance inst(Alphabet("ABC"), 2, 3, {"ABC", "BCA", "CAB", "ACB", "BAC", "CBA"});
  SearchLimits limits;
  limits.node_budget = 10;
  GoodDepositionStream stream(inst, distinct_probes(inst).total_length(), limits);
  CHECK_THROWS_AS(
      [&] {
        while (stream.next()) {
        }
      }(),
      Error);
}

TEST_CASE("primal sequence stream is shortest-first lexicographic") {
  CHECK(enumerate_primal_sequences(Alphabet("AB"), 2) ==
        std::vector<std::string>{"", "A", "B", "AA", "AB", "BA", "BB"});
  CHECK(enumerate_primal_sequences(Alphabet("A"), 0) == std::vector<std::string>{""});
  CHECK(enumerate_primal_sequences(Alphabet("ABC"), 3).size() == 40);  // 1+3+9+27
}

TEST_CASE("expanding the empty primal on identical probes") {
  const Instance inst(Alphabet("AB"), 2, 2, {"AB", "AB", "AB", "AB"});
  CHECK(expand_primal(inst, "") == "AB");
}

TEST_CASE("expanding the alternating 1x3 instance") {
  const Instance inst(Alphabet("ab"), 1, 3, {"a", "b", "a"});
  CHECK(expand_primal(inst, "ab") == "ab");
  CHECK_FALSE(expand_primal(inst, "").has_value());
}

TEST_CASE("expansion rejects unfinishable primals") {
  const Instance inst(Alphabet("AB"), 1, 2, {"A", "B"});
  CHECK_FALSE(expand_primal(inst, "").has_value());
  CHECK(expand_primal(inst, "AB") == "AB");
  // A primal character that deposits nowhere is a dead end.
  const Instance single(Alphabet("AB"), 1, 1, {"A"});
  CHECK_FALSE(expand_primal(single, "B").has_value());
  CHECK_FALSE(expand_primal(single, "A").has_value());  // the step would be trivial
}

TEST_CASE("primal extraction drops exactly the all-transparent steps") {
  const Instance identical(Alphabet("AB"), 1, 2, {"AB", "AB"});
  CHECK(primal_of(identical, "AB") == "");
  const Instance golden(Alphabet("ACT"), 2, 2, {"CA", "CT", "TA", "AC"});
  CHECK(primal_of(golden, "CTAC") == "CTAC");
  const Instance aba(Alphabet("ab"), 1, 3, {"a", "b", "a"});
  CHECK(primal_of(aba, "ab") == "ab");
  CHECK_THROWS_AS(primal_of(aba, "abb"), Error);  // redundant position
}

TEST_CASE("primal round trip over every good sequence of random instances") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const int rows = 1 + static_cast<int>(testutil::draw_below(rng, 2));
    const int cols = 1 + static_cast<int>(testutil::draw_below(rng, 3));
    const Instance inst = testutil::random_instance(rng, rows, cols, "AB", 3);
    GoodDepositionStream stream(inst, distinct_probes(inst).total_length());
    while (auto d = stream.next()) {
      CHECK(expand_primal(inst, primal_of(inst, *d)) == *d);
    }
  }
}

TEST_CASE("budgeted sequences have primals within the budget") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = testutil::random_instance(rng, 1, 3, "AB", 2);
    const Placement placement = Placement::identity(1, 3);
    GoodDepositionStream stream(inst, distinct_probes(inst).total_length());
    while (auto d = stream.next()) {
      const long long bl = compute_bl(inst, placement, *d, BorderMethod::kFast);
      CHECK(static_cast<long long>(primal_of(inst, *d).size()) <= bl);
    }
  }
}

TEST_CASE("column placements respect multiset availability") {
  const Instance two_by_two(Alphabet("AB"), 2, 2, {"A", "A", "B", "B"});
  const auto cols = column_placements(two_by_two);
  // Distinct ids: 0 = "A", 1 = "B".
  CHECK(cols == std::vector<ColumnPlacement>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  const Instance one_row(Alphabet("AB"), 1, 2, {"A", "B"});
  CHECK(column_placements(one_row) == std::vector<ColumnPlacement>{{0}, {1}});

  const Instance tall(Alphabet("AB"), 2, 1, {"A", "B"});
  CHECK(column_placements(tall) == std::vector<ColumnPlacement>{{0, 1}, {1, 0}});
}
