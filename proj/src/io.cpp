#include "bordermin/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace bordermin {

namespace {

struct Token {
  std::string text;
  int line;
};

// Whitespace-splits the input, dropping '#' comments, keeping line numbers.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  std::string current;
  int current_line = 0;
  bool in_comment = false;
  const auto flush = [&]() {
    if (!current.empty()) {
      tokens.push_back({current, current_line});
      current.clear();
    }
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      in_comment = false;
      ++line;
      continue;
    }
    if (in_comment) continue;
    if (c == '#') {
      flush();
      in_comment = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      continue;
    }
    if (current.empty()) current_line = line;
    current.push_back(c);
  }
  flush();
  return tokens;
}

class TokenReader {
 public:
  explicit TokenReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool at_end() const { return pos_ == tokens_.size(); }
  const Token& peek() const {
    if (at_end()) fail(ErrorKind::kSyntaxError, "unexpected end of input");
    return tokens_[pos_];
  }
  Token take() {
    Token t = peek();
    ++pos_;
    return t;
  }
  std::string expect(std::string_view literal) {
    const Token t = take();
    if (t.text != literal)
      fail(ErrorKind::kSyntaxError, "line " + std::to_string(t.line) + ": expected \"" +
                                        std::string(literal) + "\", got \"" + t.text + "\"");
    return t.text;
  }
  long long take_integer(std::string_view what) {
    const Token t = take();
    try {
      std::size_t used = 0;
      const long long value = std::stoll(t.text, &used);
      if (used != t.text.size()) throw std::invalid_argument(t.text);
      return value;
    } catch (const std::exception&) {
      fail(ErrorKind::kSyntaxError, "line " + std::to_string(t.line) + ": expected " +
                                        std::string(what) + ", got \"" + t.text + "\"");
    }
  }
  int last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::vector<int> read_placement_slots(TokenReader& reader, int n) {
  std::vector<int> slots;
  slots.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (reader.at_end())
      fail(ErrorKind::kCountMismatch, "placement section ended after " + std::to_string(i) +
                                          " of " + std::to_string(n) + " entries");
    const int line = reader.peek().line;
    const long long v = reader.take_integer("a placement index");
    if (v < 1 || v > n)
      fail(ErrorKind::kInvalidPlacement, "line " + std::to_string(line) + ": placement index " +
                                             std::to_string(v) + " out of range 1.." +
                                             std::to_string(n));
    slots.push_back(static_cast<int>(v) - 1);
  }
  return slots;
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
  TokenReader reader(tokenize(text));
  if (reader.at_end()) fail(ErrorKind::kSyntaxError, "empty instance file");
  reader.expect("BMPE");
  {
    const Token v = reader.take();
    if (v.text != "1")
      fail(ErrorKind::kSyntaxError,
           "line " + std::to_string(v.line) + ": unsupported format version \"" + v.text + "\"");
  }

  std::optional<std::string> alphabet_symbols;
  if (!reader.at_end() && reader.peek().text == "alphabet") {
    reader.take();
    alphabet_symbols = reader.take().text;
  }

  const int declared_line = reader.at_end() ? reader.last_line() : reader.peek().line;
  const long long rows = reader.take_integer("the row count");
  const long long cols = reader.take_integer("the column count");
  if (rows < 1 || cols < 1 || rows * cols > 1'000'000)
    fail(ErrorKind::kSyntaxError,
         "line " + std::to_string(declared_line) + ": invalid array dimensions");
  const int n = static_cast<int>(rows * cols);

  std::vector<std::string> probes;
  probes.reserve(n);
  while (static_cast<int>(probes.size()) < n && !reader.at_end() &&
         reader.peek().text != "placement" && reader.peek().text != "budget") {
    probes.push_back(reader.take().text);
  }
  if (static_cast<int>(probes.size()) != n)
    fail(ErrorKind::kCountMismatch, "declared " + std::to_string(rows) + "x" +
                                        std::to_string(cols) + " = " + std::to_string(n) +
                                        " probes but found " + std::to_string(probes.size()));

  if (!alphabet_symbols) {
    std::set<char> chars;
    for (const std::string& p : probes) chars.insert(p.begin(), p.end());
    alphabet_symbols = std::string(chars.begin(), chars.end());
  }
  Alphabet alphabet(*alphabet_symbols);
  for (const std::string& p : probes) {
    for (char c : p) {
      if (!alphabet.contains(c))
        fail(ErrorKind::kAlphabetViolation,
             std::string("probe character '") + c + "' is not in the declared alphabet");
    }
  }

  std::optional<Placement> placement;
  std::optional<long long> budget;
  while (!reader.at_end()) {
    const Token section = reader.take();
    if (section.text == "placement") {
      if (placement)
        fail(ErrorKind::kSyntaxError,
             "line " + std::to_string(section.line) + ": duplicate placement section");
      placement = Placement(static_cast<int>(rows), static_cast<int>(cols),
                            read_placement_slots(reader, n));
    } else if (section.text == "budget") {
      if (budget)
        fail(ErrorKind::kSyntaxError,
             "line " + std::to_string(section.line) + ": duplicate budget line");
      budget = reader.take_integer("the budget");
      if (*budget < 0)
        fail(ErrorKind::kSyntaxError,
             "line " + std::to_string(section.line) + ": budget must be non-negative");
    } else {
      fail(ErrorKind::kSyntaxError, "line " + std::to_string(section.line) +
                                        ": unexpected token \"" + section.text + "\"");
    }
  }

  return ParsedInstance{
      Instance(std::move(alphabet), static_cast<int>(rows), static_cast<int>(cols),
               std::move(probes), budget),
      std::move(placement)};
}

std::string serialize_instance(const Instance& instance, const Placement* placement) {
  std::ostringstream os;
  os << "BMPE 1\n";
  os << "alphabet " << instance.alphabet.symbols() << "\n";
  os << instance.rows << " " << instance.cols << "\n";
  for (int r = 0; r < instance.rows; ++r) {
    for (int c = 0; c < instance.cols; ++c) {
      if (c) os << " ";
      os << instance.probes[r * instance.cols + c];
    }
    os << "\n";
  }
  if (placement) {
    os << "placement\n";
    for (int r = 0; r < instance.rows; ++r) {
      for (int c = 0; c < instance.cols; ++c) {
        if (c) os << " ";
        os << placement->slot_at(r, c) + 1;
      }
      os << "\n";
    }
  }
  if (instance.budget) os << "budget " << *instance.budget << "\n";
  return os.str();
}

SolutionFileData parse_solution(std::string_view text) {
  TokenReader reader(tokenize(text));
  if (reader.at_end()) fail(ErrorKind::kSyntaxError, "empty solution file");
  reader.expect("BMPS");
  {
    const Token v = reader.take();
    if (v.text != "1")
      fail(ErrorKind::kSyntaxError,
           "line " + std::to_string(v.line) + ": unsupported format version \"" + v.text + "\"");
  }
  reader.expect("deposition");
  SolutionFileData out;
  out.deposition = reader.take().text;
  reader.expect("placement");
  while (!reader.at_end() && reader.peek().text != "bl") {
    const int line = reader.peek().line;
    const long long v = reader.take_integer("a placement index");
    if (v < 1)
      fail(ErrorKind::kMalformedSolution,
           "line " + std::to_string(line) + ": placement index must be positive");
    out.placement_slots.push_back(static_cast<int>(v) - 1);
  }
  reader.expect("bl");
  out.claimed_bl = reader.take_integer("the claimed border length");
  if (!reader.at_end())
    fail(ErrorKind::kSyntaxError,
         "line " + std::to_string(reader.peek().line) + ": trailing content");
  return out;
}

std::string serialize_solution(const Solution& solution) {
  std::ostringstream os;
  os << "BMPS 1\n";
  os << "deposition " << solution.deposition << "\n";
  os << "placement\n";
  for (int r = 0; r < solution.placement.rows(); ++r) {
    for (int c = 0; c < solution.placement.cols(); ++c) {
      if (c) os << " ";
      os << solution.placement.slot_at(r, c) + 1;
    }
    os << "\n";
  }
  os << "bl " << solution.border_length << "\n";
  return os.str();
}

VerifyReport verify(const Instance& instance, const Placement& placement,
                    std::string_view deposition, long long claimed_bl) {
  VerifyReport report;
  report.claimed = claimed_bl;
  report.supersequence =
      std::all_of(instance.probes.begin(), instance.probes.end(),
                  [&](const std::string& p) { return is_subsequence(p, deposition); });
  if (!report.supersequence) {
    report.failures.push_back("deposition sequence is not a common supersequence of the probes");
    return report;
  }
  report.recomputed_hamming = compute_bl(instance, placement, deposition, BorderMethod::kHamming);
  report.recomputed_masks = compute_bl(instance, placement, deposition, BorderMethod::kMasks);
  report.good = is_good(instance, deposition);
  if (!report.good) {
    report.warnings.push_back("deposition sequence is redundant; equivalent good form: " +
                              strip_redundant(instance, deposition));
  }
  if (report.recomputed_hamming != claimed_bl)
    report.failures.push_back("pairwise recomputation gives " +
                              std::to_string(report.recomputed_hamming) + ", claim is " +
                              std::to_string(claimed_bl));
  if (report.recomputed_masks != claimed_bl)
    report.failures.push_back("mask recomputation gives " +
                              std::to_string(report.recomputed_masks) + ", claim is " +
                              std::to_string(claimed_bl));
  report.pass = report.failures.empty();
  return report;
}

}  // namespace bordermin
