// Command-line front end: solvers, verification, instance generators, and a
// benchmark harness over the instance/solution text formats.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bordermin/core.hpp"
#include "bordermin/enumeration.hpp"
#include "bordermin/io.hpp"
#include "bordermin/reductions.hpp"
#include "bordermin/solvers.hpp"

namespace {

using json = nlohmann::json;
using namespace bordermin;

constexpr int kExitSolved = 0;
constexpr int kExitNoInstance = 1;
constexpr int kExitError = 2;
constexpr int kExitCapExceeded = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kSyntaxError, "cannot open \"" + path + "\"");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SolverOptions make_options() {
  SolverOptions options;
  if (const char* env = std::getenv("BORDERMIN_NODE_BUDGET")) {
    try {
      options.limits.node_budget = std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorKind::kInvalidArgument, "BORDERMIN_NODE_BUDGET is not a number");
    }
  }
  return options;
}

json placement_json(const Placement& placement) {
  json rows = json::array();
  for (int r = 0; r < placement.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < placement.cols(); ++c) row.push_back(placement.slot_at(r, c) + 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

json stats_json(const SolveStats& stats) {
  return json{{"nodes", stats.nodes}, {"branches", stats.branches},
              {"candidates", stats.candidates}};
}

void print_masks(std::ostream& os, const Instance& instance, const Solution& solution) {
  const auto masks = derive_masks(instance, solution.placement, solution.deposition);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    os << "# mask " << i + 1 << " char " << masks[i].deposit_char << " border "
       << masks[i].border_length() << "\n";
    for (int r = 0; r < masks[i].rows; ++r) {
      os << "#   ";
      for (int c = 0; c < masks[i].cols; ++c) os << masks[i].cells[r * masks[i].cols + c];
      os << "\n";
    }
  }
}

int emit_solution(const Instance& instance, const std::string& solver,
                  const std::optional<Solution>& solution, const SolveStats& stats, bool as_json,
                  bool dump_masks, std::optional<long long> budget) {
  if (as_json) {
    json out{{"format", "bordermin-solution"},
             {"version", 1},
             {"solver", solver},
             {"stats", stats_json(stats)}};
    if (budget) out["budget"] = *budget;
    if (solution) {
      out["status"] = "solved";
      out["border_length"] = solution->border_length;
      out["deposition"] = solution->deposition;
      out["placement"] = placement_json(solution->placement);
    } else {
      out["status"] = "no-instance";
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "# solver " << solver << "\n";
    std::cout << "# nodes " << stats.nodes << " branches " << stats.branches << " candidates "
              << stats.candidates << "\n";
    if (!solution) {
      std::cout << "# no solution within budget " << (budget ? std::to_string(*budget) : "?")
                << "\n";
    } else {
      if (dump_masks) print_masks(std::cout, instance, *solution);
      std::cout << serialize_solution(*solution);
    }
  }
  return solution ? kExitSolved : kExitNoInstance;
}

// ---------------------------------------------------------------------------
// solve subcommands

struct SolveArgs {
  std::string file;
  std::optional<long long> budget;
  std::string algo = "auto";
  bool dump_masks = false;
};

int run_solve_pbmp(const SolveArgs& args, bool as_json) {
  const ParsedInstance parsed = parse_instance(read_input(args.file));
  if (!parsed.placement)
    fail(ErrorKind::kInvalidArgument, "solve-pbmp needs an instance file with a placement section");
  const std::optional<long long> budget =
      args.budget ? args.budget : parsed.instance.budget;
  const SolverOptions options = make_options();
  SolveStats stats;
  std::optional<Solution> solution;
  if (budget) {
    solution = solve_pbmp_budget(parsed.instance, *parsed.placement, *budget, options, &stats);
  } else {
    solution = solve_pbmp(parsed.instance, *parsed.placement, options, &stats);
  }
  return emit_solution(parsed.instance, "pbmp", solution, stats, as_json, args.dump_masks, budget);
}

int run_solve_bmp(const SolveArgs& args, bool as_json) {
  const ParsedInstance parsed = parse_instance(read_input(args.file));
  const std::optional<long long> budget =
      args.budget ? args.budget : parsed.instance.budget;
  std::string algo = args.algo;
  if (algo == "auto") algo = budget ? "case-split" : "template";
  const SolverOptions options = make_options();
  SolveStats stats;
  std::optional<Solution> solution;
  if (algo == "oracle") {
    solution = solve_bmp_oracle(parsed.instance, options, &stats);
    if (budget && solution->border_length > *budget) solution.reset();
  } else if (algo == "template") {
    solution = solve_bmp_template(parsed.instance, options, &stats);
    if (budget && solution->border_length > *budget) solution.reset();
  } else if (algo == "case-split") {
    if (!budget)
      fail(ErrorKind::kInvalidArgument, "the case-split solver needs a budget (--budget or file)");
    solution = solve_bmp_budget(parsed.instance, *budget, options, &stats);
  } else {
    fail(ErrorKind::kInvalidArgument, "unknown solver \"" + algo + "\"");
  }
  return emit_solution(parsed.instance, "bmp-" + algo, solution, stats, as_json, args.dump_masks,
                       budget);
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& instance_path, const std::string& solution_path, bool as_json) {
  const ParsedInstance parsed = parse_instance(read_input(instance_path));
  const SolutionFileData data = parse_solution(read_input(solution_path));
  const int n = parsed.instance.cell_count();
  if (static_cast<int>(data.placement_slots.size()) != n)
    fail(ErrorKind::kMalformedSolution,
         "solution placement has " + std::to_string(data.placement_slots.size()) +
             " entries, instance needs " + std::to_string(n));
  for (int s : data.placement_slots) {
    if (s < 0 || s >= n)
      fail(ErrorKind::kMalformedSolution, "solution placement index out of range");
  }
  Placement placement(parsed.instance.rows, parsed.instance.cols, data.placement_slots);
  const VerifyReport report =
      verify(parsed.instance, placement, data.deposition, data.claimed_bl);
  if (as_json) {
    json out{{"format", "bordermin-verify"},
             {"version", 1},
             {"verdict", report.pass ? "PASS" : "FAIL"},
             {"supersequence", report.supersequence},
             {"good", report.good},
             {"claimed", report.claimed},
             {"recomputed_hamming", report.recomputed_hamming},
             {"recomputed_masks", report.recomputed_masks},
             {"warnings", report.warnings},
             {"failures", report.failures}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "supersequence " << (report.supersequence ? "yes" : "no") << "\n";
    if (report.supersequence) {
      std::cout << "recomputed_hamming " << report.recomputed_hamming << "\n";
      std::cout << "recomputed_masks " << report.recomputed_masks << "\n";
      std::cout << "good " << (report.good ? "yes" : "no") << "\n";
    }
    std::cout << "claimed " << report.claimed << "\n";
    for (const std::string& w : report.warnings) std::cout << "warning: " << w << "\n";
    for (const std::string& f : report.failures) std::cout << "failure: " << f << "\n";
    std::cout << "verdict " << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? kExitSolved : kExitNoInstance;
}

// ---------------------------------------------------------------------------
// generators

// Platform-stable bounded draw (uniform_int_distribution is not portable).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

struct GenRandomArgs {
  int rows = 2;
  int cols = 2;
  std::string alphabet = "ACGT";
  int len_min = 1;
  int len_max = 4;
  std::uint64_t seed = 0;
  bool with_placement = false;
  std::optional<long long> budget;
};

int run_gen_random(const GenRandomArgs& args) {
  if (args.len_min < 1 || args.len_max < args.len_min)
    fail(ErrorKind::kInvalidArgument, "invalid probe length range");
  Alphabet alphabet(args.alphabet);
  std::mt19937_64 rng(args.seed);
  const int n = args.rows * args.cols;
  std::vector<std::string> probes;
  probes.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int len =
        args.len_min + static_cast<int>(draw_below(rng, args.len_max - args.len_min + 1));
    std::string probe(len, ' ');
    for (char& c : probe) c = alphabet.symbol(static_cast<int>(draw_below(rng, alphabet.size())));
    probes.push_back(std::move(probe));
  }
  Instance instance(alphabet, args.rows, args.cols, std::move(probes), args.budget);
  std::cout << "# gen random seed " << args.seed << "\n";
  if (args.with_placement) {
    const Placement placement = Placement::identity(args.rows, args.cols);
    std::cout << serialize_instance(instance, &placement);
  } else {
    std::cout << serialize_instance(instance);
  }
  return kExitSolved;
}

struct GenAbGridArgs {
  int rows = 2;
  int cols = 2;
  int t = 1;
  std::optional<long long> u;
  bool contiguity_grade = false;
};

int run_gen_ab_grid(const GenAbGridArgs& args) {
  long long u = args.u.value_or(1);
  if (args.contiguity_grade) {
    const long long run = static_cast<long long>(args.rows) * args.t;
    const long long col_run = static_cast<long long>(args.cols) * args.t;
    u = separator_min_u(run, col_run);
  }
  const std::string separator =
      build_separator({'x', 'y', u, args.rows, args.cols});
  const AbGrid grid = make_ab_grid(args.rows, args.cols, args.t, separator);
  std::cout << "# gen ab-grid u " << u << "\n";
  std::cout << "# canonical deposition length " << grid.canonical_deposition.size() << "\n";
  std::cout << serialize_instance(grid.instance, &grid.canonical_placement);
  return kExitSolved;
}

int run_gen_kbp(int rows, int cols, int k) {
  const Instance instance = balanced_partition_instance({rows, cols}, k);
  std::cout << "# gen kbp k " << k << "\n";
  std::cout << serialize_instance(instance);
  return kExitSolved;
}

struct GenReduceArgs {
  std::string file;
  bool guaranteed = false;
  long long t = 1;
  long long u1 = 1;
  long long u2 = 1;
};

// Draws the six encoding characters from a reserved pool, skipping anything
// the instance already uses.
FreshChars pick_fresh_chars(const Alphabet& alphabet) {
  const std::string pool =
      "abwxyzcdefghijklmnopqrstuvABWXYZCDEFGHIJKLMNOPQRSTUV0123456789";
  std::string picked;
  for (char c : pool) {
    if (!alphabet.contains(c)) picked.push_back(c);
    if (picked.size() == 6) break;
  }
  if (picked.size() < 6)
    fail(ErrorKind::kAlphabetCollision, "no six fresh characters available for the encoding");
  return FreshChars{picked[0], picked[1], picked[2], picked[3], picked[4], picked[5]};
}

int run_gen_reduce(const GenReduceArgs& args) {
  const ParsedInstance parsed = parse_instance(read_input(args.file));
  if (!parsed.placement)
    fail(ErrorKind::kInvalidArgument, "the placement encoding needs an instance with a placement");
  std::optional<ReductionConstants> constants;
  if (!args.guaranteed) constants = ReductionConstants{args.t, args.u1, args.u2};
  const ReducedInstance reduced =
      encode_placement_instance(parsed.instance, *parsed.placement, constants,
                                pick_fresh_chars(parsed.instance.alphabet));
  std::cout << "# gen pbmp2bmp t " << reduced.constants.t << " u1 " << reduced.constants.u1
            << " u2 " << reduced.constants.u2 << " guaranteed "
            << (reduced.guaranteed ? "yes" : "no") << "\n";
  std::cout << serialize_instance(reduced.instance);
  return kExitSolved;
}

// ---------------------------------------------------------------------------
// bench

int run_bench(const std::string& dir, double timeout_sec, bool as_json) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".bmpe")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  json results = json::array();
  if (!as_json)
    std::cout << "file\tsolver\tstatus\tbl\tnodes\tbranches\tms\n";
  for (const fs::path& file : files) {
    SolverOptions options = make_options();
    if (timeout_sec > 0) {
      options.limits.deadline = std::chrono::steady_clock::now() +
                                std::chrono::milliseconds(static_cast<long long>(timeout_sec * 1000));
    }
    std::string solver;
    std::string status = "solved";
    std::optional<long long> bl;
    SolveStats stats;
    const auto start = std::chrono::steady_clock::now();
    try {
      const ParsedInstance parsed = parse_instance(read_input(file.string()));
      std::optional<Solution> solution;
      if (parsed.placement && parsed.instance.budget) {
        solver = "pbmp-budget";
        solution = solve_pbmp_budget(parsed.instance, *parsed.placement, *parsed.instance.budget,
                                     options, &stats);
      } else if (parsed.placement) {
        solver = "pbmp";
        solution = solve_pbmp(parsed.instance, *parsed.placement, options, &stats);
      } else if (parsed.instance.budget) {
        solver = "bmp-case-split";
        solution = solve_bmp_budget(parsed.instance, *parsed.instance.budget, options, &stats);
      } else {
        solver = "bmp-template";
        solution = solve_bmp_template(parsed.instance, options, &stats);
      }
      if (solution) {
        bl = solution->border_length;
      } else {
        status = "no-instance";
      }
    } catch (const Error& e) {
      status = e.kind() == ErrorKind::kInstanceTooLarge ? "cap-exceeded" : "error";
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start).count();
    if (as_json) {
      json row{{"file", file.filename().string()},
               {"solver", solver},
               {"status", status},
               {"stats", stats_json(stats)},
               {"ms", ms}};
      if (bl) row["border_length"] = *bl;
      results.push_back(std::move(row));
    } else {
      std::cout << file.filename().string() << "\t" << solver << "\t" << status << "\t"
                << (bl ? std::to_string(*bl) : "-") << "\t" << stats.nodes << "\t"
                << stats.branches << "\t" << static_cast<long long>(ms) << "\n";
    }
  }
  if (as_json) std::cout << results.dump(2) << "\n";
  return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for exhaustive border minimization on synthesis arrays"};
  app.require_subcommand(1);

  bool as_json = false;
  int threads = 1;
  app.add_flag("--json", as_json, "emit JSON instead of plain text");
  app.add_option("--threads", threads, "worker threads (current solvers are single-threaded)")
      ->check(CLI::PositiveNumber);

  SolveArgs pbmp_args;
  CLI::App* pbmp = app.add_subcommand("solve-pbmp", "optimal embedding for a fixed placement");
  pbmp->add_option("file", pbmp_args.file, "instance file with a placement section, or -")
      ->required();
  pbmp->add_option("--budget", pbmp_args.budget, "admit only solutions with border length <= o");
  pbmp->add_flag("--dump-masks", pbmp_args.dump_masks, "dump the mask sequence as comments");

  SolveArgs bmp_args;
  CLI::App* bmp = app.add_subcommand("solve-bmp", "optimal placement and embedding");
  bmp->add_option("file", bmp_args.file, "instance file, or -")->required();
  bmp->add_option("--budget", bmp_args.budget, "admit only solutions with border length <= o");
  bmp->add_option("--algo", bmp_args.algo, "oracle|template|case-split (default: auto)")
      ->check(CLI::IsMember({"auto", "oracle", "template", "case-split"}));
  bmp->add_flag("--dump-masks", bmp_args.dump_masks, "dump the mask sequence as comments");

  std::string verify_instance, verify_solution;
  CLI::App* ver = app.add_subcommand("verify", "recompute and check a solution file");
  ver->add_option("instance", verify_instance, "instance file, or -")->required();
  ver->add_option("solution", verify_solution, "solution file")->required();

  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);

  GenRandomArgs rnd;
  CLI::App* gen_random = gen->add_subcommand("random", "random probe multiset");
  gen_random->add_option("rows", rnd.rows)->required();
  gen_random->add_option("cols", rnd.cols)->required();
  gen_random->add_option("--alphabet", rnd.alphabet);
  gen_random->add_option("--len-min", rnd.len_min);
  gen_random->add_option("--len-max", rnd.len_max);
  gen_random->add_option("--seed", rnd.seed);
  gen_random->add_option("--budget", rnd.budget);
  gen_random->add_flag("--with-placement", rnd.with_placement);

  GenAbGridArgs abg;
  CLI::App* gen_ab = gen->add_subcommand("ab-grid", "run-length grid with known optimum");
  gen_ab->add_option("rows", abg.rows)->required();
  gen_ab->add_option("cols", abg.cols)->required();
  gen_ab->add_option("t", abg.t)->required();
  gen_ab->add_option("--u", abg.u, "separator repeat constant");
  gen_ab->add_flag("--separator-grade", abg.contiguity_grade,
                   "use the smallest separator constant with the contiguity guarantee");

  int kbp_rows = 2, kbp_cols = 2, kbp_k = 2;
  CLI::App* gen_kbp = gen->add_subcommand("kbp", "balanced-partition instance");
  gen_kbp->add_option("rows", kbp_rows)->required();
  gen_kbp->add_option("cols", kbp_cols)->required();
  gen_kbp->add_option("--k", kbp_k)->required();

  GenReduceArgs red;
  CLI::App* gen_red = gen->add_subcommand("pbmp2bmp", "encode a fixed placement into the probes");
  gen_red->add_option("file", red.file, "instance file with a placement section, or -")
      ->required();
  gen_red->add_flag("--guaranteed", red.guaranteed,
                    "use constants large enough for the optimality guarantee");
  gen_red->add_option("--t", red.t);
  gen_red->add_option("--u1", red.u1);
  gen_red->add_option("--u2", red.u2);

  std::string bench_dir;
  double bench_timeout = 0;
  CLI::App* bench = app.add_subcommand("bench", "run the solvers over a directory of instances");
  bench->add_option("dir", bench_dir, "directory of .bmpe files")->required();
  bench->add_option("--timeout", bench_timeout, "per-instance wall-clock limit in seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(pbmp)) return run_solve_pbmp(pbmp_args, as_json);
    if (app.got_subcommand(bmp)) return run_solve_bmp(bmp_args, as_json);
    if (app.got_subcommand(ver)) return run_verify(verify_instance, verify_solution, as_json);
    if (app.got_subcommand(gen)) {
      if (gen->got_subcommand(gen_random)) return run_gen_random(rnd);
      if (gen->got_subcommand(gen_ab)) return run_gen_ab_grid(abg);
      if (gen->got_subcommand(gen_kbp)) return run_gen_kbp(kbp_rows, kbp_cols, kbp_k);
      if (gen->got_subcommand(gen_red)) return run_gen_reduce(red);
    }
    if (app.got_subcommand(bench)) return run_bench(bench_dir, bench_timeout, as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kInstanceTooLarge ? kExitCapExceeded : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
