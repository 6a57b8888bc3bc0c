#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bordermin/core.hpp"
#include "bordermin/enumeration.hpp"
#include "bordermin/ilp.hpp"
#include "bordermin/io.hpp"
#include "bordermin/reductions.hpp"
#include "bordermin/solvers.hpp"

namespace py = pybind11;
using namespace bordermin;

namespace {

BorderMethod method_from_string(const std::string& name) {
  if (name == "hamming") return BorderMethod::kHamming;
  if (name == "masks") return BorderMethod::kMasks;
  if (name == "fast") return BorderMethod::kFast;
  throw py::value_error("method must be one of hamming|masks|fast");
}

std::vector<std::vector<int>> placement_grid(const Placement& placement) {
  std::vector<std::vector<int>> grid(placement.rows(), std::vector<int>(placement.cols()));
  for (int r = 0; r < placement.rows(); ++r)
    for (int c = 0; c < placement.cols(); ++c) grid[r][c] = placement.slot_at(r, c);
  return grid;
}

}  // namespace

PYBIND11_MODULE(_bordermin, m) {
  m.doc() = "Exact solvers for exhaustive border minimization on synthesis arrays";

  py::register_exception<Error>(m, "BorderminError");

  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<std::string_view>(), py::arg("symbols"))
      .def_property_readonly("symbols", &Alphabet::symbols)
      .def("__len__", &Alphabet::size)
      .def("__contains__", &Alphabet::contains)
      .def("rank", &Alphabet::rank)
      .def("__repr__",
           [](const Alphabet& a) { return "Alphabet(\"" + a.symbols() + "\")"; });

  py::class_<Instance>(m, "Instance")
      .def(py::init<Alphabet, int, int, std::vector<std::string>, std::optional<long long>>(),
           py::arg("alphabet"), py::arg("rows"), py::arg("cols"), py::arg("probes"),
           py::arg("budget") = std::nullopt)
      .def_readonly("alphabet", &Instance::alphabet)
      .def_readonly("rows", &Instance::rows)
      .def_readonly("cols", &Instance::cols)
      .def_readonly("probes", &Instance::probes)
      .def_readonly("budget", &Instance::budget)
      .def("transposed", &Instance::transposed);

  py::class_<Placement>(m, "Placement")
      .def(py::init<int, int, std::vector<int>>(), py::arg("rows"), py::arg("cols"),
           py::arg("slots"))
      .def_static("identity", &Placement::identity, py::arg("rows"), py::arg("cols"))
      .def_property_readonly("rows", &Placement::rows)
      .def_property_readonly("cols", &Placement::cols)
      .def_property_readonly("grid", &placement_grid)
      .def("slot_at", &Placement::slot_at)
      .def("flipped_horizontal", &Placement::flipped_horizontal)
      .def("flipped_vertical", &Placement::flipped_vertical)
      .def("transposed", &Placement::transposed)
      .def("__eq__", [](const Placement& a, const Placement& b) { return a == b; });

  py::class_<Mask>(m, "Mask")
      .def_readonly("deposit_char", &Mask::deposit_char)
      .def_readonly("rows", &Mask::rows)
      .def_readonly("cols", &Mask::cols)
      .def_readonly("cells", &Mask::cells)
      .def("border_length", &Mask::border_length);

  py::class_<Solution>(m, "Solution")
      .def_readonly("placement", &Solution::placement)
      .def_readonly("deposition", &Solution::deposition)
      .def_readonly("border_length", &Solution::border_length);

  py::class_<SolveStats>(m, "SolveStats")
      .def_readonly("nodes", &SolveStats::nodes)
      .def_readonly("branches", &SolveStats::branches)
      .def_readonly("candidates", &SolveStats::candidates);

  m.def("embed", &embed, py::arg("probe"), py::arg("deposition"));
  m.def("border_pair", &border_pair, py::arg("e1"), py::arg("e2"));
  m.def("derive_masks", &derive_masks, py::arg("instance"), py::arg("placement"),
        py::arg("deposition"));
  m.def(
      "compute_bl",
      [](const Instance& instance, const Placement& placement, std::string_view deposition,
         const std::string& method) {
        return compute_bl(instance, placement, deposition, method_from_string(method));
      },
      py::arg("instance"), py::arg("placement"), py::arg("deposition"),
      py::arg("method") = "fast");
  m.def("strip_redundant", &strip_redundant, py::arg("instance"), py::arg("deposition"));
  m.def("is_good", &is_good, py::arg("instance"), py::arg("deposition"));

  m.def(
      "enumerate_good_depositions",
      [](const Instance& instance, std::size_t max_len, std::uint64_t node_budget) {
        return enumerate_good_depositions(instance, max_len, SearchLimits{node_budget, {}});
      },
      py::arg("instance"), py::arg("max_len"), py::arg("node_budget") = 10'000'000ULL);
  m.def("enumerate_primal_sequences", &enumerate_primal_sequences, py::arg("alphabet"),
        py::arg("max_len"));
  m.def("expand_primal", &expand_primal, py::arg("instance"), py::arg("primal"));
  m.def("primal_of", &primal_of, py::arg("instance"), py::arg("deposition"));

  m.def(
      "solve_pbmp",
      [](const Instance& instance, const Placement& placement) {
        return solve_pbmp(instance, placement);
      },
      py::arg("instance"), py::arg("placement"));
  m.def(
      "solve_pbmp_budget",
      [](const Instance& instance, const Placement& placement, long long budget) {
        return solve_pbmp_budget(instance, placement, budget);
      },
      py::arg("instance"), py::arg("placement"), py::arg("budget"));
  m.def(
      "solve_bmp_oracle",
      [](const Instance& instance) { return solve_bmp_oracle(instance); }, py::arg("instance"));
  m.def(
      "solve_bmp_template",
      [](const Instance& instance) { return solve_bmp_template(instance); }, py::arg("instance"));
  m.def(
      "solve_bmp_budget",
      [](const Instance& instance, long long budget) { return solve_bmp_budget(instance, budget); },
      py::arg("instance"), py::arg("budget"));
  m.def("make_consecutive", &make_consecutive, py::arg("instance"), py::arg("placement"),
        py::arg("deposition"));
  m.def("enveloping_probe", &enveloping_probe, py::arg("instance"), py::arg("budget"));

  m.def("build_separator",
        [](char x_char, char y_char, long long u, int rows, int cols) {
          return build_separator({x_char, y_char, u, rows, cols});
        },
        py::arg("x_char"), py::arg("y_char"), py::arg("u"), py::arg("rows"), py::arg("cols"));
  m.def("separator_min_u", &separator_min_u, py::arg("max_prefix"), py::arg("max_suffix"));

  py::class_<AbGrid>(m, "AbGrid")
      .def_readonly("instance", &AbGrid::instance)
      .def_readonly("canonical_placement", &AbGrid::canonical_placement)
      .def_readonly("canonical_deposition", &AbGrid::canonical_deposition);
  m.def("make_ab_grid", &make_ab_grid, py::arg("rows"), py::arg("cols"), py::arg("t"),
        py::arg("separator"), py::arg("a") = 'a', py::arg("b") = 'b');

  m.def(
      "balanced_partition_instance",
      [](int rows, int cols, int k) { return balanced_partition_instance({rows, cols}, k); },
      py::arg("rows"), py::arg("cols"), py::arg("k"));

  py::class_<PartitionResult>(m, "PartitionResult")
      .def_readonly("classes", &PartitionResult::classes)
      .def_readonly("cut_size", &PartitionResult::cut_size);
  m.def("extract_partition", &extract_partition, py::arg("instance"), py::arg("solution"),
        py::arg("k"));

  py::class_<ReductionConstants>(m, "ReductionConstants")
      .def_readonly("t", &ReductionConstants::t)
      .def_readonly("u1", &ReductionConstants::u1)
      .def_readonly("u2", &ReductionConstants::u2);
  py::class_<ReducedInstance>(m, "ReducedInstance")
      .def_readonly("instance", &ReducedInstance::instance)
      .def_readonly("constants", &ReducedInstance::constants)
      .def_readonly("guaranteed", &ReducedInstance::guaranteed);
  m.def("faithful_reduction_constants", &faithful_reduction_constants, py::arg("instance"));
  m.def(
      "encode_placement_instance",
      [](const Instance& instance, const Placement& placement,
         std::optional<std::tuple<long long, long long, long long>> constants) {
        std::optional<ReductionConstants> k;
        if (constants)
          k = ReductionConstants{std::get<0>(*constants), std::get<1>(*constants),
                                 std::get<2>(*constants)};
        return encode_placement_instance(instance, placement, k);
      },
      py::arg("instance"), py::arg("placement"), py::arg("constants") = std::nullopt);

  py::class_<ParsedInstance>(m, "ParsedInstance")
      .def_readonly("instance", &ParsedInstance::instance)
      .def_readonly("placement", &ParsedInstance::placement);
  m.def("parse_instance", &parse_instance, py::arg("text"));
  m.def(
      "serialize_instance",
      [](const Instance& instance, std::optional<Placement> placement) {
        return serialize_instance(instance, placement ? &*placement : nullptr);
      },
      py::arg("instance"), py::arg("placement") = std::nullopt);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("pass_", &VerifyReport::pass)
      .def_readonly("supersequence", &VerifyReport::supersequence)
      .def_readonly("good", &VerifyReport::good)
      .def_readonly("claimed", &VerifyReport::claimed)
      .def_readonly("recomputed_hamming", &VerifyReport::recomputed_hamming)
      .def_readonly("recomputed_masks", &VerifyReport::recomputed_masks)
      .def_readonly("warnings", &VerifyReport::warnings)
      .def_readonly("failures", &VerifyReport::failures);
  m.def("verify", &verify, py::arg("instance"), py::arg("placement"), py::arg("deposition"),
        py::arg("claimed_bl"));
}
