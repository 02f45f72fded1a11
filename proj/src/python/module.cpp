// Python bindings: thin wrappers over the library's main operations.
// Reports cross the boundary as plain dicts/lists mirroring the JSON schema.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cayley/report_json.hpp"
#include "cayley/unlabeled.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

py::object json_to_py(const ojson& j) {
  switch (j.type()) {
    case ojson::value_t::null: return py::none();
    case ojson::value_t::boolean: return py::bool_(j.get<bool>());
    case ojson::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case ojson::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case ojson::value_t::number_float: return py::float_(j.get<double>());
    case ojson::value_t::string: return py::str(j.get<std::string>());
    case ojson::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case ojson::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

py::object big_to_py(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

GroupContext make_context(const std::string& group, bool full = true) {
  ContextOptions opts;
  opts.subgroup_data = full;
  opts.automorphism_data = full;
  return GroupContext(parse_group(group), opts);
}

}  // namespace

PYBIND11_MODULE(_cayleycensus, m) {
  m.doc() = "Cayley (di)graphs on finite abelian groups: automorphism census";

  py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<CheckFailure>(m, "CheckFailureError", PyExc_AssertionError);

  py::class_<AbelianGroup>(m, "Group")
      .def(py::init([](const std::vector<unsigned>& factors) { return AbelianGroup(factors); }),
           py::arg("factors"))
      .def_property_readonly("order", &AbelianGroup::order)
      .def_property_readonly("factors", &AbelianGroup::factors)
      .def_property_readonly("exponent", &AbelianGroup::exponent)
      .def_property_readonly("involution_count", &AbelianGroup::involution_count)
      .def("add", &AbelianGroup::add)
      .def("neg", &AbelianGroup::neg)
      .def("element_order", &AbelianGroup::element_order)
      .def("spec", &AbelianGroup::spec_string)
      .def("subgroup_count",
           [](const AbelianGroup& g) { return g.subgroups().size(); })
      .def("automorphism_count",
           [](const AbelianGroup& g) { return g.automorphism_group().size(); })
      .def("__repr__",
           [](const AbelianGroup& g) { return "Group(" + g.spec_string() + ")"; });

  m.def("make_group", [](const std::string& spec) { return parse_group(spec); },
        py::arg("spec"), "Parse a comma-separated factor list, e.g. '2,4'.");

  m.def(
      "classify",
      [](const std::string& group, const std::string& set, const std::string& mode) {
        GroupContext ctx = make_context(group);
        Bitset s = parse_connection_set(ctx.group, set);
        return json_to_py(classification_json(ctx, s, parse_mode(mode), classify(ctx, s, parse_mode(mode))));
      },
      py::arg("group"), py::arg("set"), py::arg("mode") = "digraph");

  m.def(
      "aut_order",
      [](const std::string& group, const std::string& set) {
        GroupContext ctx = make_context(group, false);
        return big_to_py(aut_order(ctx, parse_connection_set(ctx.group, set)));
      },
      py::arg("group"), py::arg("set"));

  m.def(
      "canonical_form",
      [](const std::string& group, const std::string& set) {
        AbelianGroup g = parse_group(group);
        Bitset s = parse_connection_set(g, set);
        return hex_encode(canonical_form(colored_from_cayley(build_cayley(g, s))));
      },
      py::arg("group"), py::arg("set"));

  m.def(
      "census",
      [](const std::string& group, const std::string& mode, unsigned jobs, unsigned limit,
         bool force) {
        GroupContext ctx = make_context(group);
        CensusOptions opts;
        opts.jobs = jobs;
        opts.limit = limit;
        opts.force = force;
        return json_to_py(census_json(exact_census(ctx, parse_mode(mode), opts)));
      },
      py::arg("group"), py::arg("mode") = "digraph", py::arg("jobs") = 0, py::arg("limit") = 0,
      py::arg("force") = false);

  m.def(
      "sample",
      [](const std::string& group, const std::string& mode, std::uint64_t trials,
         std::uint64_t seed, unsigned jobs) {
        GroupContext ctx = make_context(group, false);
        return json_to_py(sample_json(sample_census(ctx, parse_mode(mode), trials, seed, jobs)));
      },
      py::arg("group"), py::arg("mode") = "digraph", py::arg("trials") = 1000,
      py::arg("seed") = kDefaultSeed, py::arg("jobs") = 0);

  m.def(
      "bounds",
      [](unsigned n, unsigned m_) { return json_to_py(bounds_json(n, m_)); }, py::arg("n"),
      py::arg("m"));

  m.def(
      "unlabeled",
      [](const std::string& group, const std::string& mode, unsigned jobs) {
        GroupContext ctx = make_context(group);
        CensusOptions opts;
        opts.jobs = jobs;
        return json_to_py(unlabeled_json(unlabeled_census(ctx, parse_mode(mode), opts)));
      },
      py::arg("group"), py::arg("mode") = "digraph", py::arg("jobs") = 0);

  m.def(
      "count_inverse_closed",
      [](const std::string& group) { return big_to_py(count_inverse_closed(parse_group(group))); },
      py::arg("group"));

  m.attr("DEFAULT_SEED") = py::int_(kDefaultSeed);
  m.attr("__version__") = "0.1.0";
}
