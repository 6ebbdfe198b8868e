#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>

#include "wildnum/bfile.hpp"
#include "wildnum/errors.hpp"
#include "wildnum/search.hpp"
#include "wildnum/sequence.hpp"
#include "wildnum/trajectory.hpp"

namespace py = pybind11;

// Natural <-> Python int, through the decimal representation.
namespace pybind11::detail {

template <>
struct type_caster<wildnum::Natural> {
  PYBIND11_TYPE_CASTER(wildnum::Natural, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    object zero = reinterpret_steal<object>(PyLong_FromLong(0));
    int sign = PyObject_RichCompareBool(src.ptr(), zero.ptr(), Py_LT);
    if (sign < 0) throw error_already_set();
    if (sign == 1) throw value_error("negative value is not a Natural");
    value = wildnum::Natural::parse(static_cast<std::string>(str(src)));
    return true;
  }

  static handle cast(const wildnum::Natural& n, return_value_policy, handle) {
    std::string digits = n.to_string();
    return PyLong_FromString(digits.c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

wildnum::Limits make_limits(std::size_t max_steps, std::size_t max_bits) {
  wildnum::Limits limits{max_steps, max_bits};
  limits.validate();
  return limits;
}

wildnum::ReferenceTable reference_from(const py::object& ref) {
  if (py::isinstance<py::str>(ref)) {
    auto name = ref.cast<std::string>();
    if (auto table = wildnum::builtin_reference(name)) return *table;
    throw wildnum::UsageError("unknown reference \"" + name + "\"");
  }
  return wildnum::ReferenceTable{"custom", 0, ref.cast<std::vector<wildnum::Natural>>()};
}

std::string status_of(const wildnum::SequenceRecord& r) {
  return r.exhausted ? std::string(wildnum::to_string(*r.exhausted)) : "Reached";
}

}  // namespace

PYBIND11_MODULE(_wildnum, m) {
  using namespace wildnum;
  m.doc() = "Exact iterated digit-sum and Collatz maps, OEIS b-files and rule search";

  static py::exception<StepError> step_error(m, "StepError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const StepError& e) {
      step_error(e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const UsageError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Rational>(m, "Rational")
      .def(py::init(&Rational::make), py::arg("p"), py::arg("q") = Natural(1U))
      .def_static("parse", &Rational::parse)
      .def_property_readonly("num", &Rational::num)
      .def_property_readonly("den", &Rational::den)
      .def("is_integer", &Rational::is_integer)
      .def("__str__", &Rational::to_display_string)
      .def("__repr__", [](const Rational& r) { return "Rational(" + r.to_string() + ")"; })
      .def(py::self == py::self)
      .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.to_string())); });

  m.def("digit_sum", &digit_sum, py::arg("n"));
  m.def("make_rational", &make_rational, py::arg("p"), py::arg("q"));
  m.def("van_lamoen_step", &van_lamoen_step, py::arg("r"));
  m.def("collatz_step", &collatz_step, py::arg("n"));
  m.def(
      "family_step",
      [](int alpha, int beta, int gamma, const Rational& r) {
        return family_step({alpha, beta, gamma}, r);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("r"));

  py::class_<TrajectoryResult>(m, "Trajectory")
      .def_property_readonly("reached", &TrajectoryResult::reached)
      .def_property_readonly("steps", &TrajectoryResult::steps)
      .def_property_readonly("value",
                             [](const TrajectoryResult& t) -> py::object {
                               if (!t.reached()) return py::none();
                               return py::cast(t.as_reached().value);
                             })
      .def_property_readonly("reason",
                             [](const TrajectoryResult& t) -> py::object {
                               if (t.reached()) return py::none();
                               return py::str(std::string(to_string(t.as_exhausted().reason)));
                             })
      .def_readonly("trace", &TrajectoryResult::trace)
      .def_property_readonly("peak", [](const TrajectoryResult& t) {
        return trajectory_stats(t).peak;
      })
      .def("format", &format_trace, py::arg("separator") = " -> ");

  m.def(
      "trajectory",
      [](const std::string& rule, const Natural& n, std::size_t max_steps, std::size_t max_bits,
         bool cycle_check) {
        RunOptions options;
        options.detect_cycles = cycle_check;
        return run(RuleSpec::parse(rule), n, make_limits(max_steps, max_bits), options);
      },
      py::arg("rule"), py::arg("n"), py::arg("max_steps") = 10000, py::arg("max_bits") = 65536,
      py::arg("cycle_check") = false);

  py::class_<SequenceRecord>(m, "SequenceRecord")
      .def_readonly("index", &SequenceRecord::index)
      .def_readonly("value", &SequenceRecord::value)
      .def_readonly("steps", &SequenceRecord::steps)
      .def_property_readonly("status", &status_of)
      .def("__repr__", [](const SequenceRecord& r) {
        return "SequenceRecord(" + std::to_string(r.index) + ", " + r.value.to_string() + ", " +
               status_of(r) + ")";
      });

  m.def(
      "generate",
      [](const std::string& rule, std::uint64_t first, std::uint64_t last, std::size_t max_steps,
         std::size_t max_bits, std::size_t workers) {
        RuleSpec spec = RuleSpec::parse(rule);
        Limits limits = make_limits(max_steps, max_bits);
        GenerateOptions options;
        options.workers = workers;
        py::gil_scoped_release release;
        return generate(spec, first, last, limits, options);
      },
      py::arg("rule"), py::arg("first"), py::arg("last"), py::arg("max_steps") = 10000,
      py::arg("max_bits") = 65536, py::arg("workers") = 1);

  m.def("paper48", [] { return paper48().values; });
  m.def("fictional_wild", [] { return fictional_wild().values; });

  m.def(
      "verify",
      [](const std::string& rule, const py::object& reference, std::size_t max_steps,
         std::size_t max_bits) {
        ReferenceTable table = reference_from(reference);
        if (table.values.empty()) throw UsageError("empty reference");
        auto records = generate(RuleSpec::parse(rule), table.offset, table.last_index(),
                                make_limits(max_steps, max_bits));
        VerificationReport report = wildnum::verify(records, table);
        py::list mismatches;
        for (const auto& mm : report.mismatches) {
          mismatches.append(py::make_tuple(mm.index, mm.expected, mm.got));
        }
        return mismatches;
      },
      py::arg("rule"), py::arg("reference") = "paper48", py::arg("max_steps") = 10000,
      py::arg("max_bits") = 65536,
      "List of (index, expected, got) mismatches; empty when the rule reproduces the table.");

  m.def("write_bfile", [](const std::vector<SequenceRecord>& records) {
    return write_bfile(records);
  });
  m.def(
      "read_bfile",
      [](const std::string& text) {
        BFile b = read_bfile(text);
        std::vector<std::pair<std::int64_t, Natural>> entries;
        for (auto& e : b.entries) entries.emplace_back(e.index, e.value);
        return py::make_tuple(entries, b.comments);
      },
      "Returns (entries, comments) where entries is a list of (index, value).");

  m.def(
      "search",
      [](const std::vector<Natural>& target, std::uint64_t offset, std::pair<int, int> alpha,
         std::pair<int, int> beta, std::pair<int, int> gamma, std::size_t max_steps,
         std::size_t workers) {
        SearchBox box;
        box.alpha = {alpha.first, alpha.second};
        box.beta = {beta.first, beta.second};
        box.gamma = {gamma.first, gamma.second};
        box.limits = make_limits(max_steps, search_default_limits().max_bits);
        box.target = ReferenceTable{"custom", offset, target};
        MatchReport report;
        {
          py::gil_scoped_release release;
          report = search(box, SearchOptions{workers, {}});
        }
        py::list out;
        for (const auto& s : report.ranking) {
          out.append(py::make_tuple(py::make_tuple(s.params.alpha, s.params.beta, s.params.gamma),
                                    s.matched_prefix_length, s.exact()));
        }
        return out;
      },
      py::arg("target"), py::arg("offset") = 0, py::arg("alpha") = std::pair{-3, 3},
      py::arg("beta") = std::pair{-3, 3}, py::arg("gamma") = std::pair{-3, 3},
      py::arg("max_steps") = 1000, py::arg("workers") = 1,
      "Ranked list of ((alpha, beta, gamma), matched_prefix_length, exact).");

#ifdef WILDNUM_VERSION
  m.attr("__version__") = WILDNUM_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
