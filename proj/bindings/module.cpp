#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "json.hpp"
#include "ringmatch/canon.hpp"
#include "ringmatch/constructions.hpp"
#include "ringmatch/family.hpp"
#include "ringmatch/io.hpp"
#include "ringmatch/matching.hpp"
#include "ringmatch/oracle.hpp"
#include "ringmatch/scheduler.hpp"

namespace py = pybind11;
using namespace ringmatch;

namespace {

EnumerationOptions make_options(std::optional<std::uint64_t> limit,
                                bool force) {
  EnumerationOptions opts;
  opts.limit = limit;
  opts.force = force;
  return opts;
}

ScheduleVariant parse_variant(const std::string& name) {
  if (name == "direct") return ScheduleVariant::direct;
  if (name == "reversed") return ScheduleVariant::reversed;
  throw std::invalid_argument("variant must be 'direct' or 'reversed'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Rainbow matchings of circularly colored complete graphs, canonical "
      "forms, recursive RPM families, exhaustive enumeration and round-robin "
      "schedules.";

  py::class_<Matching>(m, "Matching")
      .def(py::init<>())
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Matching::n)
      .def_property_readonly("edges", &Matching::edges)
      .def("__len__", &Matching::size)
      .def("covers", &Matching::covers, py::arg("v"))
      .def("uncovered", &Matching::uncovered)
      .def("to_json", [](const Matching& m) { return nlohmann::json(m).dump(); })
      .def_static("from_json", &matching_from_json_text, py::arg("text"))
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const Matching& m) {
             return py::hash(py::make_tuple(m.n(), py::tuple(py::cast(m.edges()))));
           })
      .def("__repr__",
           [](const Matching& m) { return "Matching(" + to_string(m) + ")"; });

  m.def("color_index", &color_index, py::arg("n"), py::arg("edge"));
  m.def("rotate", &rotate, py::arg("m"), py::arg("alpha"));
  m.def("reverse", &reverse, py::arg("m"));
  m.def("is_rpm", &is_rpm, py::arg("m"));
  m.def("is_cuttable", &is_cuttable, py::arg("m"));

  m.def("normalize", &normalize, py::arg("m"));
  m.def("is_normalized", &is_normalized, py::arg("m"));
  m.def("same_class", &same_class, py::arg("a"), py::arg("b"));

  m.def("kirkman", &kirkman, py::arg("n"));
  m.def("cuttable_kirkman_rotations", &cuttable_kirkman_rotations,
        py::arg("n"));
  m.def("t_matching", &t_matching, py::arg("n"));
  m.def("ars", &ars, py::arg("n"));

  m.def("f_op", &f_op, py::arg("m"));
  m.def("g_op", &g_op, py::arg("m"));
  m.def("xi3_embed", &xi3_embed, py::arg("n"), py::arg("m"));

  py::class_<RpmFamily>(m, "RpmFamily")
      .def_readonly("n", &RpmFamily::n)
      .def_readonly("members", &RpmFamily::members)
      .def("__len__", &RpmFamily::count)
      .def("to_json",
           [](const RpmFamily& f) { return nlohmann::json(f).dump(); })
      .def("__repr__", [](const RpmFamily& f) {
        return "RpmFamily(n=" + std::to_string(f.n) + ", count=" +
               std::to_string(f.count()) + ")";
      });
  m.def("family", &family, py::arg("n"));

  py::class_<Schedule>(m, "Schedule")
      .def_readonly("teams", &Schedule::teams)
      .def_readonly("rounds", &Schedule::rounds)
      .def("to_json",
           [](const Schedule& s) { return nlohmann::json(s).dump(); })
      .def("to_csv", &schedule_to_csv)
      .def("__repr__", [](const Schedule& s) {
        return "Schedule(teams=" + std::to_string(s.teams) + ", rounds=" +
               std::to_string(s.rounds.size()) + ")";
      });
  m.def("unmatched_vertex", &unmatched_vertex, py::arg("m"));
  m.def(
      "schedule_from_rpm",
      [](const Matching& m, const std::string& variant) {
        return schedule_from_rpm(m, parse_variant(variant));
      },
      py::arg("m"), py::arg("variant") = "direct");
  m.def("validate_schedule", [](const Schedule& s) {
    std::vector<std::string> out;
    for (const ScheduleViolation& v : validate_schedule(s)) {
      out.push_back(v.describe());
    }
    return out;
  });

  py::class_<EnumerationReport>(m, "EnumerationReport")
      .def_readonly("n", &EnumerationReport::n)
      .def_readonly("rpm_count", &EnumerationReport::rpm_count)
      .def_readonly("class_count", &EnumerationReport::class_count)
      .def_readonly("representatives", &EnumerationReport::representatives)
      .def("to_json",
           [](const EnumerationReport& r) { return nlohmann::json(r).dump(); })
      .def("__repr__", [](const EnumerationReport& r) {
        return "EnumerationReport(n=" + std::to_string(r.n) + ", rpm_count=" +
               std::to_string(r.rpm_count) + ", class_count=" +
               std::to_string(r.class_count) + ")";
      });
  m.def(
      "enumerate_rpms",
      [](int n, std::optional<std::uint64_t> limit, bool force) {
        return enumerate_rpms(n, make_options(limit, force));
      },
      py::arg("n"), py::arg("limit") = py::none(), py::arg("force") = false);
  m.def(
      "census",
      [](int n, std::optional<std::uint64_t> limit, bool force) {
        return census(n, make_options(limit, force));
      },
      py::arg("n"), py::arg("limit") = py::none(), py::arg("force") = false);
  m.def(
      "verify_property9",
      [](int n, bool force) {
        return verify_property9(n, make_options(std::nullopt, force));
      },
      py::arg("n"), py::arg("force") = false);
  m.def("orbit_size", &orbit_size, py::arg("m"));
}
