#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "snni/assumptions.hpp"
#include "snni/basis_graphs.hpp"
#include "snni/dot.hpp"
#include "snni/explanations.hpp"
#include "snni/net_io.hpp"
#include "snni/oracle.hpp"
#include "snni/random_net.hpp"
#include "snni/report.hpp"
#include "snni/verifier.hpp"

namespace py = pybind11;
using namespace snni;

namespace {

std::vector<std::string> names(const LabeledPetriNet& lpn, const std::vector<TransitionIndex>& ts) {
  std::vector<std::string> out;
  for (auto t : ts) out.push_back(lpn.net().transition_name(t));
  return out;
}

std::string dot(const LabeledPetriNet& lpn, const std::string& which, std::size_t cap, std::size_t node_cap) {
  if (which == "reach") return export_dot(lpn, reachability_graph(lpn.net(), cap));
  auto checked = CheckedNet::verify(lpn, cap);
  auto brg = build_brg(checked);
  if (which == "brg") return export_dot(lpn, brg);
  auto ubrg = build_ubrg(checked, brg, node_cap);
  if (which == "ubrg") return export_dot(lpn, ubrg);
  if (which == "sv") return export_dot(lpn, ubrg, build_sv(checked, ubrg, node_cap));
  throw InputError("unknown graph '" + which + "' (expected reach, brg, ubrg or sv)");
}

}  // namespace

PYBIND11_MODULE(_snni, m) {
  m.doc() = "SNNI analysis of bounded labeled Petri nets";

  // later registrations are tried first, so subclasses follow the base
  auto& error = py::register_exception<Error>(m, "SnniError");
  py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<AssumptionError>(m, "AssumptionError", error.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", error.ptr());

  py::class_<LabeledPetriNet>(m, "Net")
      .def_property_readonly("places", [](const LabeledPetriNet& n) { return n.net().places(); })
      .def_property_readonly("transitions", [](const LabeledPetriNet& n) { return n.net().transitions(); })
      .def_property_readonly("labels", &LabeledPetriNet::labels)
      .def_property_readonly("initial_marking",
                             [](const LabeledPetriNet& n) { return n.net().initial_marking().values(); })
      .def_property_readonly("low_transitions", [](const LabeledPetriNet& n) { return names(n, n.low_transitions()); })
      .def_property_readonly("high_transitions",
                             [](const LabeledPetriNet& n) { return names(n, n.high_transitions()); })
      .def("to_json", &serialize_net)
      .def("__repr__", [](const LabeledPetriNet& n) {
        return "<Net " + std::to_string(n.net().place_count()) + " places, " +
               std::to_string(n.net().transition_count()) + " transitions>";
      });

  m.def("parse_net", [](const std::string& doc) { return parse_net(doc); }, py::arg("document"));
  m.def("load_net", [](const std::string& path) { return load_net(path); }, py::arg("path"));
  m.def("random_net", [](std::uint64_t seed) { return random_net(seed).lpn; }, py::arg("seed"));

  m.def(
      "_assumptions",
      [](const LabeledPetriNet& lpn, std::size_t cap) {
        auto r = check_assumptions(lpn, cap);
        py::dict d;
        d["bounded"] = std::string(to_string(r.bounded));
        d["explored_markings"] = r.explored_markings;
        d["implicit_acyclic"] = r.implicit_acyclic;
        d["ok"] = r.ok();
        d["problem"] = r.failure_reason(lpn.net());
        return d;
      },
      py::arg("net"), py::arg("cap") = kDefaultMarkingCap);

  m.def(
      "_analyze_json",
      [](const LabeledPetriNet& lpn, std::size_t cap, std::size_t node_cap) {
        return to_json(run_analysis(lpn, cap, node_cap)).dump();
      },
      py::arg("net"), py::arg("cap") = kDefaultMarkingCap, py::arg("node_cap") = kDefaultNodeCap);

  m.def(
      "decide_snni",
      [](const LabeledPetriNet& lpn, std::size_t cap, std::size_t node_cap) {
        return decide_snni(CheckedNet::verify(lpn, cap), node_cap).snni;
      },
      py::arg("net"), py::arg("cap") = kDefaultMarkingCap, py::arg("node_cap") = kDefaultNodeCap);

  m.def(
      "snni_oracle",
      [](const LabeledPetriNet& lpn, std::size_t cap) {
        auto v = snni_oracle(lpn, cap);
        return py::make_tuple(v.snni, v.counterexample);
      },
      py::arg("net"), py::arg("cap") = kDefaultMarkingCap,
      "(snni, shortest leaking word or None) from direct language comparison");

  m.def(
      "minimal_e_vectors",
      [](const LabeledPetriNet& lpn, const std::string& transition, std::optional<std::vector<std::int64_t>> marking) {
        auto checked = CheckedNet::verify(lpn);
        auto mk = marking ? Marking(*marking) : lpn.net().initial_marking();
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& y : minimal_e_vectors(checked, mk, lpn.net().transition_index(transition)).evectors)
          out.push_back(y.values());
        return out;
      },
      py::arg("net"), py::arg("transition"), py::arg("marking") = py::none());

  m.def(
      "brg_markings",
      [](const LabeledPetriNet& lpn) {
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& s : build_brg(CheckedNet::verify(lpn)).states) out.push_back(s.values());
        return out;
      },
      py::arg("net"));

  m.def("export_dot", &dot, py::arg("net"), py::arg("graph"), py::arg("cap") = kDefaultMarkingCap,
        py::arg("node_cap") = kDefaultNodeCap);
}
