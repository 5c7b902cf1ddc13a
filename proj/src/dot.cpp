#include "snni/dot.hpp"

#include <set>
#include <sstream>

namespace snni {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string header(const std::string& name) { return "digraph " + name + " {\n"; }
const char* const kFooter = "}\n";

}  // namespace

std::string export_dot(const LabeledPetriNet& lpn, const Brg& brg) {
  std::ostringstream out;
  out << header("brg");
  for (std::size_t s = 0; s < brg.states.size(); ++s)
    out << "  n" << s << " [shape=ellipse, label=" << quote("m" + std::to_string(s) + "\n" + brg.states[s].to_string())
        << "];\n";
  for (const auto& arc : brg.nfa.arcs())
    out << "  n" << arc.from << " -> n" << arc.to << " [label=" << quote(format_event(lpn.net(), arc.event)) << "];\n";
  out << kFooter;
  return out.str();
}

std::string export_dot(const LabeledPetriNet& lpn, const UbrgResult& ubrg) {
  std::ostringstream out;
  out << header("ubrg");
  for (const auto& node : ubrg.nodes) {
    std::string label = node.marking.to_string();
    if (node.tag) label += "\n" + node.tag->to_string();
    out << "  u" << node.id << " [shape=ellipse, label=" << quote(label);
    if (node.duplicated) out << ", style=dashed";
    if (node.tag) out << ", penwidth=2";
    out << "];\n";
  }
  for (const auto& arc : ubrg.tree.arcs())
    out << "  u" << arc.from << " -> u" << arc.to << " [label=" << quote(format_event(lpn.net(), arc.event)) << "];\n";
  out << kFooter;
  return out.str();
}

std::string export_dot(const LabeledPetriNet& lpn, const UbrgResult& ubrg, const SvResult& sv) {
  const auto& net = lpn.net();
  std::set<StateId> dup(sv.m_dup_prime.begin(), sv.m_dup_prime.end());
  std::ostringstream out;
  out << header("sv");
  for (const auto& node : sv.nodes) {
    const auto& u = ubrg.nodes[node.ubrg_node];
    std::string left = u.marking.to_string();
    if (u.tag) left += "," + u.tag->to_string();
    out << "  v" << node.id << " [shape=box, label=" << quote("(" + left + " ; " + node.low_marking.to_string() + ")");
    if (dup.contains(node.id)) out << ", peripheries=2";
    if (u.duplicated) out << ", style=dashed";
    out << "];\n";
  }
  for (const auto& arc : sv.tree.arcs())
    out << "  v" << arc.from << " -> v" << arc.to << " [label="
        << quote("(" + net.transition_name(arc.event.ubrg_transition) + "," +
                 net.transition_name(arc.event.low_transition) + ")")
        << "];\n";
  out << kFooter;
  return out.str();
}

std::string export_dot(const LabeledPetriNet& lpn, const ReachGraph& graph) {
  std::ostringstream out;
  out << header("reach");
  for (std::size_t s = 0; s < graph.states.size(); ++s)
    out << "  r" << s << " [shape=ellipse, label=" << quote(graph.states[s].to_string()) << "];\n";
  for (const auto& arc : graph.nfa.arcs()) {
    const auto& name = lpn.net().transition_name(arc.event);
    out << "  r" << arc.from << " -> r" << arc.to << " [label=" << quote(name + "/" + lpn.label(arc.event)) << "];\n";
  }
  out << kFooter;
  return out.str();
}

}  // namespace snni
