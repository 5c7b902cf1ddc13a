#include "snni/assumptions.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace snni {

std::string_view to_string(Boundedness b) {
  switch (b) {
    case Boundedness::Bounded: return "bounded";
    case Boundedness::Unbounded: return "unbounded";
    case Boundedness::Unknown: return "unknown-bounded";
  }
  return "unknown-bounded";
}

std::string AssumptionReport::failure_reason(const PetriNet& net) const {
  if (bounded == Boundedness::Unbounded) {
    return "net is unbounded: firing " + format_sequence(net, witness_pump) + " from " + witness_from.to_string() +
           " (reached by " + format_sequence(net, witness_prefix) + ") yields strictly larger marking " +
           witness_to.to_string();
  }
  if (bounded == Boundedness::Unknown)
    return "boundedness unknown: exploration cap exhausted after " + std::to_string(explored_markings) + " markings";
  if (!implicit_acyclic) {
    std::string cycle;
    for (std::size_t i = 0; i < implicit_cycle.size(); ++i) cycle += (i ? " -> " : "") + implicit_cycle[i];
    return "implicit (high-level) subnet contains a circuit: " + cycle;
  }
  return {};
}

namespace {

struct ExploreNode {
  Marking marking;
  std::size_t parent;
  TransitionIndex via;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

}  // namespace

// Nodes 0..P-1 are places, P.. are high transitions.
std::vector<std::string> implicit_circuit(const LabeledPetriNet& lpn) {
  const auto& net = lpn.net();
  const auto& high = lpn.high_transitions();
  const std::size_t np = net.place_count();
  const std::size_t n = np + high.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t k = 0; k < high.size(); ++k) {
    for (PlaceIndex p = 0; p < np; ++p) {
      if (net.pre(p, high[k]) > 0) succ[p].push_back(np + k);
      if (net.post(p, high[k]) > 0) succ[np + k].push_back(p);
    }
  }
  auto name = [&](std::size_t v) { return v < np ? net.place_name(v) : net.transition_name(high[v - np]); };

  enum : char { White, Grey, Black };
  std::vector<char> colour(n, White);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != White) continue;
    // iterative DFS keeping (node, next child) frames
    std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
    colour[root] = Grey;
    stack.assign(1, root);
    while (!frames.empty()) {
      auto& [v, i] = frames.back();
      if (i < succ[v].size()) {
        std::size_t w = succ[v][i++];
        if (colour[w] == Grey) {
          auto it = std::find(stack.begin(), stack.end(), w);
          std::vector<std::string> cycle;
          for (; it != stack.end(); ++it) cycle.push_back(name(*it));
          cycle.push_back(name(w));
          return cycle;
        }
        if (colour[w] == White) {
          colour[w] = Grey;
          stack.push_back(w);
          frames.push_back({w, 0});
        }
      } else {
        colour[v] = Black;
        stack.pop_back();
        frames.pop_back();
      }
    }
  }
  return {};
}

AssumptionReport check_assumptions(const LabeledPetriNet& lpn, std::size_t cap) {
  if (cap == 0) throw InputError("exploration cap must be positive");
  AssumptionReport report;
  const auto& net = lpn.net();

  report.implicit_cycle = implicit_circuit(lpn);
  report.implicit_acyclic = report.implicit_cycle.empty();

  std::vector<ExploreNode> nodes;
  std::map<Marking, std::size_t> index;
  std::deque<std::size_t> queue;
  nodes.push_back({net.initial_marking(), kRoot, 0});
  index.emplace(net.initial_marking(), 0);
  queue.push_back(0);

  auto path_to = [&](std::size_t v) {
    TransitionSequence s;
    for (; nodes[v].parent != kRoot; v = nodes[v].parent) s.push_back(nodes[v].via);
    std::reverse(s.begin(), s.end());
    return s;
  };

  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (TransitionIndex t = 0; t < net.transition_count(); ++t) {
      if (!net.enabled(nodes[v].marking, t)) continue;
      Marking next = net.fire(nodes[v].marking, t);
      if (index.contains(next)) continue;
      // strict domination against every marking on the discovery path
      for (std::size_t a = v; a != kRoot; a = nodes[a].parent) {
        if (nodes[a].marking.strictly_below(next)) {
          report.bounded = Boundedness::Unbounded;
          report.explored_markings = nodes.size();
          report.witness_prefix = path_to(a);
          auto full = path_to(v);
          report.witness_pump.assign(full.begin() + static_cast<std::ptrdiff_t>(report.witness_prefix.size()),
                                     full.end());
          report.witness_pump.push_back(t);
          report.witness_from = nodes[a].marking;
          report.witness_to = next;
          return report;
        }
      }
      if (nodes.size() >= cap) {
        report.bounded = Boundedness::Unknown;
        report.explored_markings = nodes.size();
        return report;
      }
      index.emplace(next, nodes.size());
      nodes.push_back({std::move(next), v, t});
      queue.push_back(nodes.size() - 1);
    }
  }
  report.bounded = Boundedness::Bounded;
  report.explored_markings = nodes.size();
  return report;
}

CheckedNet CheckedNet::verify(LabeledPetriNet lpn, std::size_t cap) {
  auto report = check_assumptions(lpn, cap);
  if (!report.ok()) throw AssumptionError(report.failure_reason(lpn.net()));
  return CheckedNet(std::move(lpn), std::move(report));
}

}  // namespace snni
