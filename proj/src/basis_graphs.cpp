#include "snni/basis_graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "snni/explanations.hpp"

namespace snni {

std::string format_event(const PetriNet& net, const BrgEvent& e) {
  return "(" + net.transition_name(e.transition) + "," + e.evector.to_string() + ")";
}

std::optional<StateId> Brg::find(const Marking& m) const {
  auto it = std::find(states.begin(), states.end(), m);
  if (it == states.end()) return std::nullopt;
  return static_cast<StateId>(it - states.begin());
}

namespace {

struct Successor {
  BrgEvent event;
  Marking target;
};

// Arcs leaving basis marking m, in transition order then e-vector order.
std::vector<Successor> basis_successors(const CheckedNet& checked, const Marking& m) {
  const auto& lpn = checked.lpn();
  const auto& net = lpn.net();
  std::vector<Successor> out;
  for (auto t : lpn.low_transitions()) {
    auto ymin = minimal_e_vectors(checked, m, t);
    for (const auto& y : ymin.evectors) {
      Marking after_implicit = net.apply_counts(m, lpn.high_transitions(), y);
      out.push_back({{t, y}, net.fire(after_implicit, t)});
    }
  }
  return out;
}

}  // namespace

Brg build_brg(const CheckedNet& checked) {
  Brg brg;
  std::map<Marking, StateId> index;
  std::deque<StateId> queue;
  auto state_for = [&](const Marking& m) {
    auto [it, inserted] = index.try_emplace(m, 0);
    if (inserted) {
      it->second = brg.nfa.add_state();
      brg.states.push_back(m);
      queue.push_back(it->second);
    }
    return it->second;
  };
  brg.nfa.add_initial(state_for(checked.net().initial_marking()));
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    Marking m = brg.states[s];
    for (auto& succ : basis_successors(checked, m)) {
      StateId target = state_for(succ.target);
      brg.nfa.add_arc(s, std::move(succ.event), target);
    }
  }
  return brg;
}

TransitionSequence phi(std::span<const BrgEvent> sigma) {
  TransitionSequence out;
  out.reserve(sigma.size());
  for (const auto& e : sigma) out.push_back(e.transition);
  return out;
}

ParikhVector phi_prime(std::span<const BrgEvent> sigma, std::size_t dimension) {
  auto sum = ParikhVector::zeros(dimension);
  for (const auto& e : sigma) sum += e.evector;
  return sum;
}

std::string LeafTag::to_string() const {
  return (kind == Kind::Alpha ? "alpha_" : "beta_") + std::to_string(index);
}

std::vector<BrgEvent> UbrgResult::path_to(StateId v) const {
  std::vector<BrgEvent> path;
  while (nodes.at(v).parent) {
    StateId p = *nodes[v].parent;
    for (auto i : tree.out_arcs(p)) {
      if (tree.arc(i).to == v) {
        path.push_back(tree.arc(i).event);
        break;
      }
    }
    v = p;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<StateId> UbrgResult::leaf_with(const LeafTag& tag) const {
  for (const auto& n : nodes)
    if (n.tag == tag) return n.id;
  return std::nullopt;
}

UbrgResult build_ubrg(const CheckedNet& /*checked*/, const Brg& brg, std::size_t node_cap) {
  UbrgResult out;
  // whether some arc on the root path carries a non-zero e-vector
  std::vector<bool> used_implicit;
  std::vector<StateId> brg_state;

  auto add_node = [&](std::optional<StateId> parent, StateId bstate, bool implicit) {
    if (out.nodes.size() >= node_cap)
      throw CapacityError("unfolded graph exceeds " + std::to_string(node_cap) + " nodes");
    StateId id = out.tree.add_state();
    out.nodes.push_back({id, parent, brg.states[bstate], std::nullopt, false});
    used_implicit.push_back(implicit);
    brg_state.push_back(bstate);
    return id;
  };

  out.tree.add_initial(add_node(std::nullopt, 0, false));
  std::set<Marking> dup;
  std::deque<StateId> queue{0};
  while (!queue.empty()) {
    StateId v = queue.front();
    queue.pop_front();
    const Marking& m = out.nodes[v].marking;
    bool repeated = false;
    for (auto a = out.nodes[v].parent; a; a = out.nodes[*a].parent) {
      if (out.nodes[*a].marking == m) {
        repeated = true;
        break;
      }
    }
    if (repeated) {
      out.nodes[v].duplicated = true;
      dup.insert(m);
      continue;
    }
    for (auto i : brg.nfa.out_arcs(brg_state[v])) {
      const auto& arc = brg.nfa.arc(i);
      StateId child = add_node(v, arc.to, used_implicit[v] || !arc.event.evector.is_zero());
      out.tree.add_arc(v, arc.event, child);
      queue.push_back(child);
    }
  }

  int alpha = 0, beta = 0;
  for (auto& node : out.nodes) {
    if (!out.is_leaf(node.id) || !used_implicit[node.id]) continue;
    if (!node.duplicated) {
      node.tag = LeafTag{LeafTag::Kind::Alpha, ++alpha};
      out.phi_alpha.push_back(*node.tag);
    } else {
      node.tag = LeafTag{LeafTag::Kind::Beta, ++beta};
      out.phi_beta.push_back(*node.tag);
    }
  }
  out.m_dup.assign(dup.begin(), dup.end());
  return out;
}

UbrgResult build_ubrg(const CheckedNet& checked, std::size_t node_cap) {
  return build_ubrg(checked, build_brg(checked), node_cap);
}

std::vector<TransitionSequence> brg_sequences(const Brg& brg, std::size_t max_len) {
  std::set<TransitionSequence> seen;
  TransitionSequence current;
  auto walk = [&](auto&& self, StateId s) -> void {
    seen.insert(current);
    if (current.size() == max_len) return;
    for (auto i : brg.nfa.out_arcs(s)) {
      current.push_back(brg.nfa.arc(i).event.transition);
      self(self, brg.nfa.arc(i).to);
      current.pop_back();
    }
  };
  for (auto s : brg.nfa.initial()) walk(walk, s);
  return {seen.begin(), seen.end()};
}

}  // namespace snni
