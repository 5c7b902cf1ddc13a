#include "snni/verifier.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace snni {

SvResult build_sv(const CheckedNet& checked, const UbrgResult& ubrg, std::size_t node_cap) {
  const auto& lpn = checked.lpn();
  const auto& net = lpn.net();
  SvResult out;

  auto add_node = [&](std::optional<StateId> parent, StateId ubrg_node, Marking low) {
    if (out.nodes.size() >= node_cap)
      throw CapacityError("verifier exceeds " + std::to_string(node_cap) + " nodes");
    StateId id = out.tree.add_state();
    out.nodes.push_back({id, parent, ubrg_node, std::move(low)});
    return id;
  };

  // (marking of x1; x2) occurs at a strict ancestor of v
  auto pair_repeats = [&](StateId v) {
    const auto& m = ubrg.nodes[out.nodes[v].ubrg_node].marking;
    const auto& low = out.nodes[v].low_marking;
    for (auto a = out.nodes[v].parent; a; a = out.nodes[*a].parent) {
      const auto& anc = out.nodes[*a];
      if (anc.low_marking == low && ubrg.nodes[anc.ubrg_node].marking == m) return true;
    }
    return false;
  };

  out.tree.add_initial(add_node(std::nullopt, 0, net.initial_marking()));
  std::deque<StateId> queue{0};
  while (!queue.empty()) {
    StateId v = queue.front();
    queue.pop_front();
    const auto& x1 = ubrg.nodes[out.nodes[v].ubrg_node];
    if (x1.tag && x1.tag->kind == LeafTag::Kind::Beta) {
      if (pair_repeats(v)) {
        out.m_dup_prime.push_back(v);
        continue;
      }
    } else if (x1.duplicated && pair_repeats(v)) {
      out.plain_duplicates.push_back(v);
    }
    const Marking x2 = out.nodes[v].low_marking;
    for (auto i : ubrg.tree.out_arcs(x1.id)) {
      const auto& arc = ubrg.tree.arc(i);
      const auto& wanted = lpn.label(arc.event.transition);
      for (auto e2 : lpn.low_transitions()) {
        if (lpn.label(e2) != wanted || !net.enabled(x2, e2)) continue;
        StateId child = add_node(v, arc.to, net.fire(x2, e2));
        out.tree.add_arc(v, {arc.event.transition, e2}, child);
        queue.push_back(child);
      }
    }
  }

  std::set<LeafTag> alpha, beta;
  std::set<StateId> dup(out.m_dup_prime.begin(), out.m_dup_prime.end());
  for (const auto& node : out.nodes) {
    if (!out.is_leaf(node.id)) continue;
    const auto& tag = ubrg.nodes[node.ubrg_node].tag;
    if (!tag) continue;
    if (tag->kind == LeafTag::Kind::Alpha)
      alpha.insert(*tag);
    else if (dup.contains(node.id))
      beta.insert(*tag);
  }
  out.psi_alpha.assign(alpha.begin(), alpha.end());
  out.psi_beta.assign(beta.begin(), beta.end());
  return out;
}

Verdict compare_tags(const LabeledPetriNet& lpn, const UbrgResult& ubrg, const SvResult& sv) {
  Verdict v;
  auto missing = [](const std::vector<LeafTag>& all, const std::vector<LeafTag>& matched) {
    std::vector<LeafTag> out;
    for (const auto& t : all)
      if (std::find(matched.begin(), matched.end(), t) == matched.end()) out.push_back(t);
    return out;
  };
  v.missing_alpha = missing(ubrg.phi_alpha, sv.psi_alpha);
  v.missing_beta = missing(ubrg.phi_beta, sv.psi_beta);
  v.snni = v.missing_alpha.empty() && v.missing_beta.empty();
  for (const auto* tags : {&v.missing_alpha, &v.missing_beta}) {
    for (const auto& tag : *tags) {
      auto leaf = ubrg.leaf_with(tag);
      v.witness_words.emplace_back(tag, label_word(lpn, phi(ubrg.path_to(*leaf))));
    }
  }
  return v;
}

SnniAnalysis analyze_snni(const CheckedNet& checked, std::size_t node_cap) {
  SnniAnalysis a;
  a.brg = build_brg(checked);
  a.ubrg = build_ubrg(checked, a.brg, node_cap);
  a.sv = build_sv(checked, a.ubrg, node_cap);
  a.verdict = compare_tags(checked.lpn(), a.ubrg, a.sv);
  return a;
}

Verdict decide_snni(const CheckedNet& checked, std::size_t node_cap) {
  return analyze_snni(checked, node_cap).verdict;
}

}  // namespace snni
