#include "snni/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace snni {

ReachGraph reachability_graph(const PetriNet& net, std::size_t cap) {
  ReachGraph g;
  std::map<Marking, StateId> index;
  std::vector<std::optional<StateId>> parent;
  std::deque<StateId> queue;

  auto add = [&](Marking m, std::optional<StateId> from) {
    if (g.states.size() >= cap)
      throw CapacityError("reachability graph exceeds " + std::to_string(cap) + " markings");
    StateId s = g.nfa.add_state();
    index.emplace(m, s);
    g.states.push_back(std::move(m));
    parent.push_back(from);
    queue.push_back(s);
    return s;
  };

  g.nfa.add_initial(add(net.initial_marking(), std::nullopt));
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (TransitionIndex t = 0; t < net.transition_count(); ++t) {
      if (!net.enabled(g.states[s], t)) continue;
      Marking next = net.fire(g.states[s], t);
      if (auto it = index.find(next); it != index.end()) {
        g.nfa.add_arc(s, t, it->second);
        continue;
      }
      for (std::optional<StateId> a = s; a; a = parent[*a])
        if (g.states[*a].strictly_below(next))
          throw AssumptionError("net is unbounded: " + next.to_string() + " strictly dominates reachable marking " +
                                g.states[*a].to_string());
      g.nfa.add_arc(s, t, add(std::move(next), s));
    }
  }
  return g;
}

LabelNfa relabel(const ReachGraph& graph, const LabeledPetriNet& lpn) {
  LabelNfa out;
  for (std::size_t i = 0; i < graph.nfa.state_count(); ++i) out.add_state();
  for (auto s : graph.nfa.initial()) out.add_initial(s);
  for (const auto& arc : graph.nfa.arcs()) {
    Label label;
    if (lpn.is_low(arc.event)) label = lpn.label(arc.event);
    out.add_arc(arc.from, label, arc.to);
  }
  return out;
}

LabelNfa projected_label_language(const LabeledPetriNet& lpn, std::size_t cap) {
  return relabel(reachability_graph(lpn.net(), cap), lpn);
}

LabelNfa low_label_language(const LabeledPetriNet& lpn, std::size_t cap) {
  auto low = lpn.low_subnet();
  return relabel(reachability_graph(low.net(), cap), low);
}

namespace {

using StateSet = std::vector<StateId>;  // sorted

StateSet closure(const LabelNfa& nfa, StateSet seeds) {
  std::set<StateId> seen(seeds.begin(), seeds.end());
  std::vector<StateId> stack(seeds.begin(), seeds.end());
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (auto i : nfa.out_arcs(s)) {
      const auto& arc = nfa.arc(i);
      if (!arc.event && seen.insert(arc.to).second) stack.push_back(arc.to);
    }
  }
  return {seen.begin(), seen.end()};
}

std::map<std::string, StateSet> moves(const LabelNfa& nfa, const StateSet& from) {
  std::map<std::string, std::set<StateId>> raw;
  for (auto s : from)
    for (auto i : nfa.out_arcs(s))
      if (const auto& arc = nfa.arc(i); arc.event) raw[*arc.event].insert(arc.to);
  std::map<std::string, StateSet> out;
  for (auto& [label, targets] : raw) out[label] = closure(nfa, {targets.begin(), targets.end()});
  return out;
}

}  // namespace

LanguageCheckResult language_equal(const LabelNfa& a, const LabelNfa& b) {
  using Pair = std::pair<StateSet, StateSet>;
  struct Visit {
    std::optional<std::size_t> parent;
    std::string label;
  };
  std::map<Pair, std::size_t> index;
  std::vector<Pair> pairs;
  std::vector<Visit> visits;
  std::deque<std::size_t> queue;

  auto word_to = [&](std::size_t v) {
    LabelWord w;
    for (; visits[v].parent; v = *visits[v].parent) w.push_back(visits[v].label);
    std::reverse(w.begin(), w.end());
    return w;
  };

  Pair start{closure(a, a.initial()), closure(b, b.initial())};
  if (start.first.empty() != start.second.empty())
    return {false, LabelWord{}, !start.first.empty()};
  index.emplace(start, 0);
  pairs.push_back(start);
  visits.push_back({std::nullopt, {}});
  queue.push_back(0);

  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    auto ma = moves(a, pairs[v].first);
    auto mb = moves(b, pairs[v].second);
    std::set<std::string> labels;
    for (const auto& [l, _] : ma) labels.insert(l);
    for (const auto& [l, _] : mb) labels.insert(l);
    for (const auto& l : labels) {
      auto ia = ma.find(l);
      auto ib = mb.find(l);
      if (ia == ma.end() || ib == mb.end()) {
        auto w = word_to(v);
        w.push_back(l);
        return {false, std::move(w), ia != ma.end()};
      }
      Pair next{ia->second, ib->second};
      if (index.contains(next)) continue;
      index.emplace(next, pairs.size());
      pairs.push_back(std::move(next));
      visits.push_back({v, l});
      queue.push_back(pairs.size() - 1);
    }
  }
  return {true, std::nullopt, false};
}

bool accepts(const LabelNfa& nfa, const LabelWord& word) {
  StateSet current = closure(nfa, nfa.initial());
  if (current.empty()) return false;
  for (const auto& symbol : word) {
    auto m = moves(nfa, current);
    auto it = m.find(symbol);
    if (it == m.end()) return false;
    current = it->second;
  }
  return true;
}

OracleVerdict snni_oracle(const LabeledPetriNet& lpn, std::size_t cap) {
  auto full_graph = reachability_graph(lpn.net(), cap);
  auto low = lpn.low_subnet();
  auto low_graph = reachability_graph(low.net(), cap);
  auto result = language_equal(relabel(full_graph, lpn), relabel(low_graph, low));
  if (!result.equal && !result.accepted_by_first)
    throw Error("low-subnet word " + format_word(*result.counterexample) +
                " is missing from the projected language of the full net");
  OracleVerdict v;
  v.snni = result.equal;
  v.counterexample = result.counterexample;
  v.reachable_markings = full_graph.states.size();
  v.low_reachable_markings = low_graph.states.size();
  return v;
}

JustificationSet justifications(const LabeledPetriNet& lpn, const LabelWord& word, std::size_t cap) {
  const auto& net = lpn.net();
  const auto& high = lpn.high_transitions();
  JustificationSet out;
  out.word = word;

  std::map<TransitionSequence, std::set<ParikhVector>> raw;
  TransitionSequence explicit_part;
  auto y = ParikhVector::zeros(high.size());

  auto dfs = [&](auto&& self, const Marking& m, std::size_t length) -> void {
    if (explicit_part.size() == word.size()) {
      raw[explicit_part].insert(y);
      return;
    }
    for (TransitionIndex t = 0; t < net.transition_count(); ++t) {
      if (!net.enabled(m, t)) continue;
      if (lpn.is_low(t) && lpn.label(t) != word[explicit_part.size()]) continue;
      if (length == cap) {
        out.complete = false;
        return;
      }
      Marking next = net.fire(m, t);
      if (lpn.is_low(t)) {
        explicit_part.push_back(t);
        self(self, next, length + 1);
        explicit_part.pop_back();
      } else {
        auto saved = y;
        y.increment(*lpn.high_position(t));
        self(self, next, length + 1);
        y = std::move(saved);
      }
    }
  };
  dfs(dfs, net.initial_marking(), 0);

  std::set<Marking> markings;
  for (const auto& [s_e, vectors] : raw) {
    for (const auto& v : vectors) {
      bool dominated = std::any_of(vectors.begin(), vectors.end(), [&](const ParikhVector& o) {
        return o.strictly_below(v);
      });
      if (dominated) continue;
      out.pairs.emplace_back(s_e, v);
      Marking m = net.apply_counts(net.initial_marking(), high, v);
      m = net.apply_counts(m, lpn.low_transitions(), parikh(s_e, lpn.low_transitions()));
      markings.insert(std::move(m));
    }
  }
  out.basis_markings.assign(markings.begin(), markings.end());
  return out;
}

std::vector<TransitionSequence> explicit_projections(const LabeledPetriNet& lpn, std::size_t max_len) {
  const auto& net = lpn.net();
  auto implicit_closure = [&](std::set<Marking> seeds) {
    std::vector<Marking> stack(seeds.begin(), seeds.end());
    while (!stack.empty()) {
      Marking m = std::move(stack.back());
      stack.pop_back();
      for (auto h : lpn.high_transitions()) {
        if (!net.enabled(m, h)) continue;
        Marking next = net.fire(m, h);
        if (seeds.insert(next).second) stack.push_back(std::move(next));
      }
    }
    return seeds;
  };

  std::vector<TransitionSequence> out;
  TransitionSequence current;
  auto walk = [&](auto&& self, const std::set<Marking>& markings) -> void {
    out.push_back(current);
    if (current.size() == max_len) return;
    for (auto t : lpn.low_transitions()) {
      std::set<Marking> fired;
      for (const auto& m : markings)
        if (net.enabled(m, t)) fired.insert(net.fire(m, t));
      if (fired.empty()) continue;
      current.push_back(t);
      self(self, implicit_closure(std::move(fired)));
      current.pop_back();
    }
  };
  walk(walk, implicit_closure({net.initial_marking()}));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace snni
