#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snni/errors.hpp"

namespace snni {

using StateId = std::size_t;

/// Output symbol of an event; nullopt is the empty string ε.
using Label = std::optional<std::string>;

template <class Event>
struct NfaArc {
  StateId from;
  Event event;
  StateId to;
};

/// Nondeterministic finite automaton G = (Θ, E, Δ, X0) with states
/// numbered 0..state_count()-1. Events are opaque payloads; a labeling is
/// supplied separately where needed.
template <class Event>
class Nfa {
public:
  StateId add_state() {
    out_.emplace_back();
    return out_.size() - 1;
  }

  void add_initial(StateId s) {
    check(s);
    initial_.push_back(s);
  }

  void add_arc(StateId from, Event event, StateId to) {
    check(from);
    check(to);
    out_[from].push_back(arcs_.size());
    arcs_.push_back({from, std::move(event), to});
  }

  std::size_t state_count() const noexcept { return out_.size(); }
  const std::vector<StateId>& initial() const noexcept { return initial_; }
  const std::vector<NfaArc<Event>>& arcs() const noexcept { return arcs_; }
  const NfaArc<Event>& arc(std::size_t i) const { return arcs_.at(i); }
  /// Indices into arcs() of the arcs leaving s, in insertion order.
  std::span<const std::size_t> out_arcs(StateId s) const { return out_.at(s); }

private:
  void check(StateId s) const {
    if (s >= out_.size()) throw InputError("NFA state " + std::to_string(s) + " is not declared");
  }

  std::vector<std::vector<std::size_t>> out_;
  std::vector<NfaArc<Event>> arcs_;
  std::vector<StateId> initial_;
};

/// Automaton whose events are their own labels.
using LabelNfa = Nfa<Label>;

template <class E1, class E2>
struct Composition {
  using Event = std::pair<std::optional<E1>, std::optional<E2>>;
  Nfa<Event> nfa;
  /// pairs[s] = (state of g1, state of g2) for product state s.
  std::vector<std::pair<StateId, StateId>> pairs;
};

/// G1 || G2: both sides move together on events sharing a (non-empty)
/// label; an ε-labeled event moves its own side alone. Only pairs reachable
/// from the product of the initial states are built, breadth first.
template <class E1, class E2>
Composition<E1, E2> parallel_composition(const Nfa<E1>& g1, const std::function<Label(const E1&)>& label1,
                                         const Nfa<E2>& g2, const std::function<Label(const E2&)>& label2) {
  Composition<E1, E2> out;
  std::map<std::pair<StateId, StateId>, StateId> index;
  std::deque<StateId> queue;
  auto state_for = [&](std::pair<StateId, StateId> key) {
    auto [it, inserted] = index.try_emplace(key, 0);
    if (inserted) {
      it->second = out.nfa.add_state();
      out.pairs.push_back(key);
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (auto a : g1.initial())
    for (auto b : g2.initial()) out.nfa.add_initial(state_for({a, b}));

  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    auto [x1, x2] = out.pairs[s];
    for (auto i : g1.out_arcs(x1)) {
      const auto& a1 = g1.arc(i);
      Label l1 = label1(a1.event);
      if (!l1) {
        out.nfa.add_arc(s, {a1.event, std::nullopt}, state_for({a1.to, x2}));
        continue;
      }
      for (auto j : g2.out_arcs(x2)) {
        const auto& a2 = g2.arc(j);
        if (label2(a2.event) == l1) out.nfa.add_arc(s, {a1.event, a2.event}, state_for({a1.to, a2.to}));
      }
    }
    for (auto j : g2.out_arcs(x2)) {
      const auto& a2 = g2.arc(j);
      if (!label2(a2.event)) out.nfa.add_arc(s, {std::nullopt, a2.event}, state_for({x1, a2.to}));
    }
  }
  return out;
}

}  // namespace snni
