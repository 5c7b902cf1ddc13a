#include "snni/explanations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace snni {

namespace {

void require_explicit(const LabeledPetriNet& lpn, TransitionIndex t) {
  if (t >= lpn.net().transition_count()) throw InputError("unknown transition index " + std::to_string(t));
  if (!lpn.is_low(t))
    throw InputError("transition '" + lpn.net().transition_name(t) + "' is implicit; explanations need an explicit one");
}

}  // namespace

std::vector<Explanation> explanations_bounded(const LabeledPetriNet& lpn, const Marking& m, TransitionIndex t,
                                              std::size_t len_cap) {
  require_explicit(lpn, t);
  const auto& net = lpn.net();
  if (m.size() != net.place_count()) throw InputError("marking size does not match the net");
  if (auto circuit = implicit_circuit(lpn); !circuit.empty())
    throw AssumptionError("implicit (high-level) subnet contains a circuit through '" + circuit.front() + "'");
  const auto& high = lpn.high_transitions();
  std::vector<Explanation> out;
  TransitionSequence seq;

  auto dfs = [&](auto&& self, const Marking& cur) -> void {
    if (net.enabled(cur, t)) out.push_back({seq, parikh(seq, high)});
    if (seq.size() == len_cap) return;
    for (auto h : high) {
      if (!net.enabled(cur, h)) continue;
      seq.push_back(h);
      self(self, net.fire(cur, h));
      seq.pop_back();
    }
  };
  dfs(dfs, m);
  return out;
}

std::size_t default_explanation_cap(const CheckedNet& net) {
  const auto& pn = net.net();
  std::int64_t max_tokens = 0;
  std::set<Marking> seen{pn.initial_marking()};
  std::deque<Marking> queue{pn.initial_marking()};
  while (!queue.empty()) {
    Marking m = std::move(queue.front());
    queue.pop_front();
    std::int64_t total = 0;
    for (auto v : m.values()) total += v;
    max_tokens = std::max(max_tokens, total);
    for (TransitionIndex t = 0; t < pn.transition_count(); ++t) {
      if (!pn.enabled(m, t)) continue;
      Marking next = pn.fire(m, t);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return net.lpn().high_transitions().size() * static_cast<std::size_t>(1 + max_tokens);
}

std::vector<ParikhVector> minimality_filter(std::vector<ParikhVector> cands) {
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<ParikhVector> out;
  for (const auto& c : cands) {
    bool dominated = std::any_of(cands.begin(), cands.end(), [&](const ParikhVector& o) { return o.strictly_below(c); });
    if (!dominated) out.push_back(c);
  }
  return out;
}

MinimalExplanationSet minimal_e_vectors(const CheckedNet& checked, const Marking& m, TransitionIndex t) {
  const auto& lpn = checked.lpn();
  const auto& net = lpn.net();
  require_explicit(lpn, t);
  if (m.size() != net.place_count()) throw InputError("marking size does not match the net");

  const auto& high = lpn.high_transitions();
  struct State {
    Marking marking;
    ParikhVector y;
    TransitionSequence seq;
  };

  std::vector<Explanation> found;
  std::map<Marking, std::vector<ParikhVector>> seen;
  std::vector<State> frontier{{m, ParikhVector::zeros(high.size()), {}}};
  seen[m].push_back(frontier.front().y);

  auto dominated_by_found = [&](const ParikhVector& y) {
    return std::any_of(found.begin(), found.end(), [&](const Explanation& e) { return e.evector.leq(y); });
  };

  while (!frontier.empty()) {
    std::vector<State> next_level;
    for (auto& s : frontier) {
      if (dominated_by_found(s.y)) continue;
      if (net.enabled(s.marking, t)) {
        found.push_back({std::move(s.seq), std::move(s.y)});
        continue;
      }
      for (std::size_t k = 0; k < high.size(); ++k) {
        if (!net.enabled(s.marking, high[k])) continue;
        Marking nm = net.fire(s.marking, high[k]);
        ParikhVector ny = s.y;
        ny.increment(k);
        auto& prior = seen[nm];
        // a vector <= ny that already reached nm makes every extension of ny non-minimal
        if (std::any_of(prior.begin(), prior.end(), [&](const ParikhVector& p) { return p.leq(ny); })) continue;
        prior.push_back(ny);
        TransitionSequence nseq = s.seq;
        nseq.push_back(high[k]);
        next_level.push_back({std::move(nm), std::move(ny), std::move(nseq)});
      }
    }
    frontier = std::move(next_level);
  }

  std::vector<ParikhVector> vectors;
  for (const auto& e : found) vectors.push_back(e.evector);
  vectors = minimality_filter(std::move(vectors));

  MinimalExplanationSet result;
  result.marking = m;
  result.transition = t;
  for (const auto& y : vectors) {
    auto it = std::find_if(found.begin(), found.end(), [&](const Explanation& e) { return e.evector == y; });
    result.evectors.push_back(y);
    result.witnesses.push_back(*it);
  }
  return result;
}

}  // namespace snni
