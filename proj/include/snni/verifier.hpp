#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "snni/assumptions.hpp"
#include "snni/basis_graphs.hpp"
#include "snni/nfa.hpp"
#include "snni/petri.hpp"

namespace snni {

/// Node (x1; x2) of the verifier tree: an unfolded-graph node paired with a
/// marking of the low-level subnet.
struct SvNode {
  StateId id = 0;
  std::optional<StateId> parent;
  StateId ubrg_node = 0;
  Marking low_marking;
};

/// Arc payload: the explicit transition of the unfolded-graph arc and the
/// low-subnet transition it was synchronized with (same label).
struct SvEvent {
  TransitionIndex ubrg_transition = 0;
  TransitionIndex low_transition = 0;

  auto operator<=>(const SvEvent&) const = default;
};

struct SvResult {
  std::vector<SvNode> nodes;  // nodes[0] is (root; m0)
  Nfa<SvEvent> tree;
  std::vector<LeafTag> psi_alpha;
  std::vector<LeafTag> psi_beta;
  /// Beta-leaf nodes whose (marking; low marking) pair already occurs on
  /// their root path.
  std::vector<StateId> m_dup_prime;
  /// Nodes over untagged duplicated leaves whose pair repeats on the root
  /// path. Diagnostic only; never used for the verdict.
  std::vector<StateId> plain_duplicates;

  bool is_leaf(StateId v) const { return tree.out_arcs(v).empty(); }
};

/// Label-synchronized tree product of the unfolded graph with the
/// reachability of the low-level subnet, explored on the fly.
SvResult build_sv(const CheckedNet& net, const UbrgResult& ubrg, std::size_t node_cap = kDefaultNodeCap);

struct Verdict {
  bool snni = false;
  std::vector<LeafTag> missing_alpha;
  std::vector<LeafTag> missing_beta;
  /// For every missing tag, the label word of its unfolded-graph root path.
  std::vector<std::pair<LeafTag, LabelWord>> witness_words;
};

/// Tag-set comparison: SNNI iff every alpha tag and every beta tag of the
/// unfolding is matched by the verifier.
Verdict compare_tags(const LabeledPetriNet& lpn, const UbrgResult& ubrg, const SvResult& sv);

/// Every intermediate object of one verifier run.
struct SnniAnalysis {
  Brg brg;
  UbrgResult ubrg;
  SvResult sv;
  Verdict verdict;
};

SnniAnalysis analyze_snni(const CheckedNet& net, std::size_t node_cap = kDefaultNodeCap);
Verdict decide_snni(const CheckedNet& net, std::size_t node_cap = kDefaultNodeCap);

}  // namespace snni
