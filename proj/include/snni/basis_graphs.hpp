#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "snni/assumptions.hpp"
#include "snni/nfa.hpp"
#include "snni/petri.hpp"

namespace snni {

/// Upper bound on the number of tree nodes built by the unfolding and the
/// verifier before giving up with CapacityError.
inline constexpr std::size_t kDefaultNodeCap = 2'000'000;

/// Event (t, y) of the basis reachability graph: explicit transition t
/// fired after implicit transitions with minimal e-vector y.
struct BrgEvent {
  TransitionIndex transition = 0;
  ParikhVector evector;

  auto operator<=>(const BrgEvent&) const = default;
};

/// "(l_1,[1 0])"
std::string format_event(const PetriNet& net, const BrgEvent& e);

/// Basis reachability graph. State 0 is m0; states are distinct basis
/// markings.
struct Brg {
  std::vector<Marking> states;
  Nfa<BrgEvent> nfa;

  std::optional<StateId> find(const Marking& m) const;
};

/// Least fixpoint from m0: for each basis marking m, explicit t and
/// y in Y_min(m,t), an arc to m + [N]_I y + [N](.,t).
Brg build_brg(const CheckedNet& net);

/// phi(σ): the explicit transitions of σ in order.
TransitionSequence phi(std::span<const BrgEvent> sigma);

/// phi'(σ): sum of the e-vectors of σ; `dimension` = |T_I| fixes the size
/// for the empty sequence.
ParikhVector phi_prime(std::span<const BrgEvent> sigma, std::size_t dimension);

/// Leaf tag of the unfolded graph. Alpha leaves are dead ends, beta leaves
/// repeat an ancestor's marking; both only on paths that used implicit
/// transitions.
struct LeafTag {
  enum class Kind { Alpha, Beta };
  Kind kind = Kind::Alpha;
  int index = 0;

  auto operator<=>(const LeafTag&) const = default;
  /// "alpha_1" / "beta_2"
  std::string to_string() const;
};

struct UbrgNode {
  StateId id = 0;
  std::optional<StateId> parent;
  Marking marking;
  std::optional<LeafTag> tag;
  /// Marking equals that of a strict ancestor (membership in M_dup).
  bool duplicated = false;
};

/// Tree unfolding of the BRG (nodes are never fused) with its tag sets.
struct UbrgResult {
  std::vector<UbrgNode> nodes;  // nodes[0] is the root (m0)
  Nfa<BrgEvent> tree;
  std::vector<LeafTag> phi_alpha;
  std::vector<LeafTag> phi_beta;
  std::vector<Marking> m_dup;  // sorted, distinct

  bool is_leaf(StateId v) const { return tree.out_arcs(v).empty(); }
  /// Events on the path from the root to v.
  std::vector<BrgEvent> path_to(StateId v) const;
  std::optional<StateId> leaf_with(const LeafTag& tag) const;
};

/// Unfolds the BRG breadth first in (transition order, e-vector order);
/// a node repeating an ancestor's marking is left unexpanded. Tags are
/// numbered in leaf order.
UbrgResult build_ubrg(const CheckedNet& net, const Brg& brg, std::size_t node_cap = kDefaultNodeCap);
UbrgResult build_ubrg(const CheckedNet& net, std::size_t node_cap = kDefaultNodeCap);

/// Every φ(σ) for BRG paths σ from m0 with |σ| <= max_len.
std::vector<TransitionSequence> brg_sequences(const Brg& brg, std::size_t max_len);

}  // namespace snni
