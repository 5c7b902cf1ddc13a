#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "snni/assumptions.hpp"
#include "snni/nfa.hpp"
#include "snni/petri.hpp"

namespace snni {

/// Reachability graph R(N, m0): states are reachable markings (state 0 is
/// m0), events are transition indices of the explored net.
struct ReachGraph {
  std::vector<Marking> states;
  Nfa<TransitionIndex> nfa;
};

/// Complete reachability graph. Throws AssumptionError on a
/// strict-domination witness and CapacityError when cap runs out.
ReachGraph reachability_graph(const PetriNet& net, std::size_t cap = kDefaultMarkingCap);

/// Reachability graph of the whole net with low transitions emitting their
/// label and high transitions emitting ε: recognizes l(P_L(L(N, m0))).
LabelNfa projected_label_language(const LabeledPetriNet& lpn, std::size_t cap = kDefaultMarkingCap);

/// Reachability graph of the low-level subnet with its labels:
/// recognizes l_L(L(N_L, m0)).
LabelNfa low_label_language(const LabeledPetriNet& lpn, std::size_t cap = kDefaultMarkingCap);

/// Replace every event by its label.
LabelNfa relabel(const ReachGraph& graph, const LabeledPetriNet& lpn);

struct LanguageCheckResult {
  bool equal = true;
  /// Shortest word accepted by exactly one automaton.
  std::optional<LabelWord> counterexample;
  /// Which side accepts the counterexample (true: first argument).
  bool accepted_by_first = false;
};

/// Equality of the prefix-closed languages of two automata whose states are
/// all accepting. ε-closure plus breadth-first search over pairs of subsets.
LanguageCheckResult language_equal(const LabelNfa& a, const LabelNfa& b);

/// Membership of a word (all states accepting).
bool accepts(const LabelNfa& nfa, const LabelWord& word);

struct OracleVerdict {
  bool snni = false;
  /// Shortest low-level observation of the net the low subnet cannot
  /// produce, when not SNNI.
  std::optional<LabelWord> counterexample;
  std::size_t reachable_markings = 0;
  std::size_t low_reachable_markings = 0;
};

/// Direct language equality l(P_L(L(N,m0))) = l_L(L(N_L,m0)). Throws
/// InputError if the low language is not included in the projected one,
/// which would mean the automata were built wrongly.
OracleVerdict snni_oracle(const LabeledPetriNet& lpn, std::size_t cap = kDefaultMarkingCap);

struct JustificationSet {
  LabelWord word;
  /// (s_E, y) with l(s_E) = word and y a minimal j-vector for s_E; sorted.
  std::vector<std::pair<TransitionSequence, ParikhVector>> pairs;
  /// m0 + [N]_I y + [N]_E π(s_E) over all pairs; sorted, distinct.
  std::vector<Marking> basis_markings;
  /// False when some branch was cut by the length cap.
  bool complete = true;
};

/// Exhaustive enumeration of firing sequences s of the full net whose
/// explicit part is labeled by a prefix of `word`, with total length at most
/// cap; the minimal implicit Parikh vectors are kept per explicit sequence.
JustificationSet justifications(const LabeledPetriNet& lpn, const LabelWord& word, std::size_t cap);

/// P_E(L(N, m0)) restricted to explicit sequences of length <= max_len.
/// Implicit runs between explicit steps are closed over markings, so this
/// terminates on nets satisfying the assumptions.
std::vector<TransitionSequence> explicit_projections(const LabeledPetriNet& lpn, std::size_t max_len);

}  // namespace snni
