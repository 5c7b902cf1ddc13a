#pragma once

#include <cstddef>
#include <vector>

#include "snni/assumptions.hpp"
#include "snni/petri.hpp"

namespace snni {

/// An implicit sequence whose firing enables an explicit transition, with
/// its Parikh vector over T_I.
struct Explanation {
  TransitionSequence sequence;
  ParikhVector evector;

  friend bool operator==(const Explanation&, const Explanation&) = default;
};

/// Y_min(m,t): the Parikh-minimal e-vectors of t at m, one witness
/// sequence each (the first found in breadth-first order).
struct MinimalExplanationSet {
  Marking marking;
  TransitionIndex transition = 0;
  std::vector<ParikhVector> evectors;  // sorted lexicographically
  std::vector<Explanation> witnesses;  // witnesses[i].evector == evectors[i]

  bool empty() const noexcept { return evectors.empty(); }
};

/// Every implicit sequence of length <= len_cap that is firable at m and
/// enables t afterwards. Exhaustive enumeration, meant as a reference.
/// Throws InputError if t is not explicit and AssumptionError if the
/// implicit subnet has a circuit.
std::vector<Explanation> explanations_bounded(const LabeledPetriNet& lpn, const Marking& m, TransitionIndex t,
                                              std::size_t len_cap);

/// Length cap large enough for explanations_bounded to be exhaustive:
/// |T_I| * (1 + largest token count among markings reachable in the net).
std::size_t default_explanation_cap(const CheckedNet& net);

/// Keeps exactly the elements of cands that have no strictly smaller
/// (componentwise <=, not equal) element in cands. Duplicates collapse.
std::vector<ParikhVector> minimality_filter(std::vector<ParikhVector> cands);

/// Y_min(m,t) computed by breadth-first search over implicit firings from m,
/// pruning branches whose accumulated vector is dominated.
MinimalExplanationSet minimal_e_vectors(const CheckedNet& net, const Marking& m, TransitionIndex t);

}  // namespace snni
