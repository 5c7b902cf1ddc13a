#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "snni/petri.hpp"

namespace snni {

/// Default cap on explored markings for boundedness checks and
/// reachability graphs.
inline constexpr std::size_t kDefaultMarkingCap = 100000;

enum class Boundedness { Bounded, Unbounded, Unknown };

std::string_view to_string(Boundedness b);

struct AssumptionReport {
  Boundedness bounded = Boundedness::Unknown;
  /// Number of distinct reachable markings explored (exact when Bounded).
  std::size_t explored_markings = 0;

  /// Unboundedness witness: m0 [prefix> from [pump> to, with to
  /// strictly dominating from.
  TransitionSequence witness_prefix;
  TransitionSequence witness_pump;
  Marking witness_from;
  Marking witness_to;

  bool implicit_acyclic = true;
  /// Node names along a circuit of the implicit subnet, first node repeated
  /// at the end.
  std::vector<std::string> implicit_cycle;

  bool ok() const noexcept { return bounded == Boundedness::Bounded && implicit_acyclic; }
  /// One-line description of the first failed assumption, empty if ok().
  std::string failure_reason(const PetriNet& net) const;
};

/// Node names along a circuit of the T_I-induced subnet (first node repeated
/// at the end), or empty when that subnet is acyclic.
std::vector<std::string> implicit_circuit(const LabeledPetriNet& lpn);

/// Boundedness (exhaustive exploration with strict-domination detection
/// along discovery paths) and acyclicity of the high-transition subnet.
AssumptionReport check_assumptions(const LabeledPetriNet& lpn, std::size_t cap = kDefaultMarkingCap);

/// A labeled net known to be bounded with an acyclic implicit subnet.
/// Every basis-marking construction takes one of these.
class CheckedNet {
public:
  /// Throws AssumptionError if either check fails or the cap runs out.
  static CheckedNet verify(LabeledPetriNet lpn, std::size_t cap = kDefaultMarkingCap);

  const LabeledPetriNet& lpn() const noexcept { return lpn_; }
  const PetriNet& net() const noexcept { return lpn_.net(); }
  const AssumptionReport& report() const noexcept { return report_; }

private:
  CheckedNet(LabeledPetriNet lpn, AssumptionReport report)
      : lpn_(std::move(lpn)), report_(std::move(report)) {}

  LabeledPetriNet lpn_;
  AssumptionReport report_;
};

}  // namespace snni
