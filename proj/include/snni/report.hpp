#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "snni/assumptions.hpp"
#include "snni/basis_graphs.hpp"
#include "snni/petri.hpp"

namespace snni {

/// Everything the `check` command reports for one net.
struct AnalysisReport {
  bool snni = false;
  std::vector<LeafTag> phi_alpha, phi_beta, psi_alpha, psi_beta;
  std::vector<LeafTag> missing_alpha, missing_beta;
  std::vector<std::pair<LeafTag, LabelWord>> witness_words;
  /// Shortest low observation with no low-only counterpart (from the
  /// language-equality search), when not SNNI.
  std::optional<LabelWord> shortest_leak;
  /// Verdict of the brute-force language check, for comparison.
  bool oracle_snni = false;

  std::size_t reachable_markings = 0;      // x
  std::size_t low_reachable_markings = 0;  // |R(N_L, m0)|
  std::size_t brg_states = 0;
  std::size_t ubrg_nodes = 0;
  std::size_t sv_nodes = 0;
  std::vector<Marking> m_dup;

  double assumptions_ms = 0, verifier_ms = 0, oracle_ms = 0;
};

/// Verifies the assumptions, runs the basis-marking pipeline and the
/// language oracle. Throws AssumptionError / CapacityError.
AnalysisReport run_analysis(const LabeledPetriNet& lpn, std::size_t marking_cap = kDefaultMarkingCap,
                            std::size_t node_cap = kDefaultNodeCap);

nlohmann::json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

nlohmann::json word_to_json(const LabelWord& word);
nlohmann::json tags_to_json(const std::vector<LeafTag>& tags);

}  // namespace snni
