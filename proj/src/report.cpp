#include "snni/report.hpp"

#include <chrono>
#include <sstream>

#include "snni/oracle.hpp"
#include "snni/verifier.hpp"

namespace snni {

namespace {

template <class F>
double timed_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string tag_list(const std::vector<LeafTag>& tags) {
  std::string out = "{";
  for (std::size_t i = 0; i < tags.size(); ++i) out += (i ? ", " : "") + tags[i].to_string();
  return out + "}";
}

}  // namespace

AnalysisReport run_analysis(const LabeledPetriNet& lpn, std::size_t marking_cap, std::size_t node_cap) {
  AnalysisReport r;
  std::optional<CheckedNet> checked;
  r.assumptions_ms = timed_ms([&] { checked.emplace(CheckedNet::verify(lpn, marking_cap)); });

  SnniAnalysis a;
  r.verifier_ms = timed_ms([&] { a = analyze_snni(*checked, node_cap); });
  OracleVerdict oracle;
  r.oracle_ms = timed_ms([&] { oracle = snni_oracle(lpn, marking_cap); });

  r.snni = a.verdict.snni;
  r.phi_alpha = a.ubrg.phi_alpha;
  r.phi_beta = a.ubrg.phi_beta;
  r.psi_alpha = a.sv.psi_alpha;
  r.psi_beta = a.sv.psi_beta;
  r.missing_alpha = a.verdict.missing_alpha;
  r.missing_beta = a.verdict.missing_beta;
  r.witness_words = a.verdict.witness_words;
  r.oracle_snni = oracle.snni;
  r.shortest_leak = oracle.counterexample;
  r.reachable_markings = oracle.reachable_markings;
  r.low_reachable_markings = oracle.low_reachable_markings;
  r.brg_states = a.brg.states.size();
  r.ubrg_nodes = a.ubrg.nodes.size();
  r.sv_nodes = a.sv.nodes.size();
  r.m_dup = a.ubrg.m_dup;
  return r;
}

nlohmann::json word_to_json(const LabelWord& word) { return nlohmann::json(word); }

nlohmann::json tags_to_json(const std::vector<LeafTag>& tags) {
  auto out = nlohmann::json::array();
  for (const auto& t : tags) out.push_back(t.to_string());
  return out;
}

nlohmann::json to_json(const AnalysisReport& r) {
  using nlohmann::json;
  json j;
  j["verdict"] = r.snni ? "SNNI" : "NotSNNI";
  j["snni"] = r.snni;
  j["oracle_snni"] = r.oracle_snni;
  j["phi_alpha"] = tags_to_json(r.phi_alpha);
  j["phi_beta"] = tags_to_json(r.phi_beta);
  j["psi_alpha"] = tags_to_json(r.psi_alpha);
  j["psi_beta"] = tags_to_json(r.psi_beta);
  j["missing_alpha"] = tags_to_json(r.missing_alpha);
  j["missing_beta"] = tags_to_json(r.missing_beta);
  j["witness_words"] = json::object();
  for (const auto& [tag, word] : r.witness_words) j["witness_words"][tag.to_string()] = word_to_json(word);
  j["shortest_leak"] = r.shortest_leak ? word_to_json(*r.shortest_leak) : json(nullptr);
  j["m_dup"] = json::array();
  for (const auto& m : r.m_dup) j["m_dup"].push_back(m.values());
  j["sizes"] = {{"reachable_markings", r.reachable_markings},
                {"low_reachable_markings", r.low_reachable_markings},
                {"brg_states", r.brg_states},
                {"ubrg_nodes", r.ubrg_nodes},
                {"sv_nodes", r.sv_nodes}};
  j["timings_ms"] = {{"assumptions", r.assumptions_ms}, {"verifier", r.verifier_ms}, {"oracle", r.oracle_ms}};
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "verdict: " << (r.snni ? "SNNI" : "NotSNNI") << "\n";
  out << "Phi_alpha = " << tag_list(r.phi_alpha) << "  Psi_alpha = " << tag_list(r.psi_alpha) << "\n";
  out << "Phi_beta  = " << tag_list(r.phi_beta) << "  Psi_beta  = " << tag_list(r.psi_beta) << "\n";
  for (const auto& [tag, word] : r.witness_words)
    out << "unmatched " << tag.to_string() << ": low observation " << format_word(word) << "\n";
  if (r.shortest_leak) out << "shortest leaking observation: " << format_word(*r.shortest_leak) << "\n";
  out << "language oracle: " << (r.oracle_snni ? "SNNI" : "NotSNNI")
      << (r.oracle_snni == r.snni ? "" : "  (DISAGREES with the verifier)") << "\n";
  out << "sizes: reachable markings x = " << r.reachable_markings << ", low reachable = " << r.low_reachable_markings
      << ", BRG states = " << r.brg_states << ", UBRG nodes = " << r.ubrg_nodes << ", SV nodes = " << r.sv_nodes
      << "\n";
  out << "timings (ms): assumptions " << r.assumptions_ms << ", verifier " << r.verifier_ms << ", oracle "
      << r.oracle_ms << "\n";
  return out.str();
}

}  // namespace snni
