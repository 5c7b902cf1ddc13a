// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Detail lines are indented under their criterion.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "snni/basis_graphs.hpp"
#include "snni/explanations.hpp"
#include "snni/net_io.hpp"
#include "snni/oracle.hpp"
#include "snni/random_net.hpp"
#include "snni/report.hpp"
#include "snni/verifier.hpp"

using namespace snni;

namespace {

struct Settings {
  std::uint64_t first_seed = 1;
  std::size_t battery = 1000;
  std::size_t projection_nets = 60;
  std::size_t explanation_queries = 150;
  std::size_t node_cap = 200000;
  std::string dump_dir = "disagreements";
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Gate {
public:
  void run(int number, const std::string& title, const std::function<bool(std::ostream&)>& body) {
    std::ostringstream details;
    bool ok = false;
    try {
      ok = body(details);
    } catch (const std::exception& e) {
      details << "exception: " << e.what() << "\n";
    }
    if (!ok) ++failures_;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "\n";
    std::istringstream lines(details.str());
    for (std::string line; std::getline(lines, line);) std::cout << "      " << line << "\n";
  }
  int failures() const { return failures_; }

private:
  int failures_ = 0;
};

std::string fixture(const std::string& name) { return std::string(SNNI_FIXTURE_DIR) + "/" + name; }

Marking token_at(std::size_t places, std::size_t k) {
  std::vector<std::int64_t> v(places, 0);
  v[k - 1] = 1;
  return Marking(v);
}

std::string tags(const std::vector<LeafTag>& ts) {
  std::string out = "{";
  for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? ", " : "") + ts[i].to_string();
  return out + "}";
}

std::string vectors(const std::vector<ParikhVector>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vs[i].to_string();
  return out + "}";
}

LabelWord word(const std::string& s) {
  LabelWord w;
  for (char c : s) w.emplace_back(1, c);
  return w;
}

bool criterion1(std::ostream& out) {
  auto net = CheckedNet::verify(load_net(fixture("fig1.json")));
  auto brg = build_brg(net);
  std::vector<Marking> table{token_at(9, 1), token_at(9, 3), token_at(9, 5), token_at(9, 6),
                             token_at(9, 8), token_at(9, 2), token_at(9, 9), token_at(9, 7)};
  out << "basis markings: " << brg.states.size() << "\n";
  for (std::size_t i = 0; i < brg.states.size(); ++i) out << "m" << i << " = " << brg.states[i].to_string() << "\n";
  return brg.states == table;
}

bool criterion2(std::ostream& out) {
  auto net = CheckedNet::verify(load_net(fixture("fig1.json")));
  const auto& lpn = net.lpn();
  const auto& pn = net.net();
  auto m0 = pn.initial_marking();
  auto y1 = minimal_e_vectors(net, m0, pn.transition_index("l_1")).evectors;
  auto y5 = minimal_e_vectors(net, m0, pn.transition_index("l_5")).evectors;
  out << "Y_min(m0,l_1) = " << vectors(y1) << ", Y_min(m0,l_5) = " << vectors(y5) << "\n";

  auto j = justifications(lpn, word("ab"), 10);
  std::vector<std::pair<TransitionSequence, ParikhVector>> expected{
      {{pn.transition_index("l_1"), pn.transition_index("l_2")}, ParikhVector({1, 0})},
      {{pn.transition_index("l_8"), pn.transition_index("l_9")}, ParikhVector({0, 0})},
  };
  out << "justifications(ab) = {";
  for (std::size_t i = 0; i < j.pairs.size(); ++i)
    out << (i ? ", " : "") << "(" << format_sequence(pn, j.pairs[i].first) << "," << j.pairs[i].second.to_string()
        << ")";
  out << "}\n";
  return y1 == std::vector{ParikhVector({1, 0})} && y5 == std::vector{ParikhVector({0, 0})} && j.complete &&
         j.pairs == expected;
}

bool criterion3(std::ostream& out) {
  auto ubrg = build_ubrg(CheckedNet::verify(load_net(fixture("fig1.json"))));
  out << "M_dup = {";
  for (std::size_t i = 0; i < ubrg.m_dup.size(); ++i) out << (i ? ", " : "") << ubrg.m_dup[i].to_string();
  out << "}, Phi_alpha = " << tags(ubrg.phi_alpha) << ", Phi_beta = " << tags(ubrg.phi_beta) << "\n";
  std::vector<Marking> m_dup{token_at(9, 3), token_at(9, 1)};  // m1, m0 in sorted order
  return ubrg.m_dup == m_dup && ubrg.phi_alpha == std::vector{LeafTag{LeafTag::Kind::Alpha, 1}} &&
         ubrg.phi_beta == std::vector{LeafTag{LeafTag::Kind::Beta, 1}};
}

bool criterion4(std::ostream& out) {
  auto a = analyze_snni(CheckedNet::verify(load_net(fixture("fig1.json"))));
  out << "Psi_alpha = " << tags(a.sv.psi_alpha) << ", Psi_beta = " << tags(a.sv.psi_beta)
      << ", verdict = " << (a.verdict.snni ? "SNNI" : "NotSNNI") << "\n";
  return a.sv.psi_alpha == std::vector{LeafTag{LeafTag::Kind::Alpha, 1}} &&
         a.sv.psi_beta == std::vector{LeafTag{LeafTag::Kind::Beta, 1}} && a.verdict.snni;
}

bool criterion5(std::ostream& out) {
  auto lpn = load_net(fixture("fig6.json"));
  auto a = analyze_snni(CheckedNet::verify(lpn));
  auto oracle = snni_oracle(lpn);
  out << "Psi_alpha = " << tags(a.sv.psi_alpha) << ", Psi_beta = " << tags(a.sv.psi_beta)
      << ", verdict = " << (a.verdict.snni ? "SNNI" : "NotSNNI") << ", missing_beta = " << tags(a.verdict.missing_beta)
      << "\n";
  bool prefix_ok = false;
  if (oracle.counterexample) {
    const auto& w = *oracle.counterexample;
    prefix_ok = w.size() >= 2 && LabelWord(w.begin(), w.begin() + 2) == word("ac") &&
                !accepts(low_label_language(lpn), w);
    out << "oracle counterexample: " << format_word(w) << "\n";
  }
  return a.sv.psi_alpha == std::vector{LeafTag{LeafTag::Kind::Alpha, 1}} && a.sv.psi_beta.empty() &&
         !a.verdict.snni && a.verdict.missing_beta == std::vector{LeafTag{LeafTag::Kind::Beta, 1}} &&
         !oracle.snni && prefix_ok;
}

struct BatteryResult {
  std::size_t decided = 0, disagreements = 0, capped = 0, not_snni = 0;
  double seconds = 0;
};

BatteryResult battery(const Settings& s, std::ostream& out) {
  BatteryResult r;
  auto start = Clock::now();
  for (std::uint64_t seed = s.first_seed; seed < s.first_seed + s.battery; ++seed) {
    auto lpn = random_net(seed).lpn;
    auto checked = CheckedNet::verify(lpn);
    Verdict v;
    try {
      v = decide_snni(checked, s.node_cap);
    } catch (const CapacityError&) {
      ++r.capped;
      continue;
    }
    auto o = snni_oracle(lpn);
    ++r.decided;
    if (!o.snni) ++r.not_snni;
    if (v.snni == o.snni) continue;
    ++r.disagreements;
    std::filesystem::create_directories(s.dump_dir);
    auto path = std::filesystem::path(s.dump_dir) / ("seed_" + std::to_string(seed) + ".json");
    std::ofstream(path) << serialize_net(lpn);
    out << "DISAGREEMENT seed " << seed << ": verifier " << (v.snni ? "SNNI" : "NotSNNI") << ", oracle "
        << (o.snni ? "SNNI" : "NotSNNI");
    if (o.counterexample) out << " (leak " << format_word(*o.counterexample) << ")";
    if (!v.missing_beta.empty()) out << ", unmatched " << tags(v.missing_beta);
    if (!v.missing_alpha.empty()) out << ", unmatched " << tags(v.missing_alpha);
    out << "; net written to " << path.string() << "\n";
  }
  r.seconds = seconds_since(start);
  return r;
}

bool criterion7(const Settings& s, std::ostream& out) {
  std::size_t checked_nets = 0, sequences = 0, mismatches = 0;
  for (std::uint64_t seed = s.first_seed; checked_nets < s.projection_nets; ++seed) {
    auto net = CheckedNet::verify(random_net(seed).lpn);
    auto from_brg = brg_sequences(build_brg(net), 8);
    auto direct = explicit_projections(net.lpn(), 8);
    std::set<TransitionSequence> a(from_brg.begin(), from_brg.end()), b(direct.begin(), direct.end());
    ++checked_nets;
    sequences += b.size();
    if (a != b) {
      ++mismatches;
      out << "mismatch on seed " << seed << ": " << a.size() << " vs " << b.size() << " sequences\n";
    }
  }
  out << checked_nets << " nets, " << sequences << " explicit sequences up to length 8\n";
  return mismatches == 0;
}

bool criterion8(const Settings& s, std::ostream& out) {
  std::mt19937_64 rng(s.first_seed);
  std::size_t uniform = 0, needing_high = 0, mismatches = 0;
  auto compare = [&](const CheckedNet& net, std::uint64_t seed, const Marking& m, TransitionIndex t) {
    auto fast = minimal_e_vectors(net, m, t).evectors;
    std::vector<ParikhVector> all;
    for (auto& e : explanations_bounded(net.lpn(), m, t, default_explanation_cap(net))) all.push_back(e.evector);
    auto slow = minimality_filter(all);
    if (fast != slow) {
      ++mismatches;
      out << "mismatch on seed " << seed << " at " << m.to_string() << ", " << net.net().transition_name(t) << ": "
          << vectors(fast) << " vs " << vectors(slow) << "\n";
    }
    return slow;
  };
  // uniform (m, t) over reachable markings and low transitions, plus a second
  // batch restricted to pairs whose reference answer is not {0} or empty
  for (std::uint64_t seed = s.first_seed; uniform < s.explanation_queries || needing_high < 100; ++seed) {
    auto net = CheckedNet::verify(random_net(seed).lpn);
    const auto& lpn = net.lpn();
    if (lpn.high_transitions().empty() || lpn.low_transitions().empty()) continue;
    auto states = reachability_graph(net.net()).states;
    if (uniform < s.explanation_queries) {
      compare(net, seed, states[rng() % states.size()], lpn.low_transitions()[rng() % lpn.low_transitions().size()]);
      ++uniform;
    }
    for (const auto& m : states)
      for (auto t : lpn.low_transitions()) {
        if (needing_high >= 100 || net.net().enabled(m, t)) continue;
        if (!compare(net, seed, m, t).empty()) ++needing_high;
      }
  }
  out << uniform << " uniform queries, " << needing_high << " queries whose answer needs high transitions\n";
  return mismatches == 0;
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"acceptance criteria"};
  app.add_option("--first-seed", s.first_seed);
  app.add_option("--battery", s.battery, "random nets compared against the language check");
  app.add_option("--dump-dir", s.dump_dir, "where disagreeing nets are written");
  CLI11_PARSE(app, argc, argv);

  Gate gate;
  gate.run(1, "fig1 basis reachability graph has the 8 expected markings", criterion1);
  gate.run(2, "minimal e-vectors and justifications of ab in fig1", criterion2);
  gate.run(3, "fig1 unfolding: M_dup, Phi_alpha, Phi_beta", criterion3);
  gate.run(4, "fig1 verifier: Psi sets and SNNI verdict", criterion4);
  gate.run(5, "fig6 verifier: NotSNNI with beta_1 unmatched, oracle leak starts with ac", criterion5);

  BatteryResult bat;
  gate.run(6, "verifier agrees with the language check on random nets", [&](std::ostream& out) {
    bat = battery(s, out);
    out << "seeds " << s.first_seed << ".." << s.first_seed + s.battery - 1 << ": " << bat.decided << " decided ("
        << bat.not_snni << " not SNNI), " << bat.capped << " over the node cap, " << bat.disagreements
        << " disagreements\n";
    return bat.decided >= 200 && bat.disagreements == 0;
  });
  gate.run(7, "basis graph paths give the explicit projections up to length 8",
           [&](std::ostream& out) { return criterion7(s, out); });
  gate.run(8, "minimal e-vectors equal filtered exhaustive enumeration",
           [&](std::ostream& out) { return criterion8(s, out); });

  gate.run(9, "size metrics and time limits", [&](std::ostream& out) {
    bool ok = true;
    for (const char* name : {"fig1.json", "fig6.json"}) {
      auto start = Clock::now();
      auto r = run_analysis(load_net(fixture(name)));
      double secs = seconds_since(start);
      out << name << ": x = " << r.reachable_markings << ", BRG " << r.brg_states << ", UBRG " << r.ubrg_nodes
          << ", SV " << r.sv_nodes << " nodes, " << secs << " s\n";
      ok = ok && secs < 1.0;
      if (std::string(name) == "fig1.json") ok = ok && r.sv_nodes <= 162;
    }
    out << "random battery: " << bat.seconds << " s\n";
    return ok && bat.seconds < 120.0;
  });

  std::cout << (gate.failures() ? std::to_string(gate.failures()) + " criteria failed" : "all criteria passed")
            << "\n";
  return gate.failures() ? 1 : 0;
}
