// snni: command-line driver for SNNI analysis of bounded labeled Petri nets.
//
// Exit status: 0 = SNNI (or success), 1 = not SNNI, 2 = input or
// assumption error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "snni/assumptions.hpp"
#include "snni/basis_graphs.hpp"
#include "snni/dot.hpp"
#include "snni/explanations.hpp"
#include "snni/net_io.hpp"
#include "snni/oracle.hpp"
#include "snni/random_net.hpp"
#include "snni/report.hpp"
#include "snni/verifier.hpp"

namespace {

constexpr int kExitSnni = 0;
constexpr int kExitNotSnni = 1;
constexpr int kExitError = 2;

struct Options {
  std::string net;
  std::string out;
  std::size_t cap = snni::kDefaultMarkingCap;
  std::size_t node_cap = snni::kDefaultNodeCap;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string marking;
  std::string transition;
  bool low = false;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw snni::InputError("cannot write '" + opt.out + "'");
  f << text;
}

snni::Marking parse_marking(const std::string& text, std::size_t places) {
  std::vector<std::int64_t> tokens;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      tokens.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw snni::InputError("--marking: '" + item + "' is not an integer");
    }
  }
  if (tokens.size() != places)
    throw snni::InputError("--marking has " + std::to_string(tokens.size()) + " entries, net has " +
                           std::to_string(places) + " places");
  return snni::Marking(std::move(tokens));
}

int cmd_check(const Options& opt) {
  auto report = snni::run_analysis(snni::load_net(opt.net), opt.cap, opt.node_cap);
  emit(opt, opt.format == "json" ? snni::to_json(report).dump(2) + "\n" : snni::to_text(report));
  return report.snni ? kExitSnni : kExitNotSnni;
}

int cmd_oracle(const Options& opt) {
  auto verdict = snni::snni_oracle(snni::load_net(opt.net), opt.cap);
  if (opt.format == "json") {
    nlohmann::json j{{"verdict", verdict.snni ? "SNNI" : "NotSNNI"},
                     {"snni", verdict.snni},
                     {"counterexample", verdict.counterexample ? snni::word_to_json(*verdict.counterexample)
                                                               : nlohmann::json(nullptr)},
                     {"reachable_markings", verdict.reachable_markings},
                     {"low_reachable_markings", verdict.low_reachable_markings}};
    emit(opt, j.dump(2) + "\n");
  } else {
    std::string text = std::string("verdict: ") + (verdict.snni ? "SNNI" : "NotSNNI") + "\n";
    if (verdict.counterexample)
      text += "shortest leaking observation: " + snni::format_word(*verdict.counterexample) + "\n";
    text += "reachable markings: " + std::to_string(verdict.reachable_markings) +
            ", low subnet: " + std::to_string(verdict.low_reachable_markings) + "\n";
    emit(opt, text);
  }
  return verdict.snni ? kExitSnni : kExitNotSnni;
}

int cmd_graph(const Options& opt, const std::string& which) {
  auto lpn = snni::load_net(opt.net);
  if (which == "reach") {
    if (opt.low) {
      auto low = lpn.low_subnet();
      emit(opt, snni::export_dot(low, snni::reachability_graph(low.net(), opt.cap)));
    } else {
      emit(opt, snni::export_dot(lpn, snni::reachability_graph(lpn.net(), opt.cap)));
    }
    return kExitSnni;
  }
  auto checked = snni::CheckedNet::verify(lpn, opt.cap);
  auto brg = snni::build_brg(checked);
  if (which == "brg") {
    emit(opt, snni::export_dot(lpn, brg));
    return kExitSnni;
  }
  auto ubrg = snni::build_ubrg(checked, brg, opt.node_cap);
  if (which == "ubrg") {
    emit(opt, snni::export_dot(lpn, ubrg));
    return kExitSnni;
  }
  emit(opt, snni::export_dot(lpn, ubrg, snni::build_sv(checked, ubrg, opt.node_cap)));
  return kExitSnni;
}

int cmd_info(const Options& opt) {
  auto lpn = snni::load_net(opt.net);
  auto report = snni::check_assumptions(lpn, opt.cap);
  const auto& net = lpn.net();
  if (opt.format == "json") {
    nlohmann::json j{{"places", net.place_count()},
                     {"transitions", net.transition_count()},
                     {"bounded", std::string(snni::to_string(report.bounded))},
                     {"explored_markings", report.explored_markings},
                     {"implicit_acyclic", report.implicit_acyclic},
                     {"ok", report.ok()}};
    if (report.bounded == snni::Boundedness::Unbounded) {
      j["witness"] = {{"prefix", snni::format_sequence(net, report.witness_prefix)},
                      {"pump", snni::format_sequence(net, report.witness_pump)},
                      {"from", report.witness_from.values()},
                      {"to", report.witness_to.values()}};
    }
    if (!report.implicit_acyclic) j["implicit_cycle"] = report.implicit_cycle;
    emit(opt, j.dump(2) + "\n");
  } else {
    std::string text = "places: " + std::to_string(net.place_count()) +
                       ", transitions: " + std::to_string(net.transition_count()) + " (" +
                       std::to_string(lpn.low_transitions().size()) + " low, " +
                       std::to_string(lpn.high_transitions().size()) + " high)\n";
    text += "boundedness: " + std::string(snni::to_string(report.bounded));
    if (report.bounded == snni::Boundedness::Bounded)
      text += " (" + std::to_string(report.explored_markings) + " reachable markings)";
    text += "\nimplicit subnet acyclic: " + std::string(report.implicit_acyclic ? "yes" : "no") + "\n";
    if (!report.ok()) text += "problem: " + report.failure_reason(net) + "\n";
    emit(opt, text);
  }
  return report.ok() ? kExitSnni : kExitError;
}

int cmd_explain(const Options& opt) {
  auto checked = snni::CheckedNet::verify(snni::load_net(opt.net), opt.cap);
  const auto& net = checked.net();
  auto m = opt.marking.empty() ? net.initial_marking() : parse_marking(opt.marking, net.place_count());
  auto t = net.transition_index(opt.transition);
  auto ymin = snni::minimal_e_vectors(checked, m, t);
  if (opt.format == "json") {
    nlohmann::json j{{"marking", m.values()}, {"transition", opt.transition}, {"evectors", nlohmann::json::array()}};
    for (const auto& w : ymin.witnesses)
      j["evectors"].push_back({{"evector", w.evector.values()}, {"witness", snni::format_sequence(net, w.sequence)}});
    emit(opt, j.dump(2) + "\n");
  } else {
    std::string text = "Y_min(" + m.to_string() + ", " + opt.transition + ") = {";
    for (std::size_t i = 0; i < ymin.evectors.size(); ++i) text += (i ? ", " : "") + ymin.evectors[i].to_string();
    text += "}\n";
    for (const auto& w : ymin.witnesses)
      text += "  " + w.evector.to_string() + " via " + snni::format_sequence(net, w.sequence) + "\n";
    emit(opt, text);
  }
  return kExitSnni;
}

int cmd_random(const Options& opt) {
  snni::RandomNetParams params;
  params.marking_cap = std::min<std::size_t>(opt.cap, params.marking_cap);
  emit(opt, snni::serialize_net(snni::random_net(opt.seed, params).lpn));
  return kExitSnni;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SNNI analysis of bounded labeled Petri nets"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool needs_net) {
    auto* net = sub->add_option("--net", opt.net, "net document (JSON)")->check(CLI::ExistingFile);
    if (needs_net) net->required();
    sub->add_option("--out", opt.out, "write output here instead of stdout");
    sub->add_option("--cap", opt.cap, "cap on explored markings")->check(CLI::PositiveNumber);
    sub->add_option("--node-cap", opt.node_cap, "cap on unfolding/verifier tree nodes")->check(CLI::PositiveNumber);
    sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    return sub;
  };

  auto* check = common(app.add_subcommand("check", "decide SNNI with the basis-marking verifier"), true);
  auto* oracle = common(app.add_subcommand("oracle", "decide SNNI by brute-force language equality"), true);
  auto* brg = common(app.add_subcommand("brg", "export the basis reachability graph (DOT)"), true);
  auto* ubrg = common(app.add_subcommand("ubrg", "export the unfolded basis reachability graph (DOT)"), true);
  auto* sv = common(app.add_subcommand("sv", "export the SNNI verifier tree (DOT)"), true);
  auto* reach = common(app.add_subcommand("reach", "export the reachability graph (DOT)"), true);
  reach->add_flag("--low", opt.low, "use the low-level subnet");
  auto* info = common(app.add_subcommand("info", "report boundedness and implicit-subnet acyclicity"), true);
  auto* explain = common(app.add_subcommand("explain", "minimal e-vectors of a low transition at a marking"), true);
  explain->add_option("--transition", opt.transition, "low transition id")->required();
  explain->add_option("--marking", opt.marking, "comma separated tokens per place (default: initial marking)");
  auto* random = common(app.add_subcommand("random", "emit a random net satisfying the assumptions"), false);
  random->add_option("--seed", opt.seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*check) return cmd_check(opt);
    if (*oracle) return cmd_oracle(opt);
    if (*brg) return cmd_graph(opt, "brg");
    if (*ubrg) return cmd_graph(opt, "ubrg");
    if (*sv) return cmd_graph(opt, "sv");
    if (*reach) return cmd_graph(opt, "reach");
    if (*info) return cmd_info(opt);
    if (*explain) return cmd_explain(opt);
    if (*random) return cmd_random(opt);
  } catch (const snni::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
