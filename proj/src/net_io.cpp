#include "snni/net_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace snni {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(where + ": missing field '" + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_string()) throw FormatError(where + "." + key + ": expected a string");
  auto s = v.get<std::string>();
  if (s.empty()) throw FormatError(where + "." + key + ": must not be empty");
  return s;
}

std::int64_t optional_int(const json& obj, const char* key, std::int64_t fallback, std::int64_t min,
                          const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) throw FormatError(where + "." + key + ": expected an integer");
  auto v = it->get<std::int64_t>();
  if (v < min) throw FormatError(where + "." + key + ": must be >= " + std::to_string(min));
  return v;
}

const json& require_array(const json& doc, const char* key) {
  const auto& v = require(doc, key, "document");
  if (!v.is_array()) throw FormatError(std::string(key) + ": expected an array");
  return v;
}

}  // namespace

LabeledPetriNet parse_net(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    // nlohmann reports "line L, column C" in its message
    throw FormatError(std::string("malformed net document: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("net document must be a JSON object");

  auto version = require_string(doc, "schema_version", "document");
  if (version != kNetSchemaVersion)
    throw FormatError("schema_version: unsupported version '" + version + "' (expected " +
                      std::string(kNetSchemaVersion) + ")");

  PetriNetBuilder builder;
  std::set<std::string> ids;
  std::set<std::string> place_ids;

  const auto& places = require_array(doc, "places");
  for (std::size_t i = 0; i < places.size(); ++i) {
    std::string where = "places[" + std::to_string(i) + "]";
    if (!places[i].is_object()) throw FormatError(where + ": expected an object");
    auto id = require_string(places[i], "id", where);
    if (!ids.insert(id).second) throw FormatError(where + ".id: duplicate identifier '" + id + "'");
    place_ids.insert(id);
    builder.place(id, optional_int(places[i], "initial_tokens", 0, 0, where));
  }

  std::vector<std::string> labels;
  std::map<std::string, Level> level_of;
  const auto& transitions = require_array(doc, "transitions");
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    std::string where = "transitions[" + std::to_string(i) + "]";
    if (!transitions[i].is_object()) throw FormatError(where + ": expected an object");
    auto id = require_string(transitions[i], "id", where);
    if (!ids.insert(id).second) throw FormatError(where + ".id: duplicate identifier '" + id + "'");
    auto label = require_string(transitions[i], "label", where);
    auto level_name = require_string(transitions[i], "level", where);
    Level level;
    if (level_name == "low")
      level = Level::Low;
    else if (level_name == "high")
      level = Level::High;
    else
      throw FormatError(where + ".level: expected \"low\" or \"high\", got \"" + level_name + "\"");
    auto [it, inserted] = level_of.emplace(label, level);
    if (!inserted && it->second != level)
      throw FormatError(where + ".label: label '" + label +
                        "' is used at both levels; low and high alphabets must be disjoint (A_E ∩ A_I = ∅)");
    builder.transition(id);
    labels.push_back(label);
  }

  const auto& arcs = require_array(doc, "arcs");
  std::set<std::pair<std::string, std::string>> seen_arcs;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    std::string where = "arcs[" + std::to_string(i) + "]";
    if (!arcs[i].is_object()) throw FormatError(where + ": expected an object");
    auto from = require_string(arcs[i], "from", where);
    auto to = require_string(arcs[i], "to", where);
    if (!ids.contains(from)) throw FormatError(where + ".from: unknown identifier '" + from + "'");
    if (!ids.contains(to)) throw FormatError(where + ".to: unknown identifier '" + to + "'");
    if (place_ids.contains(from) == place_ids.contains(to))
      throw FormatError(where + ": arc " + from + " -> " + to + " must connect a place and a transition");
    if (!seen_arcs.emplace(from, to).second) throw FormatError(where + ": duplicate arc " + from + " -> " + to);
    builder.arc(from, to, optional_int(arcs[i], "weight", 1, 1, where));
  }

  try {
    return LabeledPetriNet(builder.build(), std::move(labels), std::move(level_of));
  } catch (const InputError& e) {
    throw FormatError(e.what());
  }
}

LabeledPetriNet load_net(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open net document '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_net(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string serialize_net(const LabeledPetriNet& lpn) {
  const auto& net = lpn.net();
  json doc;
  doc["schema_version"] = kNetSchemaVersion;
  doc["places"] = json::array();
  for (PlaceIndex p = 0; p < net.place_count(); ++p)
    doc["places"].push_back({{"id", net.place_name(p)}, {"initial_tokens", net.initial_marking()[p]}});
  doc["transitions"] = json::array();
  for (TransitionIndex t = 0; t < net.transition_count(); ++t)
    doc["transitions"].push_back(
        {{"id", net.transition_name(t)}, {"label", lpn.label(t)}, {"level", std::string(to_string(lpn.level(t)))}});
  doc["arcs"] = json::array();
  for (PlaceIndex p = 0; p < net.place_count(); ++p)
    for (TransitionIndex t = 0; t < net.transition_count(); ++t)
      if (net.pre(p, t) > 0)
        doc["arcs"].push_back({{"from", net.place_name(p)}, {"to", net.transition_name(t)}, {"weight", net.pre(p, t)}});
  for (TransitionIndex t = 0; t < net.transition_count(); ++t)
    for (PlaceIndex p = 0; p < net.place_count(); ++p)
      if (net.post(p, t) > 0)
        doc["arcs"].push_back(
            {{"from", net.transition_name(t)}, {"to", net.place_name(p)}, {"weight", net.post(p, t)}});
  return doc.dump(2) + "\n";
}

}  // namespace snni
