#include "snni/petri.hpp"

#include <algorithm>
#include <set>

namespace snni {

PetriNet::PetriNet(std::vector<std::string> places, std::vector<std::string> transitions,
                   std::vector<std::vector<std::int64_t>> pre, std::vector<std::vector<std::int64_t>> post,
                   Marking initial)
    : places_(std::move(places)),
      transitions_(std::move(transitions)),
      pre_(std::move(pre)),
      post_(std::move(post)),
      initial_(std::move(initial)) {
  std::set<std::string> seen;
  for (const auto& name : places_) {
    if (name.empty()) throw InputError("empty place identifier");
    if (!seen.insert(name).second) throw InputError("duplicate identifier '" + name + "'");
  }
  for (const auto& name : transitions_) {
    if (name.empty()) throw InputError("empty transition identifier");
    if (!seen.insert(name).second) throw InputError("duplicate identifier '" + name + "'");
  }
  auto check_matrix = [&](const auto& mat, const char* what) {
    if (mat.size() != places_.size()) throw InputError(std::string(what) + " matrix has wrong row count");
    for (const auto& row : mat) {
      if (row.size() != transitions_.size())
        throw InputError(std::string(what) + " matrix has wrong column count");
      for (auto w : row)
        if (w < 0) throw InputError(std::string("negative arc weight in ") + what + " matrix");
    }
  };
  check_matrix(pre_, "pre");
  check_matrix(post_, "post");
  check_marking(initial_);
}

std::optional<PlaceIndex> PetriNet::find_place(std::string_view name) const {
  auto it = std::find(places_.begin(), places_.end(), name);
  if (it == places_.end()) return std::nullopt;
  return static_cast<PlaceIndex>(it - places_.begin());
}

std::optional<TransitionIndex> PetriNet::find_transition(std::string_view name) const {
  auto it = std::find(transitions_.begin(), transitions_.end(), name);
  if (it == transitions_.end()) return std::nullopt;
  return static_cast<TransitionIndex>(it - transitions_.begin());
}

TransitionIndex PetriNet::transition_index(std::string_view name) const {
  if (auto t = find_transition(name)) return *t;
  throw InputError("unknown transition '" + std::string(name) + "'");
}

void PetriNet::check_marking(const Marking& m) const {
  if (m.size() != places_.size())
    throw InputError("marking has " + std::to_string(m.size()) + " entries, net has " +
                     std::to_string(places_.size()) + " places");
}

void PetriNet::check_transition(TransitionIndex t) const {
  if (t >= transitions_.size()) throw InputError("unknown transition index " + std::to_string(t));
}

bool PetriNet::enabled(const Marking& m, TransitionIndex t) const {
  check_transition(t);
  check_marking(m);
  for (PlaceIndex p = 0; p < places_.size(); ++p)
    if (m[p] < pre_[p][t]) return false;
  return true;
}

Marking PetriNet::fire(const Marking& m, TransitionIndex t) const {
  check_transition(t);
  check_marking(m);
  std::vector<std::int64_t> next(m.values());
  for (PlaceIndex p = 0; p < places_.size(); ++p) {
    if (next[p] < pre_[p][t])
      throw FiringError("transition '" + transitions_[t] + "' is not enabled: place '" + places_[p] + "' holds " +
                            std::to_string(next[p]) + " token(s), needs " + std::to_string(pre_[p][t]),
                        0);
    next[p] += post_[p][t] - pre_[p][t];
  }
  return Marking(std::move(next));
}

Marking PetriNet::fire_sequence(const Marking& m, std::span<const TransitionIndex> s) const {
  Marking current = m;
  for (std::size_t i = 0; i < s.size(); ++i) {
    try {
      current = fire(current, s[i]);
    } catch (const FiringError& e) {
      throw FiringError("step " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return current;
}

Marking PetriNet::apply_counts(const Marking& m, std::span<const TransitionIndex> subset,
                               const ParikhVector& counts) const {
  check_marking(m);
  if (counts.size() != subset.size()) throw InputError("Parikh vector does not match its index set");
  std::vector<std::int64_t> next(m.values());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    check_transition(subset[k]);
    for (PlaceIndex p = 0; p < places_.size(); ++p) next[p] += counts[k] * incidence(p, subset[k]);
  }
  for (auto v : next)
    if (v < 0) throw InputError("marking equation produced a negative entry");
  return Marking(std::move(next));
}

PetriNet PetriNet::induced_subnet(std::span<const TransitionIndex> keep) const {
  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> pre(places_.size()), post(places_.size());
  for (auto t : keep) {
    check_transition(t);
    names.push_back(transitions_[t]);
    for (PlaceIndex p = 0; p < places_.size(); ++p) {
      pre[p].push_back(pre_[p][t]);
      post[p].push_back(post_[p][t]);
    }
  }
  return PetriNet(places_, std::move(names), std::move(pre), std::move(post), initial_);
}

PetriNetBuilder& PetriNetBuilder::place(std::string name, std::int64_t tokens) {
  places_.push_back(std::move(name));
  tokens_.push_back(tokens);
  return *this;
}

PetriNetBuilder& PetriNetBuilder::transition(std::string name) {
  transitions_.push_back(std::move(name));
  return *this;
}

PetriNetBuilder& PetriNetBuilder::arc(const std::string& from, const std::string& to, std::int64_t weight) {
  arcs_.push_back({from, to, weight});
  return *this;
}

PetriNet PetriNetBuilder::build() const {
  std::vector<std::vector<std::int64_t>> pre(places_.size(), std::vector<std::int64_t>(transitions_.size(), 0));
  auto post = pre;
  auto index_of = [](const std::vector<std::string>& v, const std::string& name) -> std::optional<std::size_t> {
    auto it = std::find(v.begin(), v.end(), name);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  };
  for (const auto& a : arcs_) {
    if (a.weight < 1) throw InputError("arc " + a.from + " -> " + a.to + " must have weight >= 1");
    auto fp = index_of(places_, a.from), ft = index_of(transitions_, a.from);
    auto tp = index_of(places_, a.to), tt = index_of(transitions_, a.to);
    if (!fp && !ft) throw InputError("arc source '" + a.from + "' is not declared");
    if (!tp && !tt) throw InputError("arc target '" + a.to + "' is not declared");
    if (fp && tt) {
      if (pre[*fp][*tt] != 0) throw InputError("duplicate arc " + a.from + " -> " + a.to);
      pre[*fp][*tt] = a.weight;
    } else if (ft && tp) {
      if (post[*tp][*ft] != 0) throw InputError("duplicate arc " + a.from + " -> " + a.to);
      post[*tp][*ft] = a.weight;
    } else {
      throw InputError("arc " + a.from + " -> " + a.to + " must connect a place and a transition");
    }
  }
  return PetriNet(places_, transitions_, std::move(pre), std::move(post), Marking(tokens_));
}

std::string_view to_string(Level level) { return level == Level::Low ? "low" : "high"; }

LabeledPetriNet::LabeledPetriNet(PetriNet net, std::vector<std::string> labels, std::map<std::string, Level> level_of)
    : net_(std::move(net)), labels_(std::move(labels)), level_of_(std::move(level_of)) {
  if (labels_.size() != net_.transition_count())
    throw InputError("labeling must assign exactly one label to every transition");
  for (TransitionIndex t = 0; t < labels_.size(); ++t) {
    if (labels_[t].empty()) throw InputError("transition '" + net_.transition_name(t) + "' has an empty label");
    auto it = level_of_.find(labels_[t]);
    if (it == level_of_.end())
      throw InputError("label '" + labels_[t] + "' of transition '" + net_.transition_name(t) +
                       "' is missing from the alphabet");
    levels_.push_back(it->second);
    if (it->second == Level::Low) {
      low_.push_back(t);
      high_pos_.push_back(std::nullopt);
    } else {
      high_pos_.push_back(high_.size());
      high_.push_back(t);
    }
  }
}

std::optional<std::size_t> LabeledPetriNet::high_position(TransitionIndex t) const { return high_pos_.at(t); }

LabeledPetriNet LabeledPetriNet::low_subnet() const {
  std::vector<std::string> labels;
  std::map<std::string, Level> alphabet;
  for (auto t : low_) {
    labels.push_back(labels_[t]);
    alphabet[labels_[t]] = Level::Low;
  }
  return LabeledPetriNet(net_.induced_subnet(low_), std::move(labels), std::move(alphabet));
}

ParikhVector parikh(std::span<const TransitionIndex> s, std::span<const TransitionIndex> index_set) {
  std::vector<std::int64_t> counts(index_set.size(), 0);
  for (auto t : s) {
    auto it = std::find(index_set.begin(), index_set.end(), t);
    if (it == index_set.end())
      throw InputError("transition index " + std::to_string(t) + " is outside the Parikh index set");
    ++counts[static_cast<std::size_t>(it - index_set.begin())];
  }
  return ParikhVector(std::move(counts));
}

TransitionSequence project(std::span<const TransitionIndex> s, std::span<const TransitionIndex> keep) {
  TransitionSequence out;
  for (auto t : s)
    if (std::find(keep.begin(), keep.end(), t) != keep.end()) out.push_back(t);
  return out;
}

LabelWord label_word(const LabeledPetriNet& lpn, std::span<const TransitionIndex> s) {
  LabelWord w;
  w.reserve(s.size());
  for (auto t : s) w.push_back(lpn.label(t));
  return w;
}

std::string format_word(const LabelWord& word) {
  if (word.empty()) return "ε";
  bool single = std::all_of(word.begin(), word.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i && !single) out += ' ';
    out += word[i];
  }
  return out;
}

std::string format_sequence(const PetriNet& net, std::span<const TransitionIndex> s) {
  if (s.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += net.transition_name(s[i]);
  }
  return out;
}

}  // namespace snni
