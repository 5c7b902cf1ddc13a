#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snni/errors.hpp"

namespace snni {

using PlaceIndex = std::size_t;
using TransitionIndex = std::size_t;
using TransitionSequence = std::vector<TransitionIndex>;
using LabelWord = std::vector<std::string>;

/// Non-negative integer vector. The tag keeps markings (indexed by places)
/// and Parikh vectors (indexed by a transition subset) from mixing.
template <class Tag>
class CountVector {
public:
  CountVector() = default;
  explicit CountVector(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
    for (auto c : counts_)
      if (c < 0)
        throw InputError("negative entry in " + std::string(Tag::name));
  }
  static CountVector zeros(std::size_t n) { return CountVector(std::vector<std::int64_t>(n, 0)); }

  std::size_t size() const noexcept { return counts_.size(); }
  std::int64_t operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<std::int64_t>& values() const noexcept { return counts_; }

  bool is_zero() const noexcept {
    for (auto c : counts_)
      if (c != 0) return false;
    return true;
  }

  /// Componentwise <=.
  bool leq(const CountVector& other) const noexcept {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (counts_[i] > other.counts_[i]) return false;
    return true;
  }

  /// Componentwise <= and different somewhere.
  bool strictly_below(const CountVector& other) const noexcept {
    return leq(other) && counts_ != other.counts_;
  }

  CountVector& operator+=(const CountVector& other) {
    if (size() != other.size()) throw InputError("size mismatch adding " + std::string(Tag::name) + "s");
    for (std::size_t i = 0; i < size(); ++i) counts_[i] += other.counts_[i];
    return *this;
  }
  friend CountVector operator+(CountVector a, const CountVector& b) { return a += b; }

  void increment(std::size_t i) { ++counts_[i]; }

  auto operator<=>(const CountVector&) const = default;

  /// "[1 0 2]"
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(counts_[i]);
    }
    return out + "]";
  }

private:
  std::vector<std::int64_t> counts_;
};

struct MarkingTag {
  static constexpr const char* name = "marking";
};
struct ParikhTag {
  static constexpr const char* name = "Parikh vector";
};

using Marking = CountVector<MarkingTag>;
using ParikhVector = CountVector<ParikhTag>;

/// Place/transition net with weighted arcs. Immutable after construction;
/// place and transition order is declaration order.
class PetriNet {
public:
  /// pre[p][t] = W(p,t), post[p][t] = W(t,p).
  PetriNet(std::vector<std::string> places, std::vector<std::string> transitions,
           std::vector<std::vector<std::int64_t>> pre, std::vector<std::vector<std::int64_t>> post,
           Marking initial);

  std::size_t place_count() const noexcept { return places_.size(); }
  std::size_t transition_count() const noexcept { return transitions_.size(); }
  const std::vector<std::string>& places() const noexcept { return places_; }
  const std::vector<std::string>& transitions() const noexcept { return transitions_; }
  const std::string& place_name(PlaceIndex p) const { return places_.at(p); }
  const std::string& transition_name(TransitionIndex t) const { return transitions_.at(t); }

  std::optional<PlaceIndex> find_place(std::string_view name) const;
  std::optional<TransitionIndex> find_transition(std::string_view name) const;
  /// Throws InputError for unknown names.
  TransitionIndex transition_index(std::string_view name) const;

  std::int64_t pre(PlaceIndex p, TransitionIndex t) const { return pre_[p][t]; }
  std::int64_t post(PlaceIndex p, TransitionIndex t) const { return post_[p][t]; }
  /// [N](p,t) = W(t,p) - W(p,t)
  std::int64_t incidence(PlaceIndex p, TransitionIndex t) const { return post_[p][t] - pre_[p][t]; }

  const Marking& initial_marking() const noexcept { return initial_; }

  bool enabled(const Marking& m, TransitionIndex t) const;
  Marking fire(const Marking& m, TransitionIndex t) const;
  /// Throws FiringError carrying the index of the first step that is not enabled.
  Marking fire_sequence(const Marking& m, std::span<const TransitionIndex> s) const;

  /// m + sum_t counts[t] * [N](.,t) for t ranging over `subset`. Used for the
  /// marking equation with e-vectors; the result is checked to be non-negative.
  Marking apply_counts(const Marking& m, std::span<const TransitionIndex> subset,
                       const ParikhVector& counts) const;

  /// T'-induced subnet: same places and initial marking, transitions
  /// restricted to `keep` (in the order given).
  PetriNet induced_subnet(std::span<const TransitionIndex> keep) const;

private:
  void check_marking(const Marking& m) const;
  void check_transition(TransitionIndex t) const;

  std::vector<std::string> places_;
  std::vector<std::string> transitions_;
  std::vector<std::vector<std::int64_t>> pre_;
  std::vector<std::vector<std::int64_t>> post_;
  Marking initial_;
};

/// Incremental construction of a PetriNet from named places, transitions
/// and arcs.
class PetriNetBuilder {
public:
  PetriNetBuilder& place(std::string name, std::int64_t tokens = 0);
  PetriNetBuilder& transition(std::string name);
  /// One of `from`/`to` must be a place and the other a transition.
  PetriNetBuilder& arc(const std::string& from, const std::string& to, std::int64_t weight = 1);
  PetriNet build() const;

private:
  struct PendingArc {
    std::string from, to;
    std::int64_t weight;
  };
  std::vector<std::string> places_;
  std::vector<std::int64_t> tokens_;
  std::vector<std::string> transitions_;
  std::vector<PendingArc> arcs_;
};

/// Observation level of a label: low (explicit) labels are visible to every
/// user, high (implicit) labels only to high-level users.
enum class Level { Low, High };

std::string_view to_string(Level level);

/// Labeled net system (N, m0, l, A) with the alphabet split into low and
/// high labels.
class LabeledPetriNet {
public:
  /// labels[t] is l(t); level_of maps every used label to its level.
  LabeledPetriNet(PetriNet net, std::vector<std::string> labels, std::map<std::string, Level> level_of);

  const PetriNet& net() const noexcept { return net_; }
  const std::string& label(TransitionIndex t) const { return labels_.at(t); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  Level level(TransitionIndex t) const { return levels_.at(t); }
  bool is_low(TransitionIndex t) const { return level(t) == Level::Low; }
  bool is_high(TransitionIndex t) const { return level(t) == Level::High; }

  /// T_E = T_L, declaration order.
  const std::vector<TransitionIndex>& low_transitions() const noexcept { return low_; }
  /// T_I = T_H, declaration order. Parikh vectors over T_I use this order.
  const std::vector<TransitionIndex>& high_transitions() const noexcept { return high_; }
  /// Position of t inside high_transitions(), if t is high.
  std::optional<std::size_t> high_position(TransitionIndex t) const;

  const std::map<std::string, Level>& alphabet() const noexcept { return level_of_; }

  /// The low-level subnet system (N_L, m0, l_L, A_L).
  LabeledPetriNet low_subnet() const;

private:
  PetriNet net_;
  std::vector<std::string> labels_;
  std::map<std::string, Level> level_of_;
  std::vector<Level> levels_;
  std::vector<TransitionIndex> low_;
  std::vector<TransitionIndex> high_;
  std::vector<std::optional<std::size_t>> high_pos_;
};

/// Parikh vector of s over index_set; throws InputError if s uses a
/// transition outside index_set.
ParikhVector parikh(std::span<const TransitionIndex> s, std::span<const TransitionIndex> index_set);

/// Order-preserving erasure of every item not in keep.
TransitionSequence project(std::span<const TransitionIndex> s, std::span<const TransitionIndex> keep);

/// l(s)
LabelWord label_word(const LabeledPetriNet& lpn, std::span<const TransitionIndex> s);

/// Words print as concatenated symbols when every symbol is one character,
/// space separated otherwise.
std::string format_word(const LabelWord& word);

std::string format_sequence(const PetriNet& net, std::span<const TransitionIndex> s);

}  // namespace snni
