#pragma once

#include <cstddef>
#include <cstdint>

#include "snni/petri.hpp"

namespace snni {

struct RandomNetParams {
  std::size_t min_places = 2;
  std::size_t max_places = 6;
  std::size_t min_transitions = 2;
  std::size_t max_transitions = 8;
  /// Probability of each place->transition and transition->place arc.
  double arc_density = 0.3;
  /// Probability that a transition is high level.
  double high_probability = 0.3;
  /// High labels are drawn from {f, g, ...}, low labels from {a, b, c, ...}.
  std::size_t high_labels = 2;
  std::size_t low_labels = 3;
  std::int64_t max_initial_tokens = 2;
  /// Rejection threshold for boundedness.
  std::size_t marking_cap = 2000;
  std::size_t max_attempts = 100000;
};

struct RandomNet {
  LabeledPetriNet lpn;
  std::uint64_t seed;
  /// Candidates drawn (including the accepted one).
  std::size_t attempts;
};

/// Draws candidate nets from a generator seeded with `seed` until one is
/// bounded (within params.marking_cap) and has an acyclic high-level
/// subnet. Same seed and params, same net. Throws CapacityError if
/// max_attempts is exhausted.
RandomNet random_net(std::uint64_t seed, const RandomNetParams& params = {});

}  // namespace snni
