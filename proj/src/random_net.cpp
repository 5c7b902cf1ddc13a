#include "snni/random_net.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "snni/assumptions.hpp"

namespace snni {

namespace {

LabeledPetriNet draw(std::mt19937_64& rng, const RandomNetParams& params) {
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::bernoulli_distribution arc(params.arc_density);
  std::bernoulli_distribution high(params.high_probability);

  const std::size_t np = uniform(params.min_places, params.max_places);
  const std::size_t nt = uniform(params.min_transitions, params.max_transitions);

  PetriNetBuilder b;
  std::bernoulli_distribution marked(0.3);
  std::vector<std::int64_t> tokens(np, 0);
  for (auto& k : tokens)
    if (marked(rng)) k = static_cast<std::int64_t>(uniform(1, static_cast<std::size_t>(params.max_initial_tokens)));
  if (std::all_of(tokens.begin(), tokens.end(), [](auto k) { return k == 0; })) tokens[0] = 1;
  for (std::size_t p = 0; p < np; ++p) b.place("p" + std::to_string(p + 1), tokens[p]);

  std::vector<std::string> labels;
  std::map<std::string, Level> level_of;
  for (std::size_t t = 0; t < nt; ++t) {
    std::string name = "t" + std::to_string(t + 1);
    b.transition(name);
    std::string label;
    if (params.high_labels > 0 && high(rng)) {
      label = std::string(1, static_cast<char>('f' + uniform(0, params.high_labels - 1)));
      level_of[label] = Level::High;
    } else {
      label = std::string(1, static_cast<char>('a' + uniform(0, params.low_labels - 1)));
      level_of[label] = Level::Low;
    }
    labels.push_back(label);

    bool has_input = false;
    for (std::size_t p = 0; p < np; ++p) {
      if (arc(rng)) {
        b.arc("p" + std::to_string(p + 1), name, uniform(0, 9) == 0 ? 2 : 1);
        has_input = true;
      }
    }
    if (!has_input) b.arc("p" + std::to_string(uniform(1, np)), name);
    for (std::size_t p = 0; p < np; ++p)
      if (arc(rng)) b.arc(name, "p" + std::to_string(p + 1), uniform(0, 9) == 0 ? 2 : 1);
  }
  return LabeledPetriNet(b.build(), std::move(labels), std::move(level_of));
}

}  // namespace

RandomNet random_net(std::uint64_t seed, const RandomNetParams& params) {
  if (params.low_labels == 0 || params.low_labels > 5 || params.high_labels > 5)
    throw InputError("random nets use at most five low labels (a-e) and five high labels (f-j)");
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= params.max_attempts; ++attempt) {
    auto lpn = draw(rng, params);
    if (check_assumptions(lpn, params.marking_cap).ok()) return {std::move(lpn), seed, attempt};
  }
  throw CapacityError("no net satisfying the assumptions after " + std::to_string(params.max_attempts) + " attempts");
}

}  // namespace snni
