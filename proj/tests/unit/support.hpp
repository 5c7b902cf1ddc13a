#pragma once

#include <string>

#include <doctest.h>

#include "snni/assumptions.hpp"
#include "snni/net_io.hpp"

namespace test_support {

inline std::string fixture(const std::string& name) { return std::string(SNNI_FIXTURE_DIR) + "/" + name; }

inline snni::LabeledPetriNet load(const std::string& name) { return snni::load_net(fixture(name)); }

inline snni::CheckedNet checked(const std::string& name) { return snni::CheckedNet::verify(load(name)); }

inline snni::Marking marking(std::initializer_list<std::int64_t> v) { return snni::Marking(std::vector<std::int64_t>(v)); }

inline snni::ParikhVector evec(std::initializer_list<std::int64_t> v) {
  return snni::ParikhVector(std::vector<std::int64_t>(v));
}

// Marking of fig1 with one token in p_k (1-based).
inline snni::Marking fig1_token_at(std::size_t k) {
  std::vector<std::int64_t> v(9, 0);
  v[k - 1] = 1;
  return snni::Marking(v);
}

inline snni::TransitionIndex tr(const snni::LabeledPetriNet& lpn, const std::string& name) {
  return lpn.net().transition_index(name);
}

}  // namespace test_support
