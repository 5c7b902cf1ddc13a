#include <random>

#include "snni/assumptions.hpp"
#include "snni/petri.hpp"
#include "snni/random_net.hpp"
#include "support.hpp"

using namespace snni;
using test_support::load;
using test_support::marking;
using test_support::tr;

namespace {

PetriNet two_step_net() {
  return PetriNetBuilder{}
      .place("p", 1)
      .place("q")
      .transition("t")
      .transition("u")
      .arc("p", "t")
      .arc("t", "q", 2)
      .arc("q", "u", 2)
      .arc("u", "p")
      .build();
}

}  // namespace

TEST_CASE("enabling and firing") {
  auto net = two_step_net();
  auto m0 = net.initial_marking();
  CHECK(m0 == marking({1, 0}));
  CHECK(net.enabled(m0, 0));
  CHECK_FALSE(net.enabled(m0, 1));
  auto m1 = net.fire(m0, 0);
  CHECK(m1 == marking({0, 2}));
  CHECK(net.fire(m1, 1) == m0);
  CHECK_THROWS_AS(net.fire(m0, 1), FiringError);
}

TEST_CASE("fire_sequence reports the failing step") {
  auto net = two_step_net();
  std::vector<TransitionIndex> s{0, 1, 1};
  try {
    net.fire_sequence(net.initial_marking(), s);
    FAIL("expected FiringError");
  } catch (const FiringError& e) {
    CHECK(e.step_index() == 2);
  }
  std::vector<TransitionIndex> ok{0, 1, 0};
  CHECK(net.fire_sequence(net.initial_marking(), ok) == marking({0, 2}));
}

TEST_CASE("firing follows the incidence matrix") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto lpn = random_net(seed).lpn;
    const auto& net = lpn.net();
    auto m = net.initial_marking();
    for (TransitionIndex t = 0; t < net.transition_count(); ++t) {
      if (!net.enabled(m, t)) continue;
      auto next = net.fire(m, t);
      for (PlaceIndex p = 0; p < net.place_count(); ++p) CHECK(next[p] == m[p] + net.incidence(p, t));
    }
  }
}

TEST_CASE("builder rejects malformed nets") {
  CHECK_THROWS_AS(PetriNetBuilder{}.place("p").place("p").build(), InputError);
  CHECK_THROWS_AS(PetriNetBuilder{}.place("p").transition("t").arc("p", "x").build(), InputError);
  CHECK_THROWS_AS(PetriNetBuilder{}.place("p").place("q").arc("p", "q").build(), InputError);
  CHECK_THROWS_AS(PetriNetBuilder{}.place("p", -1).build(), InputError);
}

TEST_CASE("parikh vectors and projections") {
  std::vector<TransitionIndex> set{3, 5};
  std::vector<TransitionIndex> s{5, 3, 5};
  CHECK(parikh(s, set) == test_support::evec({1, 2}));
  std::vector<TransitionIndex> outside{5, 4};
  CHECK_THROWS_AS(parikh(outside, set), InputError);

  std::vector<TransitionIndex> mixed{1, 5, 2, 3, 1};
  std::vector<TransitionIndex> keep{1, 2};
  CHECK(project(mixed, keep) == TransitionSequence{1, 2, 1});
}

TEST_CASE("projection splits a sequence into interleaved parts") {
  std::mt19937 rng(3);
  std::vector<TransitionIndex> low{0, 1, 2}, high{3, 4};
  for (int round = 0; round < 100; ++round) {
    TransitionSequence s;
    for (int i = 0; i < 10; ++i) s.push_back(rng() % 5);
    auto pl = project(s, low);
    auto ph = project(s, high);
    CHECK(pl.size() + ph.size() == s.size());
    // every element of s shows up, in order, in exactly one of the two
    std::size_t i = 0, j = 0;
    for (auto t : s) {
      if (t < 3) CHECK(pl[i++] == t);
      else CHECK(ph[j++] == t);
    }
  }
}

TEST_CASE("labels and the low subnet of fig1") {
  auto lpn = load("fig1.json");
  CHECK(lpn.low_transitions().size() == 9);
  CHECK(lpn.high_transitions().size() == 2);
  CHECK(lpn.is_high(tr(lpn, "h_1")));
  CHECK(lpn.high_position(tr(lpn, "h_2")) == 1u);
  CHECK_FALSE(lpn.high_position(tr(lpn, "l_1")).has_value());

  std::vector<TransitionIndex> s{tr(lpn, "h_1"), tr(lpn, "l_1"), tr(lpn, "l_2")};
  CHECK(format_word(label_word(lpn, project(s, lpn.low_transitions()))) == "ab");
  CHECK(format_word({}) == "ε");
  CHECK(format_word({"ab", "c"}) == "ab c");

  auto low = lpn.low_subnet();
  CHECK(low.net().transition_count() == 9);
  CHECK(low.high_transitions().empty());
  CHECK(low.net().initial_marking() == lpn.net().initial_marking());
}

TEST_CASE("assumption checks") {
  SUBCASE("fig1 is bounded with acyclic high part") {
    auto report = check_assumptions(load("fig1.json"));
    CHECK(report.ok());
    CHECK(report.explored_markings == 9);
  }
  SUBCASE("unbounded net has a pumping witness") {
    auto lpn = load("unbounded.json");
    auto report = check_assumptions(lpn);
    CHECK(report.bounded == Boundedness::Unbounded);
    CHECK(report.witness_from.strictly_below(report.witness_to));
    CHECK(lpn.net().fire_sequence(lpn.net().initial_marking(), report.witness_prefix) == report.witness_from);
    CHECK(lpn.net().fire_sequence(report.witness_from, report.witness_pump) == report.witness_to);
    CHECK_THROWS_AS(CheckedNet::verify(lpn), AssumptionError);
  }
  SUBCASE("two high transitions forming a circuit") {
    auto net = PetriNetBuilder{}
                   .place("p", 1)
                   .place("q")
                   .transition("h1")
                   .transition("h2")
                   .arc("p", "h1")
                   .arc("h1", "q")
                   .arc("q", "h2")
                   .arc("h2", "p")
                   .build();
    LabeledPetriNet lpn(net, {"f", "g"}, {{"f", Level::High}, {"g", Level::High}});
    auto report = check_assumptions(lpn);
    CHECK(report.bounded == Boundedness::Bounded);
    CHECK_FALSE(report.implicit_acyclic);
    CHECK(report.implicit_cycle.front() == report.implicit_cycle.back());
    CHECK_FALSE(report.failure_reason(lpn.net()).empty());
    CHECK_THROWS_AS(CheckedNet::verify(lpn), AssumptionError);
  }
  SUBCASE("cap exhaustion is reported as unknown") {
    auto report = check_assumptions(load("fig1.json"), 3);
    CHECK(report.bounded == Boundedness::Unknown);
    CHECK_FALSE(report.ok());
  }
}
