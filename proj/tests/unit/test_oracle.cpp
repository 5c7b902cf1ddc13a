#include "snni/oracle.hpp"
#include "snni/random_net.hpp"
#include "support.hpp"

using namespace snni;
using test_support::evec;
using test_support::fig1_token_at;
using test_support::tr;

namespace {

LabelWord word(const std::string& s) {
  LabelWord w;
  for (char c : s) w.emplace_back(1, c);
  return w;
}

}  // namespace

TEST_CASE("reachability counts") {
  auto lpn = test_support::load("fig1.json");
  CHECK(reachability_graph(lpn.net()).states.size() == 9);
  CHECK(reachability_graph(lpn.low_subnet().net()).states.size() == 5);
  auto dead = PetriNetBuilder{}.place("p").transition("t").arc("p", "t").build();
  CHECK(reachability_graph(dead).states.size() == 1);
  CHECK_THROWS_AS(reachability_graph(test_support::load("unbounded.json").net()), AssumptionError);
  CHECK_THROWS_AS(reachability_graph(lpn.net(), 4), CapacityError);
}

TEST_CASE("languages of fig1") {
  auto lpn = test_support::load("fig1.json");
  auto projected = projected_label_language(lpn);
  auto low = low_label_language(lpn);
  CHECK(accepts(projected, word("ab")));
  CHECK(accepts(projected, word("ac")) == false);
  CHECK(accepts(projected, word("cd")));
  CHECK(accepts(low, word("abab")));
  CHECK_FALSE(accepts(low, word("b")));
  CHECK(language_equal(projected, low).equal);

  auto fig6 = test_support::load("fig6.json");
  CHECK(accepts(projected_label_language(fig6), word("ac")));
}

TEST_CASE("language equality returns the shortest difference") {
  LabelNfa a, b;
  auto a0 = a.add_state(), a1 = a.add_state(), a2 = a.add_state();
  a.add_initial(a0);
  a.add_arc(a0, Label{"x"}, a1);
  a.add_arc(a1, std::nullopt, a2);
  a.add_arc(a2, Label{"y"}, a0);
  auto b0 = b.add_state(), b1 = b.add_state();
  b.add_initial(b0);
  b.add_arc(b0, Label{"x"}, b1);
  b.add_arc(b1, Label{"y"}, b0);
  CHECK(language_equal(a, b).equal);

  b.add_arc(b1, Label{"z"}, b1);
  auto r = language_equal(a, b);
  CHECK_FALSE(r.equal);
  REQUIRE(r.counterexample);
  CHECK(*r.counterexample == LabelWord{"x", "z"});
  CHECK_FALSE(r.accepted_by_first);
}

TEST_CASE("oracle verdicts on the fixtures") {
  auto fig1 = snni_oracle(test_support::load("fig1.json"));
  CHECK(fig1.snni);
  CHECK_FALSE(fig1.counterexample);
  CHECK(fig1.reachable_markings == 9);
  CHECK(fig1.low_reachable_markings == 5);

  auto fig6 = snni_oracle(test_support::load("fig6.json"));
  CHECK_FALSE(fig6.snni);
  REQUIRE(fig6.counterexample);
  CHECK(format_word(*fig6.counterexample) == "ac");
}

TEST_CASE("the low language is always contained in the projected one") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto lpn = random_net(seed).lpn;
    auto projected = projected_label_language(lpn);
    auto low = low_label_language(lpn);
    auto r = language_equal(projected, low);
    if (!r.equal) {
      REQUIRE(r.counterexample);
      CHECK(r.accepted_by_first);
      CHECK(accepts(projected, *r.counterexample));
      CHECK_FALSE(accepts(low, *r.counterexample));
    }
  }
}

TEST_CASE("justifications of ab in fig1") {
  auto lpn = test_support::load("fig1.json");
  auto j = justifications(lpn, word("ab"), 10);
  CHECK(j.complete);
  std::vector<std::pair<TransitionSequence, ParikhVector>> expected{
      {{tr(lpn, "l_1"), tr(lpn, "l_2")}, evec({1, 0})},
      {{tr(lpn, "l_8"), tr(lpn, "l_9")}, evec({0, 0})},
  };
  CHECK(j.pairs == expected);
  CHECK(j.basis_markings == std::vector<Marking>{fig1_token_at(2), fig1_token_at(1)});
}

TEST_CASE("explicit projections of fig1") {
  auto lpn = test_support::load("fig1.json");
  auto seqs = explicit_projections(lpn, 2);
  auto has = [&](std::vector<std::string> names) {
    TransitionSequence s;
    for (auto& n : names) s.push_back(tr(lpn, n));
    return std::find(seqs.begin(), seqs.end(), s) != seqs.end();
  };
  CHECK(has({}));
  CHECK(has({"l_1", "l_2"}));
  CHECK(has({"l_3", "l_4"}));
  CHECK_FALSE(has({"l_2"}));
  CHECK_FALSE(has({"l_1", "l_3"}));
}
