#include <doctest.h>

#include <random>

#include "insider/airplane.hpp"
#include "insider/kripke.hpp"
#include "insider/model.hpp"
#include "random_model.hpp"

using namespace insider;

namespace {

Model airplane_model() { return airplane::build_model(airplane::Variant::baseline); }

// One location, two identities, no policies.
Model tiny() {
  Model m;
  m.locations = {{0, "room"}};
  m.identities = {"a", "b"};
  m.initial.placements = {{0}};
  m.initial.values = {std::nullopt};
  m.initial.credentials = {{}, {}};
  m.initial.roles = {{}, {}};
  m.value_alphabet = {{}};
  m.variants = {{"only", {{}}}};
  return m;
}

}  // namespace

TEST_CASE("tipping point") {
  CHECK(tipping_point({PsyState::depressed, {Motivation::revenge, Motivation::peer_recognition}}));
  CHECK_FALSE(tipping_point({PsyState::happy, {}}));
  CHECK_FALSE(tipping_point({PsyState::happy, {Motivation::financial}}));
  CHECK_FALSE(tipping_point({PsyState::angry, {}}));
}

TEST_CASE("psychological state and motivation names") {
  for (auto p : {PsyState::happy, PsyState::depressed, PsyState::disgruntled, PsyState::angry,
                 PsyState::stressed})
    CHECK(parse_psy_state(to_string(p)) == p);
  CHECK_FALSE(parse_psy_state("Happy"));
  CHECK(parse_motivation("competitive_advantage") == Motivation::competitive_advantage);
  CHECK_FALSE(parse_motivation("greed"));
}

TEST_CASE("actor resolver") {
  const std::vector<std::string> ids = {"Alice", "Bob", "Charly", "Eve"};
  const ActorPsyState tipped{PsyState::depressed, {Motivation::revenge, Motivation::peer_recognition}};

  SUBCASE("active insider is identified with its alter ego") {
    const auto r = build_resolver({{"Eve", {"Charly"}, tipped}}, ids);
    CHECK(r.actor_of(3) == r.actor_of(2));
    CHECK(r.actor_of(3).representative == 2);
    CHECK(r.actor_of(0) != r.actor_of(1));
    CHECK(r.members(r.actor_of(3)) == std::vector<IdIndex>{2, 3});
  }
  SUBCASE("no insiders gives singleton classes") {
    const auto r = build_resolver({}, ids);
    for (IdIndex i = 0; i < ids.size(); ++i) {
      CHECK(r.actor_of(i).representative == i);
      for (IdIndex j = 0; j < ids.size(); ++j) CHECK(r.same_actor(i, j) == (i == j));
    }
  }
  SUBCASE("insider below the tipping point stays separate") {
    const auto r = build_resolver({{"Eve", {"Charly"}, {PsyState::happy, {Motivation::power}}}}, ids);
    CHECK_FALSE(r.same_actor(2, 3));
  }
  SUBCASE("merging is transitive") {
    const auto r = build_resolver({{"Eve", {"Charly"}, tipped}, {"Bob", {"Eve"}, tipped}}, ids);
    CHECK(r.same_actor(1, 2));
    CHECK(r.actor_of(3).representative == 1);
    CHECK_FALSE(r.same_actor(0, 1));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(build_resolver({{"Eve", {"Mallory"}, tipped}}, ids), ModelError);
    CHECK_THROWS_AS(build_resolver({{"Mallory", {"Eve"}, tipped}}, ids), ModelError);
    CHECK_THROWS_AS(build_resolver({{"Eve", {"Eve"}, tipped}}, ids), ModelError);
  }
}

TEST_CASE("condition evaluation on the airplane scenario") {
  const Model m = airplane_model();
  const InfraGraph& g = m.initial;
  const LocIndex cockpit = m.location("cockpit");
  const LocIndex door = m.location("door");
  using C = PolicyCondition;

  CHECK(eval_condition(C::is_in(door, "norm"), g, m.actor_of(0), m.resolver));
  CHECK_FALSE(eval_condition(C::is_in(door, "Norm"), g, m.actor_of(0), m.resolver));
  CHECK(eval_condition(C::has_cred("PIN"), g, m.actor_of(m.identity("Alice")), m.resolver));
  CHECK_FALSE(eval_condition(C::count_at_least(cockpit, 3), g, m.actor_of(0), m.resolver));
  CHECK(eval_condition(C::count_at_least(cockpit, 2), g, m.actor_of(0), m.resolver));
  // Eve inherits Charly's credential and presence.
  const ActorClassId eve = m.actor_of(m.identity("Eve"));
  CHECK(eval_condition(C::has_cred("PIN"), g, eve, m.resolver));
  CHECK(eval_condition(C::has_role("copilot"), g, eve, m.resolver));
  CHECK(eval_condition(C::requester_at(cockpit), g, eve, m.resolver));
  CHECK_FALSE(eval_condition(C::requester_at(cockpit), g, m.actor_of(m.identity("Alice")),
                             m.resolver));
  const auto& actors = m.find_set("airplane_actors")->members;
  CHECK(eval_condition(C::all_at_authorized(cockpit, actors), g, eve, m.resolver));
  CHECK_FALSE(eval_condition(C::all_at_authorized(cockpit, {m.identity("Bob")}), g, eve,
                             m.resolver));
  CHECK(eval_condition(C::neg(C::conj({C::always(), C::has_role("pilot")})), g, eve, m.resolver));
  CHECK(eval_condition(C::disj({C::has_role("pilot"), C::always()}), g, eve, m.resolver));
}

TEST_CASE("enables on the airplane scenario") {
  Model m = airplane_model();
  const LocIndex cockpit = m.location("cockpit");
  const ActorClassId eve = m.actor_of(m.identity("Eve"));
  const ActorClassId bob = m.actor_of(m.identity("Bob"));

  CHECK(enables(m, m.initial, cockpit, eve, Action::put));
  const InfraGraph danger = airplane::named_state("Airplane_in_danger").graph;
  CHECK_FALSE(enables(m, danger, cockpit, bob, Action::move));
  CHECK_FALSE(enables(m, m.initial, m.location("cabin"), bob, Action::put));
  CHECK_FALSE(enables(m, m.initial, cockpit, bob, Action::eval));

  SUBCASE("foe control disables only the foe's class") {
    m.assumptions.push_back({cockpit, Action::put, m.identity("Eve")});
    CHECK_FALSE(enables(m, m.initial, cockpit, eve, Action::put));
    CHECK(enables_by_policy(m, m.initial, cockpit, eve, Action::put));
    CHECK(enables(m, m.initial, cockpit, bob, Action::put));
  }
}

TEST_CASE("location without policies enables nothing") {
  Model m = tiny();
  finalize(m);
  for (Action a : {Action::get, Action::move, Action::eval, Action::put})
    for (IdIndex i = 0; i < 2; ++i) CHECK_FALSE(enables(m, m.initial, 0, m.actor_of(i), a));
}

TEST_CASE("finalize rejects malformed models") {
  SUBCASE("no locations") {
    Model m = tiny();
    m.locations.clear();
    CHECK_THROWS_AS(finalize(m), ModelError);
  }
  SUBCASE("identity placed twice") {
    Model m = tiny();
    m.locations.push_back({1, "hall"});
    m.initial.placements = {{0}, {0}};
    m.initial.values.push_back(std::nullopt);
    m.value_alphabet.push_back({});
    m.variants[0].by_location.push_back({});
    CHECK_THROWS_AS(finalize(m), ModelError);
  }
  SUBCASE("unsorted identities") {
    Model m = tiny();
    m.identities = {"b", "a"};
    CHECK_THROWS_AS(finalize(m), ModelError);
  }
  SUBCASE("policy without actions") {
    Model m = tiny();
    m.variants[0].by_location[0].push_back({PolicyCondition::always(), {}});
    CHECK_THROWS_AS(finalize(m), ModelError);
  }
  SUBCASE("unknown predicate and recursion") {
    Model m = tiny();
    m.predicates.push_back({"p", std::nullopt, StatePredicate::call("missing")});
    CHECK_THROWS_AS(finalize(m), ModelError);
    m.predicates = {{"p", std::nullopt, StatePredicate::call("q")},
                    {"q", std::nullopt, StatePredicate::neg(StatePredicate::call("p"))}};
    CHECK_THROWS_AS(finalize(m), ModelError);
  }
  SUBCASE("parameter shadowing an identity") {
    Model m = tiny();
    m.predicates.push_back(
        {"p", std::string("a"), StatePredicate::at(IdentityArg::parameter("a"), 0)});
    CHECK_THROWS_AS(finalize(m), ModelError);
  }
  SUBCASE("named allowed set must match its members") {
    Model m = tiny();
    m.sets.push_back({"s", {0}});
    m.variants[0].by_location[0].push_back(
        {PolicyCondition::all_at_authorized(0, {0, 1}, "s"), {Action::move}});
    CHECK_THROWS_AS(finalize(m), ModelError);
  }
}

TEST_CASE("named predicates") {
  const Model m = airplane_model();
  CHECK_FALSE(eval_named(m, m.initial, "eve_ok"));
  CHECK(eval_named(m, m.initial, "eve_violates"));
  CHECK(eval_named(m, m.initial, "two_person"));
  CHECK_THROWS_AS(eval_named(m, m.initial, "nope"), CheckError);
  CHECK_THROWS_AS(eval_named(m, m.initial, "global_policy"), CheckError);
}

TEST_CASE("lint flags policies that only grant eval") {
  Model m = tiny();
  m.variants[0].by_location[0].push_back({PolicyCondition::always(), {Action::eval}});
  finalize(m);
  const auto warnings = lint(m);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("eval") != std::string::npos);
  CHECK(lint(airplane_model()).empty());
}

TEST_CASE("property: foe control only affects the foe's class") {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 100; ++n) {
    Model m = testing_support::random_model(rng);
    m.assumptions.clear();
    finalize(m);
    Model with = m;
    std::uniform_int_distribution<std::size_t> loc(0, m.locations.size() - 1);
    std::uniform_int_distribution<std::size_t> id(0, m.identities.size() - 1);
    const FoeControl f{loc(rng), Action::put, id(rng)};
    with.assumptions.push_back(f);
    const KripkeModel k = reachable(m);
    for (std::size_t s = 0; s < k.size(); ++s) {
      for (IdIndex i = 0; i < m.identities.size(); ++i) {
        if (m.actor_of(i) == m.actor_of(f.foe)) {
          // Never grants more than the policy alone.
          if (enables(with, k.graph(s), f.location, m.actor_of(i), f.action))
            CHECK(enables(m, k.graph(s), f.location, m.actor_of(i), f.action));
          continue;
        }
        for (LocIndex l = 0; l < m.locations.size(); ++l)
          for (Action a : {Action::get, Action::move, Action::put})
            CHECK(enables(with, k.graph(s), l, m.actor_of(i), a) ==
                  enables(m, k.graph(s), l, m.actor_of(i), a));
      }
    }
  }
}

TEST_CASE("property: adding a policy never disables a grant") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    Model m = testing_support::random_model(rng);
    m.assumptions.clear();
    finalize(m);
    Model more = m;
    std::uniform_int_distribution<std::size_t> loc(0, m.locations.size() - 1);
    more.variants[more.active_variant].by_location[loc(rng)].push_back(
        {PolicyCondition::has_cred("c0"), {Action::move, Action::put}});
    finalize(more);
    const KripkeModel k = reachable(m);
    for (std::size_t s = 0; s < k.size(); ++s)
      for (IdIndex i = 0; i < m.identities.size(); ++i)
        for (LocIndex l = 0; l < m.locations.size(); ++l)
          for (Action a : {Action::get, Action::move, Action::put})
            if (enables(m, k.graph(s), l, m.actor_of(i), a))
              CHECK(enables(more, k.graph(s), l, m.actor_of(i), a));
  }
}
