#include "insider/airplane.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace insider::airplane {

namespace {

// Location indices follow ascending ids: cabin 0, door 1, cockpit 2.
constexpr LocIndex kCabin = 0;
constexpr LocIndex kDoor = 1;
constexpr LocIndex kCockpit = 2;

// Identity indices in sorted order.
constexpr IdIndex kAlice = 0;
constexpr IdIndex kBob = 1;
constexpr IdIndex kCharly = 2;
constexpr IdIndex kEve = 3;

using C = PolicyCondition;

InfraGraph base_graph(std::vector<std::vector<IdIndex>> placements, std::string door_value) {
  InfraGraph g;
  g.edges = {{kDoor, kCabin}, {kCockpit, kDoor}};
  g.placements = std::move(placements);
  g.credentials = {{"PIN"}, {"PIN"}, {"PIN"}, {}};
  g.roles = {{"flightattendant"}, {"pilot"}, {"copilot"}, {}};
  g.values = {std::nullopt, std::move(door_value), std::string("air")};
  normalize(g);
  return g;
}

// placements are indexed cabin, door, cockpit
InfraGraph ex_graph() { return base_graph({{kAlice}, {}, {kBob, kCharly}}, "norm"); }
InfraGraph aid_graph0() { return base_graph({{kAlice}, {kBob}, {kCharly}}, "norm"); }
InfraGraph agid_graph() { return base_graph({{kAlice, kBob}, {}, {kCharly}}, "norm"); }
InfraGraph aid_graph() { return base_graph({{kAlice, kBob}, {}, {kCharly}}, "locked"); }

C cockpit_move() {
  return C::conj({C::requester_at(kCabin), C::has_cred("PIN"), C::is_in(kDoor, "norm")});
}

PolicyVariant local_policies() {
  PolicyVariant v{"baseline", std::vector<std::vector<AtomicPolicy>>(3)};
  v.by_location[kCockpit] = {{C::requester_at(kCockpit), {Action::put}},
                             {cockpit_move(), {Action::move}}};
  v.by_location[kDoor] = {{C::always(), {Action::move}},
                          {C::requester_at(kCockpit), {Action::put}}};
  v.by_location[kCabin] = {{C::always(), {Action::move}}};
  return v;
}

PolicyVariant local_policies_four_eyes() {
  PolicyVariant v{"four_eyes", std::vector<std::vector<AtomicPolicy>>(3)};
  v.by_location[kCockpit] = {
      {C::conj({C::requester_at(kCockpit), C::count_at_least(kCockpit, 2),
                C::all_at_authorized(kCockpit, {kAlice, kBob, kCharly}, "airplane_actors")}),
       {Action::put}},
      {cockpit_move(), {Action::move}}};
  v.by_location[kDoor] = {
      {C::conj({C::requester_at(kCockpit), C::count_at_least(kCockpit, 3)}), {Action::move}}};
  v.by_location[kCabin] = {{C::requester_at(kDoor), {Action::move}}};
  return v;
}

std::vector<NamedPredicate> predicates() {
  using P = StatePredicate;
  const auto a = IdentityArg::parameter("a");
  std::vector<NamedPredicate> out;
  out.push_back({"global_policy", "a",
                 P::disj({P::in_set(a, "airplane_actors"),
                          P::neg(P::enables(kCockpit, a, Action::put))})});
  out.push_back({"safety", "a",
                 P::disj({P::neg(P::in_set(a, "airplane_actors")),
                          P::enables(kCockpit, a, Action::move)})});
  out.push_back({"security", "a",
                 P::disj({P::neg(P::is_in(kDoor, "locked")),
                          P::neg(P::enables(kCockpit, a, Action::move))})});
  out.push_back({"eve_ok", std::nullopt, P::call("global_policy", IdentityArg::of(kEve))});
  out.push_back({"eve_violates", std::nullopt, P::neg(P::call("eve_ok"))});
  out.push_back({"two_person", std::nullopt, P::count_at_least(kCockpit, 2)});
  out.push_back({"eve_in_cockpit", std::nullopt, P::at(IdentityArg::of(kEve), kCockpit)});
  out.push_back({"door_locked", std::nullopt, P::is_in(kDoor, "locked")});
  out.push_back({"grounded", std::nullopt, P::is_in(kCockpit, "ground")});
  return out;
}

}  // namespace

std::string_view to_string(Variant v) { return v == Variant::baseline ? "baseline" : "four_eyes"; }

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "baseline") return Variant::baseline;
  if (text == "four_eyes") return Variant::four_eyes;
  return std::nullopt;
}

Model build_model(Variant v) {
  Model m;
  m.name = "airplane";
  m.locations = {{0, "cabin"}, {1, "door"}, {2, "cockpit"}};
  m.identities = {"Alice", "Bob", "Charly", "Eve"};
  m.sets = {{"airplane_actors", {kAlice, kBob, kCharly}}};
  m.initial = ex_graph();
  m.variants = {local_policies(), local_policies_four_eyes()};
  m.active_variant = v == Variant::baseline ? 0 : 1;
  m.value_alphabet = {{}, {"locked", "norm", "unlocked"}, {"air", "airport", "ground"}};
  m.insiders = {{"Eve",
                 {"Charly"},
                 {PsyState::depressed, {Motivation::revenge, Motivation::peer_recognition}}}};
  m.predicates = predicates();
  finalize(m);
  return m;
}

const std::vector<std::string>& state_names() {
  static const std::vector<std::string> names = {
      "Airplane_scenario",  "Airplane_getting_in_danger0", "Airplane_getting_in_danger",
      "Airplane_in_danger", "Airplane_not_in_danger",      "Airplane_not_in_danger_init"};
  return names;
}

NamedState named_state(std::string_view name) {
  if (name == "Airplane_scenario") return {ex_graph(), Variant::baseline};
  if (name == "Airplane_getting_in_danger0") return {aid_graph0(), Variant::baseline};
  if (name == "Airplane_getting_in_danger") return {agid_graph(), Variant::baseline};
  if (name == "Airplane_in_danger") return {aid_graph(), Variant::baseline};
  // Airplane_not_in_danger is unreachable from Airplane_not_in_danger_init;
  // its global policy holds only because a lone pilot never meets the
  // two-person guard.
  if (name == "Airplane_not_in_danger") return {aid_graph(), Variant::four_eyes};
  if (name == "Airplane_not_in_danger_init") return {ex_graph(), Variant::four_eyes};
  throw ModelError("unknown airplane state '" + std::string(name) + "'");
}

namespace {

bool is_airplane_actor(const Model& m, IdIndex who) {
  const IdentitySet* set = m.find_set("airplane_actors");
  if (set == nullptr) throw ModelError("model has no airplane_actors set");
  return std::binary_search(set->members.begin(), set->members.end(), who);
}

}  // namespace

bool global_policy(const Model& m, const InfraGraph& g, std::string_view who) {
  const IdIndex a = m.identity(who);
  if (is_airplane_actor(m, a)) return true;
  return !enables(m, g, m.location("cockpit"), m.actor_of(a), Action::put);
}

bool safety(const Model& m, const InfraGraph& g, std::string_view who) {
  const IdIndex a = m.identity(who);
  if (!is_airplane_actor(m, a)) return true;
  return enables(m, g, m.location("cockpit"), m.actor_of(a), Action::move);
}

bool security(const Model& m, const InfraGraph& g, std::string_view who) {
  const IdIndex a = m.identity(who);
  const auto& door = g.values.at(m.location("door"));
  if (!door || *door != "locked") return true;
  return !enables(m, g, m.location("cockpit"), m.actor_of(a), Action::move);
}

std::string_view to_string(Recommendation r) {
  switch (r) {
    case Recommendation::one_person:
      return "one_person";
    case Recommendation::two_person:
      return "two_person";
    case Recommendation::tie:
      return "tie";
  }
  return "tie";
}

RiskComparison risk_compare(const RiskInputs& r) {
  for (double p : {r.p0, r.p1, r.p2})
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability outside [0, 1]");
  RiskComparison out;
  out.one_person = r.p0 + r.p1 - r.p0 * r.p1;
  out.two_person = r.p2;
  if (out.one_person < out.two_person)
    out.recommend = Recommendation::one_person;
  else if (out.two_person < out.one_person)
    out.recommend = Recommendation::two_person;
  else
    out.recommend = Recommendation::tie;
  return out;
}

}  // namespace insider::airplane
