#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "insider/model.hpp"

namespace insider::airplane {

/// baseline: cockpit put for anyone inside. four_eyes: put needs two
/// authorized people inside, and leaving needs three.
enum class Variant { baseline, four_eyes };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

/// Cockpit, door and cabin with pilot Bob, copilot Charly, flight attendant
/// Alice, and Eve as an insider able to act as Charly. Both policy variants
/// are present; `v` selects the active one.
Model build_model(Variant v);

struct NamedState {
  InfraGraph graph;
  Variant variant;
};

/// Airplane_scenario, Airplane_getting_in_danger0, Airplane_getting_in_danger,
/// Airplane_in_danger, Airplane_not_in_danger, Airplane_not_in_danger_init.
NamedState named_state(std::string_view name);
const std::vector<std::string>& state_names();

/// Nobody outside the airplane actors may put at the cockpit.
bool global_policy(const Model& m, const InfraGraph& g, std::string_view who);
/// Airplane actors can move into the cockpit.
bool safety(const Model& m, const InfraGraph& g, std::string_view who);
/// With the door locked nobody can move into the cockpit.
bool security(const Model& m, const InfraGraph& g, std::string_view who);

struct RiskInputs {
  double p0 = 0;  // one pilot is an insider
  double p1 = 0;  // a terrorist enters the cockpit under the one-person rule
  double p2 = 0;  // a terrorist enters the cockpit under the two-person rule
};

enum class Recommendation { one_person, two_person, tie };

std::string_view to_string(Recommendation r);

struct RiskComparison {
  double one_person = 0;
  double two_person = 0;
  Recommendation recommend = Recommendation::tie;
};

/// one_person = p0 + p1 - p0*p1, two_person = p2. Throws
/// std::invalid_argument for inputs outside [0, 1].
RiskComparison risk_compare(const RiskInputs& r);

}  // namespace insider::airplane
