#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "insider/actor.hpp"
#include "insider/condition.hpp"
#include "insider/graph.hpp"
#include "insider/types.hpp"

namespace insider {

struct Location {
  std::uint32_t id = 0;
  std::string name;

  friend bool operator==(const Location&, const Location&) = default;
};

struct IdentitySet {
  std::string name;
  std::vector<IdIndex> members;  // sorted

  friend bool operator==(const IdentitySet&, const IdentitySet&) = default;
};

/// One named policy map: the atomic policies of every location.
struct PolicyVariant {
  std::string name;
  std::vector<std::vector<AtomicPolicy>> by_location;

  friend bool operator==(const PolicyVariant&, const PolicyVariant&) = default;
};

/// Assumption that `foe` is disabled for `action` at `location` whenever
/// somebody who is not the foe's actor is present there.
struct FoeControl {
  LocIndex location = 0;
  Action action = Action::put;
  IdIndex foe = 0;

  friend bool operator==(const FoeControl&, const FoeControl&) = default;
};

/// Immutable problem definition. Build it field by field, then call
/// `finalize` once; every other function expects a finalized model.
struct Model {
  std::string name;
  std::vector<Location> locations;      // ascending id
  std::vector<std::string> identities;  // ascending
  std::vector<IdentitySet> sets;
  InfraGraph initial;
  std::vector<PolicyVariant> variants;
  std::size_t active_variant = 0;
  std::vector<std::vector<std::string>> value_alphabet;  // per location, sorted
  std::vector<InsiderDecl> insiders;
  std::vector<NamedPredicate> predicates;
  std::vector<FoeControl> assumptions;

  ActorResolver resolver;  // derived from insiders by finalize()

  const PolicyVariant& active() const { return variants.at(active_variant); }
  const std::vector<AtomicPolicy>& policies_at(LocIndex l) const {
    return active().by_location.at(l);
  }

  std::optional<LocIndex> find_location(std::string_view name) const;
  std::optional<IdIndex> find_identity(std::string_view name) const;
  LocIndex location(std::string_view name) const;
  IdIndex identity(std::string_view name) const;
  const IdentitySet* find_set(std::string_view name) const;
  const NamedPredicate* find_predicate(std::string_view name) const;
  const std::string& location_name(LocIndex l) const { return locations.at(l).name; }
  const std::string& identity_name(IdIndex i) const { return identities.at(i); }

  ActorClassId actor_of(IdIndex i) const { return resolver.actor_of(i); }

  /// Switches the active policy map; throws ModelError for unknown names.
  void select_variant(std::string_view variant);

  friend bool operator==(const Model&, const Model&) = default;
};

/// Validates cross references and placement invariants, normalizes the
/// initial graph, and computes the actor resolver. Throws ModelError.
void finalize(Model& m);

bool eval_condition(const PolicyCondition& c, const InfraGraph& g, ActorClassId requester,
                    const ActorResolver& resolver);

/// Policy judgment: some atomic policy at `l` grants `a` and its condition
/// holds for `requester`. Active foe-control assumptions override a grant.
bool enables(const Model& m, const InfraGraph& g, LocIndex l, ActorClassId requester, Action a);

/// The same judgment with every assumption ignored.
bool enables_by_policy(const Model& m, const InfraGraph& g, LocIndex l, ActorClassId requester,
                       Action a);

/// Evaluates a state predicate; `binding` substitutes the parameter, if any.
bool eval_predicate(const Model& m, const InfraGraph& g, const StatePredicate& p,
                    std::optional<IdIndex> binding = std::nullopt);

/// Evaluates a parameterless named predicate. Throws CheckError when the
/// name is unknown or the predicate expects an argument.
bool eval_named(const Model& m, const InfraGraph& g, std::string_view name);

/// Non-fatal findings about a model, such as policies that only grant `eval`.
std::vector<std::string> lint(const Model& m);

}  // namespace insider
