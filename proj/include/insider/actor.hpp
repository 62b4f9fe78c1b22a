#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "insider/types.hpp"

namespace insider {

enum class PsyState { happy, depressed, disgruntled, angry, stressed };

enum class Motivation {
  financial,
  political,
  revenge,
  curious,
  competitive_advantage,
  power,
  peer_recognition,
};

std::string_view to_string(PsyState p);
std::string_view to_string(Motivation m);
std::optional<PsyState> parse_psy_state(std::string_view text);
std::optional<Motivation> parse_motivation(std::string_view text);

struct ActorPsyState {
  PsyState psy = PsyState::happy;
  std::set<Motivation> motivations;

  friend bool operator==(const ActorPsyState&, const ActorPsyState&) = default;
};

/// True once an actor has motives and is no longer happy.
bool tipping_point(const ActorPsyState& s);

struct InsiderDecl {
  std::string id;
  std::vector<std::string> alter_egos;  // sorted, unique
  ActorPsyState state;

  friend bool operator==(const InsiderDecl&, const InsiderDecl&) = default;
};

/// Partition of the identity universe. Identities of one class are
/// indistinguishable to policies: an active insider and each of its alter
/// egos map to the same actor.
class ActorResolver {
 public:
  ActorResolver() = default;
  explicit ActorResolver(std::size_t identity_count);

  ActorClassId actor_of(IdIndex id) const { return {class_of_.at(id)}; }
  bool same_actor(IdIndex a, IdIndex b) const { return class_of_.at(a) == class_of_.at(b); }
  std::size_t identity_count() const { return class_of_.size(); }

  /// All identities in the class, ascending.
  const std::vector<IdIndex>& members(ActorClassId c) const { return members_.at(c.representative); }

  void merge(IdIndex a, IdIndex b);

  friend bool operator==(const ActorResolver&, const ActorResolver&) = default;

 private:
  void rebuild_members();

  std::vector<IdIndex> class_of_;
  std::vector<std::vector<IdIndex>> members_;
};

/// Builds the resolver for `identities` (sorted). Only insiders past their
/// tipping point are identified with their alter egos; everything else stays
/// a singleton class.
ActorResolver build_resolver(const std::vector<InsiderDecl>& insiders,
                             const std::vector<std::string>& identities);

}  // namespace insider
