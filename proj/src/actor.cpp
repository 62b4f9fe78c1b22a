#include "insider/actor.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace insider {

namespace {

constexpr std::array<std::string_view, 5> kPsyNames = {"happy", "depressed", "disgruntled",
                                                       "angry", "stressed"};
constexpr std::array<std::string_view, 7> kMotivationNames = {
    "financial", "political", "revenge", "curious", "competitive_advantage", "power",
    "peer_recognition"};

}  // namespace

std::string_view to_string(PsyState p) { return kPsyNames.at(static_cast<std::size_t>(p)); }

std::string_view to_string(Motivation m) {
  return kMotivationNames.at(static_cast<std::size_t>(m));
}

std::optional<PsyState> parse_psy_state(std::string_view text) {
  for (std::size_t i = 0; i < kPsyNames.size(); ++i)
    if (kPsyNames[i] == text) return static_cast<PsyState>(i);
  return std::nullopt;
}

std::optional<Motivation> parse_motivation(std::string_view text) {
  for (std::size_t i = 0; i < kMotivationNames.size(); ++i)
    if (kMotivationNames[i] == text) return static_cast<Motivation>(i);
  return std::nullopt;
}

bool tipping_point(const ActorPsyState& s) {
  return !s.motivations.empty() && s.psy != PsyState::happy;
}

ActorResolver::ActorResolver(std::size_t identity_count) : class_of_(identity_count) {
  std::iota(class_of_.begin(), class_of_.end(), IdIndex{0});
  rebuild_members();
}

void ActorResolver::merge(IdIndex a, IdIndex b) {
  IdIndex ra = class_of_.at(a);
  IdIndex rb = class_of_.at(b);
  if (ra == rb) return;
  IdIndex keep = std::min(ra, rb);
  IdIndex drop = std::max(ra, rb);
  for (auto& c : class_of_)
    if (c == drop) c = keep;
  rebuild_members();
}

void ActorResolver::rebuild_members() {
  members_.assign(class_of_.size(), {});
  for (IdIndex i = 0; i < class_of_.size(); ++i) members_[class_of_[i]].push_back(i);
}

ActorResolver build_resolver(const std::vector<InsiderDecl>& insiders,
                             const std::vector<std::string>& identities) {
  auto index_of = [&](const std::string& name) {
    auto it = std::lower_bound(identities.begin(), identities.end(), name);
    if (it == identities.end() || *it != name)
      throw ModelError("unknown identity '" + name + "' in insider declaration");
    return static_cast<IdIndex>(it - identities.begin());
  };

  ActorResolver resolver(identities.size());
  for (const auto& decl : insiders) {
    IdIndex self = index_of(decl.id);
    for (const auto& ego : decl.alter_egos) {
      IdIndex other = index_of(ego);
      if (other == self)
        throw ModelError("insider '" + decl.id + "' lists itself as an alter ego");
    }
    if (!tipping_point(decl.state)) continue;
    for (const auto& ego : decl.alter_egos) resolver.merge(self, index_of(ego));
  }
  return resolver;
}

}  // namespace insider
