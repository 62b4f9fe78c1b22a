#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "insider/types.hpp"

namespace insider {

/// Snapshot of the infrastructure: location graph, who is where, who holds
/// which credentials and roles, and the value slot of each location.
///
/// Indices refer to the owning model's location and identity tables. All
/// vectors are kept in canonical order (see `normalize`), so two graphs with
/// the same observable content compare equal.
struct InfraGraph {
  std::vector<std::pair<LocIndex, LocIndex>> edges;
  std::vector<std::vector<IdIndex>> placements;       // per location
  std::vector<std::vector<std::string>> credentials;  // per identity
  std::vector<std::vector<std::string>> roles;        // per identity
  std::vector<std::optional<std::string>> values;     // per location

  friend bool operator==(const InfraGraph&, const InfraGraph&) = default;
};

/// Sorts and deduplicates every component.
void normalize(InfraGraph& g);

bool is_at(const InfraGraph& g, IdIndex who, LocIndex where);
std::optional<LocIndex> location_of(const InfraGraph& g, IdIndex who);

/// Locations touching at least one edge.
std::vector<LocIndex> nodes(const InfraGraph& g);

/// Identities placed at some graph node, ascending.
std::vector<IdIndex> actors_graph(const InfraGraph& g);

/// Every identity occurs at most once overall: at most one location, and at
/// most once within it.
bool placements_unique(const InfraGraph& g);

bool has_token(const std::vector<std::string>& sorted_tokens, const std::string& token);
void insert_token(std::vector<std::string>& sorted_tokens, std::string token);

/// Moves `who` from `from` to `to` when it is at `from` and not yet at `to`;
/// returns `g` unchanged otherwise.
InfraGraph move_graph(IdIndex who, LocIndex from, LocIndex to, const InfraGraph& g);

}  // namespace insider
