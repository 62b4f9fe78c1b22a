#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "insider/graph.hpp"

namespace insider {

/// Canonical byte encoding of an InfraGraph. The policy map is not part of
/// it: transitions never change the policy, so it lives in the Model.
struct State {
  std::string bytes;

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;
};

/// Equal iff the graphs agree on edges, placements as sets, credentials,
/// roles and location values.
State encode(const InfraGraph& g);

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    return std::hash<std::string>{}(s.bytes);
  }
};

}  // namespace insider
