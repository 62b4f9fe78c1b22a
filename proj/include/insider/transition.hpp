#pragma once

#include <compare>
#include <string>
#include <vector>

#include "insider/graph.hpp"
#include "insider/model.hpp"

namespace insider {

enum class Rule : std::uint8_t { move, get, put, put_remote };

std::string_view to_string(Rule r);

/// Which rule fired and with which parameters.
///
/// - move: `actor` goes from `from` to `to`.
/// - get: `actor`, holding `token`, hands it to `recipient`; both at `from`.
/// - put / put_remote: `actor` sets the value of `from` to `token`.
struct TransitionLabel {
  Rule rule = Rule::move;
  IdIndex actor = 0;
  LocIndex from = 0;
  LocIndex to = 0;
  IdIndex recipient = 0;
  std::string token;

  friend auto operator<=>(const TransitionLabel&, const TransitionLabel&) = default;
  friend bool operator==(const TransitionLabel&, const TransitionLabel&) = default;
};

std::string describe(const Model& m, const TransitionLabel& label);

struct Successor {
  TransitionLabel label;
  InfraGraph graph;
};

/// Every rule instance enabled in `g`, in the order move < get < put <
/// put_remote, then by identity, location and value. Self-loops included.
std::vector<Successor> successors(const Model& m, const InfraGraph& g);

}  // namespace insider
