#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "insider/model.hpp"
#include "insider/state.hpp"
#include "insider/state_set.hpp"
#include "insider/transition.hpp"

namespace insider {

/// Selects the serial reference kernel or the OpenMP one. Both produce
/// identical results; the serial path is kept for testing.
enum class Exec { serial, parallel };

struct ReachOptions {
  std::optional<std::size_t> max_states;
  Exec exec = Exec::serial;
};

struct Edge {
  TransitionLabel label;
  std::size_t target = 0;
};

/// Reachable state space of a model. States are indexed in breadth-first
/// discovery order from the initial state; every state is reachable, so the
/// state set is closed under the transition relation.
class KripkeModel {
 public:
  std::size_t size() const { return graphs_.size(); }
  const InfraGraph& graph(std::size_t i) const { return graphs_.at(i); }
  const std::vector<InfraGraph>& graphs() const { return graphs_; }

  /// Labelled edges out of `i` in successor order (duplicates kept).
  const std::vector<Edge>& edges(std::size_t i) const { return edges_.at(i); }
  /// Distinct successor indices of `i`, ascending.
  const std::vector<std::size_t>& post(std::size_t i) const { return post_.at(i); }
  /// Distinct predecessor indices of `i`, ascending.
  const std::vector<std::size_t>& pre(std::size_t i) const { return pre_.at(i); }

  const std::vector<std::size_t>& init() const { return init_; }
  StateSet init_set() const;
  StateSet all() const { return StateSet(size(), true); }

  std::size_t edge_count() const;
  std::optional<std::size_t> find(const InfraGraph& g) const;

  friend KripkeModel reachable(const Model& m, const ReachOptions& options);

 private:
  std::size_t add_state(InfraGraph g, State key);
  void finish();

  std::vector<InfraGraph> graphs_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::vector<std::size_t>> post_;
  std::vector<std::vector<std::size_t>> pre_;
  std::vector<std::size_t> init_;
  std::unordered_map<State, std::size_t, StateHash> index_;
};

/// Breadth-first closure of `successors` from the model's initial graph.
/// Throws CheckError when the state cap is exceeded.
KripkeModel reachable(const Model& m, const ReachOptions& options = {});

/// Existential pre-image: states with some successor in `z`.
StateSet pre_exists(const KripkeModel& k, const StateSet& z, Exec exec = Exec::serial);

/// Universal pre-image: states whose successors all lie in `z`. Vacuously
/// true for states without successors.
StateSet pre_forall(const KripkeModel& k, const StateSet& z, Exec exec = Exec::serial);

}  // namespace insider
