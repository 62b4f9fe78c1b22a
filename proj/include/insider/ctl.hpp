#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "insider/kripke.hpp"
#include "insider/model.hpp"
#include "insider/state_set.hpp"

namespace insider {

/// CTL formula over named state predicates.
struct CtlFormula {
  enum class Op { pred, neg, conj, disj, ex, ax, ef, af, eg, ag, eu, au, er, ar };

  Op op = Op::pred;
  std::string name;  // for pred
  std::vector<CtlFormula> args;

  static CtlFormula pred(std::string name);
  static CtlFormula neg(CtlFormula f);
  static CtlFormula conj(CtlFormula a, CtlFormula b);
  static CtlFormula disj(CtlFormula a, CtlFormula b);
  static CtlFormula unary(Op op, CtlFormula f);
  static CtlFormula binary(Op op, CtlFormula a, CtlFormula b);

  friend bool operator==(const CtlFormula&, const CtlFormula&) = default;
};

using SetTransformer = std::function<StateSet(const StateSet&)>;

struct FixpointResult {
  StateSet set;
  std::size_t iterations = 0;    // applications of the transformer
  bool monotone_chain = true;    // every iterate contained in (lfp) / containing (gfp) the next
};

/// Least fixpoint by iteration from the empty set. Throws CheckError when no
/// fixpoint is reached within universe + 1 steps.
FixpointResult lfp_iterate(const SetTransformer& t, std::size_t universe);

/// Greatest fixpoint by iteration from the full universe.
FixpointResult gfp_iterate(const SetTransformer& t, std::size_t universe);

/// Samples up to `samples` pairs p ⊆ q and verifies t(p) ⊆ t(q).
bool spot_check_monotone(const SetTransformer& t, std::size_t universe, std::size_t samples,
                         std::uint64_t seed);

struct EvalOptions {
  Exec exec = Exec::serial;
#ifdef NDEBUG
  bool check_monotone = false;
  bool check_duality = false;
#else
  bool check_monotone = true;
  bool check_duality = true;
#endif
};

struct FixpointRecord {
  CtlFormula::Op op;
  bool least = true;
  std::size_t iterations = 0;
  bool monotone_chain = true;
};

/// Diagnostics gathered during an evaluation.
struct EvalStats {
  std::vector<FixpointRecord> fixpoints;
  std::size_t duality_checks = 0;
};

/// Exact set of states satisfying `f`. Throws CheckError for unknown
/// predicates and, with the debug checks on, for failed sanity checks.
StateSet eval_ctl(const KripkeModel& k, const CtlFormula& f, const Model& m,
                  const EvalOptions& options = {}, EvalStats* stats = nullptr);

struct Verdict {
  bool holds = false;
  StateSet sat;
};

/// Holds iff every initial state satisfies `f`.
Verdict check(const KripkeModel& k, const CtlFormula& f, const Model& m,
              const EvalOptions& options = {}, EvalStats* stats = nullptr);

/// A labelled path through the Kripke model; `labels[i]` leads from
/// `states[i]` to `states[i + 1]`.
struct Trace {
  std::vector<std::size_t> states;
  std::vector<TransitionLabel> labels;

  std::size_t length() const { return labels.size(); }
};

enum class TraceMode { witness, counterexample };

/// Shortest path from an initial state into `target`. Ties go to the lower
/// state index, then to the earlier edge.
std::optional<Trace> shortest_path(const KripkeModel& k, const StateSet& target);

/// Witness for `EF g` (path into sat(g)) or counterexample for `AG g` (path
/// out of sat(g)). Throws CheckError on shape or verdict mismatch.
Trace extract_trace(const KripkeModel& k, const CtlFormula& f, TraceMode mode, const Model& m,
                    const EvalOptions& options = {});

}  // namespace insider
