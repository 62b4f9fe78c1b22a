#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "insider/ctl.hpp"
#include "insider/diagnostic.hpp"
#include "insider/door.hpp"
#include "insider/kripke.hpp"
#include "insider/model.hpp"

namespace insider {

// Model files. The grammar is documented in docs/formats.md.

/// Parses and finalizes a model document. Throws ParseError with every
/// diagnostic found, sorted by position.
Model parse_model(std::string_view text);

/// Canonical text form; parse_model(serialize_model(m)) == m.
std::string serialize_model(const Model& m);

/// The same schema as JSON, keys in document order.
std::string model_to_json(const Model& m);

std::string print_condition(const Model& m, const PolicyCondition& c);
std::string print_predicate(const Model& m, const StatePredicate& p);

// CTL formulas.

/// Throws ParseError on syntax errors. Predicate names are resolved only
/// at evaluation time.
CtlFormula parse_formula(std::string_view text);

/// Minimal-parenthesis rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const CtlFormula& f);

// Door scripts: one event per line (lock, unlock, pin_ok, pin_bad, wait SECONDS).

std::vector<door::DoorEvent> parse_door_script(std::string_view text);

/// Tab-separated trace with a header row.
std::string format_door_trace(const std::vector<door::TraceRow>& rows);

/// Shortest decimal form that reads back to the same double.
std::string format_number(double x);

// Reports.

/// One-line summary of a state: placements, values, and any credentials or
/// roles that differ from the initial graph.
std::string describe_state(const Model& m, const InfraGraph& g);

/// Numbered state lines joined by the labels of the rule applications.
std::string format_trace(const Model& m, const KripkeModel& k, const Trace& t);

/// Graphviz rendering of the reachable state space.
std::string to_dot(const Model& m, const KripkeModel& k);

}  // namespace insider
