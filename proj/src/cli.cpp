#include "insider/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "insider/airplane.hpp"
#include "insider/ctl.hpp"
#include "insider/door.hpp"
#include "insider/format.hpp"
#include "insider/kripke.hpp"

namespace insider {

namespace {

/// Error before evaluation; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report_parse_error(const std::string& path, const ParseError& e, std::ostream& err) {
  for (const auto& d : e.diagnostics()) err << path << ":" << d.str() << "\n";
}

FoeControl parse_assumption(const Model& m, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 4 || parts[0] != "foe")
    throw UsageError("assumption '" + text + "' is not of the form foe:LOC:ACTION:ID");
  auto loc = m.find_location(parts[1]);
  if (!loc) throw UsageError("assumption '" + text + "': unknown location '" + parts[1] + "'");
  auto action = parse_action(parts[2]);
  if (!action) throw UsageError("assumption '" + text + "': unknown action '" + parts[2] + "'");
  auto foe = m.find_identity(parts[3]);
  if (!foe) throw UsageError("assumption '" + text + "': unknown identity '" + parts[3] + "'");
  return {*loc, *action, *foe};
}

struct ModelOptions {
  std::string path;
  std::string variant;
  std::vector<std::string> assumptions;
  std::optional<std::size_t> max_states;
  bool parallel = false;
};

void add_model_options(CLI::App* cmd, ModelOptions& o, bool with_assumptions = true) {
  cmd->add_option("model", o.path, "model file")->required();
  cmd->add_option("--variant", o.variant, "policy variant to activate");
  if (with_assumptions)
    cmd->add_option("--assume", o.assumptions, "assumption foe:LOC:ACTION:ID (repeatable)");
  cmd->add_option("--max-states", o.max_states, "abort beyond this many states");
  cmd->add_flag("--parallel", o.parallel, "use the OpenMP kernels");
}

Model load_model(const ModelOptions& o, std::ostream& err) {
  Model m;
  try {
    m = parse_model(read_file(o.path));
  } catch (const ParseError& e) {
    report_parse_error(o.path, e, err);
    throw UsageError("invalid model file '" + o.path + "'");
  }
  if (!o.variant.empty()) {
    try {
      m.select_variant(o.variant);
    } catch (const ModelError& e) {
      throw UsageError(e.what());
    }
  }
  for (const auto& a : o.assumptions) {
    const FoeControl f = parse_assumption(m, a);
    if (std::find(m.assumptions.begin(), m.assumptions.end(), f) == m.assumptions.end())
      m.assumptions.push_back(f);
  }
  for (const auto& w : lint(m)) err << "warning: " << w << "\n";
  return m;
}

CtlFormula load_formula(const std::string& text, std::ostream& err) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    report_parse_error("<formula>", e, err);
    throw UsageError("invalid formula");
  }
}

/// Evaluates every predicate once on the initial graph so unknown names are
/// reported as usage errors before any exploration.
void resolve_predicates(const Model& m, const CtlFormula& f) {
  if (f.op == CtlFormula::Op::pred) {
    try {
      (void)eval_named(m, m.initial, f.name);
    } catch (const CheckError& e) {
      throw UsageError(e.what());
    }
  }
  for (const auto& a : f.args) resolve_predicates(m, a);
}

KripkeModel explore(const Model& m, const ModelOptions& o) {
  ReachOptions r;
  r.max_states = o.max_states;
  r.exec = o.parallel ? Exec::parallel : Exec::serial;
  return reachable(m, r);
}

EvalOptions eval_options(const ModelOptions& o) {
  EvalOptions e;
  e.exec = o.parallel ? Exec::parallel : Exec::serial;
  return e;
}

int cmd_check(const ModelOptions& o, const std::string& formula_text, bool trace,
              std::ostream& out, std::ostream& err) {
  const Model m = load_model(o, err);
  const CtlFormula f = load_formula(formula_text, err);
  resolve_predicates(m, f);
  const KripkeModel k = explore(m, o);
  const EvalOptions opts = eval_options(o);
  const Verdict v = check(k, f, m, opts);
  out << (v.holds ? "holds" : "fails") << ": " << print_formula(f) << "\n";
  out << "states: " << k.size() << ", satisfying: " << v.sat.count() << "\n";
  if (!v.holds && trace) {
    if (f.op == CtlFormula::Op::ag) {
      const Trace t = extract_trace(k, f, TraceMode::counterexample, m, opts);
      out << "counterexample (length " << t.length() << "):\n" << format_trace(m, k, t);
    } else {
      for (std::size_t i : k.init()) {
        if (v.sat.contains(i)) continue;
        out << "failing initial state:\n"
            << format_trace(m, k, Trace{{i}, {}});
        break;
      }
    }
  }
  return v.holds ? kExitHolds : kExitFails;
}

int cmd_reach(const ModelOptions& o, const std::string& dot_path, std::ostream& out,
              std::ostream& err) {
  const Model m = load_model(o, err);
  const KripkeModel k = explore(m, o);
  out << "states: " << k.size() << "\n";
  out << "edges: " << k.edge_count() << "\n";
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path, std::ios::binary);
    if (!dot) throw UsageError("cannot write '" + dot_path + "'");
    dot << to_dot(m, k);
  }
  return kExitHolds;
}

int cmd_witness(const ModelOptions& o, const std::string& formula_text, std::ostream& out,
                std::ostream& err) {
  const Model m = load_model(o, err);
  const CtlFormula f = load_formula(formula_text, err);
  if (f.op != CtlFormula::Op::ef) throw UsageError("witness expects a formula of the form EF f");
  resolve_predicates(m, f);
  const KripkeModel k = explore(m, o);
  const EvalOptions opts = eval_options(o);
  const Verdict v = check(k, f, m, opts);
  if (!v.holds) {
    out << "no witness: " << print_formula(f) << " fails\n";
    return kExitFails;
  }
  const Trace t = extract_trace(k, f, TraceMode::witness, m, opts);
  out << "witness (length " << t.length() << "):\n" << format_trace(m, k, t);
  return kExitHolds;
}

int cmd_risk(double p0, double p1, double p2, std::ostream& out) {
  airplane::RiskComparison r;
  try {
    r = airplane::risk_compare({p0, p1, p2});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << "one_person: " << format_number(r.one_person) << "\n";
  out << "two_person: " << format_number(r.two_person) << "\n";
  out << "recommend: " << airplane::to_string(r.recommend) << "\n";
  return kExitHolds;
}

int cmd_door(const std::string& path, std::ostream& out, std::ostream& err) {
  std::vector<door::DoorEvent> script;
  try {
    script = parse_door_script(read_file(path));
  } catch (const ParseError& e) {
    report_parse_error(path, e, err);
    throw UsageError("invalid door script '" + path + "'");
  }
  out << format_door_trace(door::door_run(script));
  return kExitHolds;
}

int cmd_export(const std::string& variant, bool as_json, std::ostream& out) {
  auto v = airplane::parse_variant(variant);
  if (!v) throw UsageError("unknown variant '" + variant + "' (baseline or four_eyes)");
  const Model m = airplane::build_model(*v);
  out << (as_json ? model_to_json(m) : serialize_model(m));
  return kExitHolds;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit-state CTL model checker for insider threat models", "insider"};
  app.require_subcommand(1);

  ModelOptions check_opts;
  std::string check_formula;
  bool trace = false;
  auto* check_cmd = app.add_subcommand("check", "check a CTL formula on every initial state");
  add_model_options(check_cmd, check_opts);
  check_cmd->add_option("formula", check_formula, "CTL formula")->required();
  check_cmd->add_flag("--trace", trace, "print a counterexample when the check fails");

  ModelOptions reach_opts;
  std::string dot_path;
  auto* reach_cmd = app.add_subcommand("reach", "explore the reachable state space");
  add_model_options(reach_cmd, reach_opts);
  reach_cmd->add_option("--dot", dot_path, "write the state space as Graphviz");

  ModelOptions witness_opts;
  std::string witness_formula;
  auto* witness_cmd = app.add_subcommand("witness", "shortest path witnessing EF f");
  add_model_options(witness_cmd, witness_opts);
  witness_cmd->add_option("formula", witness_formula, "formula of the form EF f")->required();

  double p0 = 0, p1 = 0, p2 = 0;
  auto* risk_cmd = app.add_subcommand("risk", "compare one-person and two-person cockpit rules");
  risk_cmd->add_option("--p0", p0, "probability that a pilot is an insider")->required();
  risk_cmd->add_option("--p1", p1, "probability of a terrorist entry, one-person rule")
      ->required();
  risk_cmd->add_option("--p2", p2, "probability of a terrorist entry, two-person rule")
      ->required();

  std::string script_path;
  auto* door_cmd = app.add_subcommand("door-sim", "run a cockpit door script");
  door_cmd->add_option("script", script_path, "door script file")->required();

  auto* scenario_cmd = app.add_subcommand("scenario", "built-in airplane scenario");
  scenario_cmd->require_subcommand(1);
  std::string export_variant;
  bool export_json = false;
  auto* export_cmd = scenario_cmd->add_subcommand("export", "print the scenario model file");
  export_cmd->add_option("variant", export_variant, "baseline or four_eyes")->required();
  export_cmd->add_flag("--json", export_json, "print the JSON form instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(check_opts, check_formula, trace, out, err);
    if (reach_cmd->parsed()) return cmd_reach(reach_opts, dot_path, out, err);
    if (witness_cmd->parsed()) return cmd_witness(witness_opts, witness_formula, out, err);
    if (risk_cmd->parsed()) return cmd_risk(p0, p1, p2, out);
    if (door_cmd->parsed()) return cmd_door(script_path, out, err);
    if (export_cmd->parsed()) return cmd_export(export_variant, export_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CheckError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace insider
