#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "insider/airplane.hpp"
#include "insider/cli.hpp"
#include "insider/format.hpp"
#include "random_model.hpp"

using namespace insider;
using Op = CtlFormula::Op;

namespace {

std::string data(const std::string& name) { return std::string(INSIDER_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Diagnostic> diagnostics_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.diagnostics();
  }
  return {};
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kMinimal = R"([locations]
hall 0
[identities]
ann
)";

}  // namespace

TEST_CASE("golden airplane model file") {
  const std::string text = slurp(data("airplane.model"));
  const Model parsed = parse_model(text);
  const Model built = airplane::build_model(airplane::Variant::baseline);
  CHECK(parsed.locations == built.locations);
  CHECK(parsed.identities == built.identities);
  CHECK(parsed.sets == built.sets);
  CHECK(parsed.initial == built.initial);
  CHECK(parsed.variants == built.variants);
  CHECK(parsed.value_alphabet == built.value_alphabet);
  CHECK(parsed.insiders == built.insiders);
  CHECK(parsed.predicates == built.predicates);
  CHECK(parsed.resolver == built.resolver);
  CHECK(parsed == built);
  CHECK(serialize_model(built) == text);
  CHECK(run({"scenario", "export", "baseline"}).out == text);
}

TEST_CASE("model diagnostics") {
  SUBCASE("identity placed in two locations") {
    const auto ds = diagnostics_of(std::string(kMinimal) +
                                   "[placements]\nhall = ann\nhall = ann\n");
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].line == 7);
    CHECK(ds[0].column == 8);
    CHECK(ds[0].message.find("'ann' placed twice") != std::string::npos);
    CHECK(ds[0].message.find("at most one location") != std::string::npos);
  }
  SUBCASE("empty document") {
    const auto ds = diagnostics_of("");
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].message.find("at least one location") != std::string::npos);
  }
  SUBCASE("unknown location and action, all reported in order") {
    const auto ds = diagnostics_of(std::string(kMinimal) +
                                   "[policies main]\nroof : true -> {move}\nhall : true -> {fly}\n");
    REQUIRE(ds.size() == 2);
    CHECK(ds[0].str() == "6:1: unknown location 'roof'");
    CHECK(ds[1].str() == "7:17: unknown action 'fly'");
  }
  SUBCASE("syntax errors carry positions") {
    auto ds = diagnostics_of(std::string(kMinimal) + "[policies main]\nhall : at(hall -> {move}\n");
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].str() == "6:16: expected ')'");
    ds = diagnostics_of("hall 0\n");
    REQUIRE(!ds.empty());
    CHECK(ds[0].message == "content outside a section");
    ds = diagnostics_of("[rooms]\n");
    REQUIRE(ds.size() == 2);
    CHECK(ds[1].str() == "1:2: unknown section 'rooms'");
    ds = diagnostics_of(std::string(kMinimal) + "[predicates]\np := q\n");
    CHECK(ds[0].str() == "6:6: unknown predicate 'q'");
  }
  SUBCASE("minimal model") {
    const Model m = parse_model(kMinimal);
    CHECK(m.locations.size() == 1);
    CHECK(m.active().name == "default");
    CHECK(parse_model(serialize_model(m)) == m);
  }
}

TEST_CASE("quoted tokens survive a round trip") {
  Model m = parse_model(kMinimal);
  m.locations[0].name = "main-hall";
  m.initial.values[0] = "a\"b";
  m.predicates.push_back({"true", std::nullopt, StatePredicate::constant(true)});
  m.predicates.push_back({"t", std::nullopt, StatePredicate::call("true")});
  finalize(m);
  const std::string text = serialize_model(m);
  CHECK(text.find("\"main-hall\" 0") != std::string::npos);
  CHECK(parse_model(text) == m);
}

TEST_CASE("property: model round trip") {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 100; ++n) {
    const Model m = testing_support::random_model(rng);
    const std::string text = serialize_model(m);
    const Model back = parse_model(text);
    CHECK(back == m);
    CHECK(serialize_model(back) == text);
  }
  for (auto v : {airplane::Variant::baseline, airplane::Variant::four_eyes}) {
    const Model m = airplane::build_model(v);
    CHECK(parse_model(serialize_model(m)) == m);
  }
}

TEST_CASE("JSON export") {
  const Model m = airplane::build_model(airplane::Variant::baseline);
  const auto j = nlohmann::json::parse(model_to_json(m));
  CHECK(j["name"] == "airplane");
  CHECK(j["locations"].size() == 3);
  CHECK(j["placements"]["cockpit"] == nlohmann::json({"Bob", "Charly"}));
  CHECK(j["policies"]["four_eyes"].size() == 4);
  CHECK(j["active"] == "baseline");
  CHECK(j["insiders"][0]["alter_egos"] == nlohmann::json({"Charly"}));
  CHECK(run({"scenario", "export", "baseline", "--json"}).out == model_to_json(m));
}

TEST_CASE("formula parsing") {
  using F = CtlFormula;
  CHECK(parse_formula("AG eve_ok") == F::unary(Op::ag, F::pred("eve_ok")));
  CHECK(parse_formula("EF !eve_ok") == F::unary(Op::ef, F::neg(F::pred("eve_ok"))));
  CHECK(parse_formula("A[p U q] & EX r") ==
        F::conj(F::binary(Op::au, F::pred("p"), F::pred("q")), F::unary(Op::ex, F::pred("r"))));
  CHECK(parse_formula("a | b & c") == F::disj(F::pred("a"), F::conj(F::pred("b"), F::pred("c"))));
  CHECK(parse_formula("!a & b") == F::conj(F::neg(F::pred("a")), F::pred("b")));
  CHECK(parse_formula("EX a | b") == F::disj(F::unary(Op::ex, F::pred("a")), F::pred("b")));
  CHECK(parse_formula("E[a R (b | c)]") ==
        F::binary(Op::er, F::pred("a"), F::disj(F::pred("b"), F::pred("c"))));
  CHECK(parse_formula("a & b & c") == F::conj(F::conj(F::pred("a"), F::pred("b")), F::pred("c")));

  auto error = [](const std::string& text) {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      return e.diagnostics().at(0).str();
    }
    return std::string("no error");
  };
  CHECK(error("") == "1:1: empty formula");
  CHECK(error("AG") == "1:3: expected a formula");
  CHECK(error("E[a X b]") == "1:5: expected 'U' or 'R'");
  CHECK(error("a b") == "1:3: unexpected 'b'");
  CHECK(error("(a") == "1:3: expected ')'");
  CHECK(error("a $ b") == "1:3: unexpected character '$'");
}

TEST_CASE("property: formula round trip") {
  std::mt19937_64 rng(37);
  for (int n = 0; n < 1000; ++n) {
    const CtlFormula f = testing_support::random_formula(rng, 5);
    const std::string text = print_formula(f);
    CAPTURE(text);
    CHECK(parse_formula(text) == f);
  }
  CHECK(print_formula(parse_formula("A[p U q] & EX r")) == "A[p U q] & EX r");
  CHECK(print_formula(parse_formula("(a | b) & (c & d)")) == "(a | b) & (c & d)");
  CHECK(print_formula(CtlFormula::pred("EF")) == "\"EF\"");
}

TEST_CASE("door scripts") {
  const auto events = parse_door_script("# comment\npin_ok\n\nwait 2.5\nlock\nunlock\npin_bad\n");
  REQUIRE(events.size() == 5);
  CHECK(events[1] == door::DoorEvent::wait(2.5));
  try {
    parse_door_script("pin_ok\nwait -1\nopen\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    REQUIRE(e.diagnostics().size() == 2);
    CHECK(e.diagnostics()[0].str() == "2:6: unexpected character '-'");
    CHECK(e.diagnostics()[1].str() == "3:1: unknown door event 'open'");
  }
  CHECK_THROWS_AS(parse_door_script("wait 0\n"), ParseError);

  const std::string tsv = format_door_trace(door::door_run(parse_door_script("pin_ok\nwait 30\n")));
  CHECK(tsv ==
        "step\tevent\tmode\tclock\tpin_timer\topen\n"
        "1\tpin_ok\tNormal\t0\t0\tno\n"
        "2\twait 30\tNormal\t30\t30\tyes\n");
}

TEST_CASE("DOT export") {
  const Model m = airplane::build_model(airplane::Variant::four_eyes);
  const KripkeModel k = reachable(m);
  const std::string dot = to_dot(m, k);
  CHECK(dot.rfind("digraph kripke {", 0) == 0);
  CHECK(dot.find("s0 [label=\"s0\\ncabin{Alice} door{} cockpit{Bob,Charly} door=norm "
                 "cockpit=air\", peripheries=2];") != std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t p = dot.find(" -> s"); p != std::string::npos; p = dot.find(" -> s", p + 1))
    ++arrows;
  CHECK(arrows == k.edge_count());
  CHECK(to_dot(m, k) == dot);
}

TEST_CASE("command line exit codes") {
  const std::string model = data("airplane.model");

  auto r = run({"check", model, "AG eve_ok", "--variant", "four_eyes", "--assume",
                "foe:cockpit:put:Eve"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("holds: AG eve_ok\n", 0) == 0);

  r = run({"check", model, "AG eve_ok", "--variant", "four_eyes", "--trace"});
  CHECK(r.code == 1);
  CHECK(r.out.find("counterexample (length 0)") != std::string::npos);

  r = run({"check", model, "EF eve_violates"});
  CHECK(r.code == 0);

  r = run({"witness", model, "EF door_locked"});
  CHECK(r.code == 0);
  CHECK(r.out.find("witness (length 1)") != std::string::npos);
  CHECK(run({"witness", model, "AG door_locked"}).code == 2);

  r = run({"risk", "--p0", "0", "--p1", "0", "--p2", "0.1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("recommend: one_person") != std::string::npos);
  CHECK(run({"risk", "--p0", "2", "--p1", "0", "--p2", "0"}).code == 2);

  r = run({"door-sim", data("door_open.script")});
  CHECK(r.code == 0);
  CHECK(r.out.find("wait 30\tNormal\t30\t30\tyes") != std::string::npos);

  r = run({"reach", model, "--max-states", "5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("cap of 5 states") != std::string::npos);
  CHECK(run({"reach", model}).out == "states: 243\nedges: 4212\n");

  // Errors before evaluation.
  CHECK(run({}).code == 2);
  CHECK(run({"check", model}).code == 2);
  CHECK(run({"check", "/nonexistent.model", "AG eve_ok"}).code == 2);
  CHECK(run({"check", model, "AG (eve_ok"}).code == 2);
  CHECK(run({"check", model, "AG no_such_predicate"}).code == 2);
  CHECK(run({"check", model, "AG eve_ok", "--variant", "six_eyes"}).code == 2);
  CHECK(run({"check", model, "AG eve_ok", "--assume", "foe:cockpit:fly:Eve"}).code == 2);
  CHECK(run({"check", model, "AG eve_ok", "--assume", "cockpit:put:Eve"}).code == 2);
  CHECK(run({"scenario", "export", "six_eyes"}).code == 2);
  CHECK(run({"door-sim", model}).code == 2);
  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check") != std::string::npos);
}
