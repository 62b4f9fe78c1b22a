#include <doctest.h>

#include <random>

#include "insider/airplane.hpp"
#include "insider/ctl.hpp"
#include "insider/kripke.hpp"
#include "oracle.hpp"
#include "random_model.hpp"

using namespace insider;

namespace {

// Library and oracle agree on the state set and on every successor set.
void require_same_space(const Model& m) {
  const KripkeModel k = reachable(m);
  const oracle::Oracle o(m);
  const auto sp = o.explore();
  REQUIRE(k.size() == sp.states.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    const auto key = oracle::from_graph(m, k.graph(i)).key();
    auto it = sp.index.find(key);
    REQUIRE(it != sp.index.end());
    std::set<std::string> lib_post, oracle_post;
    for (auto j : k.post(i)) lib_post.insert(oracle::from_graph(m, k.graph(j)).key());
    for (auto j : sp.post[it->second]) oracle_post.insert(sp.states[j].key());
    REQUIRE(lib_post == oracle_post);
  }
}

void require_ef_matches(const Model& m, const std::string& pred) {
  const KripkeModel k = reachable(m);
  const oracle::Oracle o(m);
  const auto sp = o.explore();
  std::set<std::size_t> target;
  for (std::size_t i = 0; i < sp.states.size(); ++i)
    if (o.predicate(sp.states[i], pred)) target.insert(i);
  const auto expected = o.backward_ef(sp, target);
  const StateSet ef = eval_ctl(k, CtlFormula::unary(CtlFormula::Op::ef, CtlFormula::pred(pred)), m);
  for (std::size_t i = 0; i < k.size(); ++i) {
    const auto j = sp.index.at(oracle::from_graph(m, k.graph(i)).key());
    REQUIRE(ef.contains(i) == (expected.count(j) > 0));
  }
}

}  // namespace

TEST_CASE("airplane state spaces match the brute-force oracle") {
  const Model base = airplane::build_model(airplane::Variant::baseline);
  const Model four = airplane::build_model(airplane::Variant::four_eyes);
  require_same_space(base);
  require_same_space(four);
  // Frozen from the oracle.
  CHECK(reachable(base).size() == 243);
  CHECK(reachable(four).size() == 21);
  for (const char* p : {"eve_ok", "eve_violates", "door_locked", "grounded", "two_person"}) {
    require_ef_matches(base, p);
    require_ef_matches(four, p);
  }
}

TEST_CASE("random models match the brute-force oracle") {
  std::mt19937_64 rng(20240611);
  for (int n = 0; n < 100; ++n) {
    CAPTURE(n);
    const Model m = testing_support::random_model(rng);
    require_same_space(m);
    for (const char* p : {"p0", "p1", "p2"}) require_ef_matches(m, p);
  }
}
