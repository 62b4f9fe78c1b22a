#include "random_model.hpp"

#include <algorithm>

namespace testing_support {

using namespace insider;

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

const std::vector<std::string> kValues = {"v0", "v1"};
const std::vector<std::string> kCreds = {"c0", "c1"};

PolicyCondition random_condition(std::mt19937_64& rng, const Model& m, int depth) {
  using C = PolicyCondition;
  const std::size_t nloc = m.locations.size();
  const std::size_t choice = pick(rng, depth > 0 ? 10 : 7);
  switch (choice) {
    case 0:
      return C::always();
    case 1:
      return C::requester_at(pick(rng, nloc));
    case 2:
      return C::has_cred(kCreds[pick(rng, 2)]);
    case 3:
      return C::has_role("r0");
    case 4:
      return C::is_in(pick(rng, nloc), kValues[pick(rng, 2)]);
    case 5:
      return C::count_at_least(pick(rng, nloc), pick(rng, 3));
    case 6: {
      std::vector<IdIndex> allowed;
      for (IdIndex i = 0; i < m.identities.size(); ++i)
        if (coin(rng)) allowed.push_back(i);
      return C::all_at_authorized(pick(rng, nloc), allowed);
    }
    case 7:
      return C::neg(random_condition(rng, m, depth - 1));
    case 8:
      return C::conj({random_condition(rng, m, depth - 1), random_condition(rng, m, depth - 1)});
    default:
      return C::disj({random_condition(rng, m, depth - 1), random_condition(rng, m, depth - 1)});
  }
}

StatePredicate random_predicate(std::mt19937_64& rng, const Model& m, int depth,
                                bool with_param, bool allow_calls) {
  using P = StatePredicate;
  const std::size_t nloc = m.locations.size();
  auto who = [&] {
    if (with_param && coin(rng)) return IdentityArg::parameter("x");
    return IdentityArg::of(pick(rng, m.identities.size()));
  };
  const std::size_t choice = pick(rng, depth > 0 ? 10 : 7);
  switch (choice) {
    case 0:
      return P::constant(coin(rng));
    case 1: {
      static const Action actions[] = {Action::get, Action::move, Action::put};
      return P::enables(pick(rng, nloc), who(), actions[pick(rng, 3)]);
    }
    case 2:
      return P::at(who(), pick(rng, nloc));
    case 3:
      return P::is_in(pick(rng, nloc), kValues[pick(rng, 2)]);
    case 4:
      return P::count_at_least(pick(rng, nloc), pick(rng, 3));
    case 5:
      return P::in_set(who(), "s");
    case 6:
      if (allow_calls) return P::call("q", who());
      return P::at(who(), pick(rng, nloc));
    case 7:
      return P::neg(random_predicate(rng, m, depth - 1, with_param, allow_calls));
    case 8:
      return P::conj({random_predicate(rng, m, depth - 1, with_param, allow_calls),
                      random_predicate(rng, m, depth - 1, with_param, allow_calls)});
    default:
      return P::disj({random_predicate(rng, m, depth - 1, with_param, allow_calls),
                      random_predicate(rng, m, depth - 1, with_param, allow_calls)});
  }
}

}  // namespace

Model random_model(std::mt19937_64& rng) {
  Model m;
  m.name = "random";
  const std::size_t nloc = 1 + pick(rng, 4);
  const std::size_t nid = 1 + pick(rng, 4);
  for (std::size_t l = 0; l < nloc; ++l)
    m.locations.push_back({static_cast<std::uint32_t>(l * 2 + pick(rng, 2)), "l" + std::to_string(l)});
  for (std::size_t i = 0; i < nid; ++i) m.identities.push_back("i" + std::to_string(i));

  auto& g = m.initial;
  g.placements.assign(nloc, {});
  g.values.assign(nloc, std::nullopt);
  g.credentials.assign(nid, {});
  g.roles.assign(nid, {});
  m.value_alphabet.assign(nloc, {});

  for (std::size_t a = 0; a < nloc; ++a)
    for (std::size_t b = 0; b < nloc; ++b)
      if (coin(rng, 0.4)) g.edges.emplace_back(a, b);
  if (g.edges.empty()) g.edges.emplace_back(0, nloc - 1);

  for (IdIndex i = 0; i < nid; ++i) {
    if (coin(rng, 0.8)) g.placements[pick(rng, nloc)].push_back(i);
    if (coin(rng, 0.5)) g.credentials[i].push_back(kCreds[pick(rng, 2)]);
    if (coin(rng, 0.3)) g.roles[i].push_back("r0");
  }
  for (LocIndex l = 0; l < nloc; ++l) {
    const std::size_t size = pick(rng, 3);
    for (std::size_t v = 0; v < size; ++v) m.value_alphabet[l].push_back(kValues[v]);
    if (coin(rng)) g.values[l] = kValues[pick(rng, 2)];
  }

  IdentitySet s{"s", {}};
  for (IdIndex i = 0; i < nid; ++i)
    if (coin(rng)) s.members.push_back(i);
  m.sets.push_back(s);

  const std::size_t nvariants = 1 + pick(rng, 2);
  for (std::size_t v = 0; v < nvariants; ++v) {
    PolicyVariant pv{"v" + std::to_string(v), std::vector<std::vector<AtomicPolicy>>(nloc)};
    for (LocIndex l = 0; l < nloc; ++l) {
      const std::size_t count = pick(rng, 3);
      for (std::size_t k = 0; k < count; ++k) {
        ActionSet actions;
        for (Action a : {Action::get, Action::move, Action::eval, Action::put})
          if (coin(rng, 0.4)) actions.insert(a);
        if (actions.empty()) actions.insert(Action::move);
        pv.by_location[l].push_back({random_condition(rng, m, 2), actions});
      }
    }
    m.variants.push_back(std::move(pv));
  }
  m.active_variant = pick(rng, nvariants);

  if (nid >= 2 && coin(rng)) {
    InsiderDecl d;
    d.id = m.identities[0];
    d.alter_egos = {m.identities[1 + pick(rng, nid - 1)]};
    d.state.psy = coin(rng) ? PsyState::angry : PsyState::happy;
    if (coin(rng, 0.7)) d.state.motivations.insert(Motivation::revenge);
    m.insiders.push_back(d);
  }
  if (coin(rng, 0.4))
    m.assumptions.push_back({pick(rng, nloc), coin(rng) ? Action::put : Action::move,
                             pick(rng, nid)});

  m.predicates.push_back({"q", std::string("x"), random_predicate(rng, m, 2, true, false)});
  for (int p = 0; p < 3; ++p)
    m.predicates.push_back(
        {"p" + std::to_string(p), std::nullopt, random_predicate(rng, m, 2, false, true)});

  finalize(m);
  return m;
}

CtlFormula random_formula(std::mt19937_64& rng, int depth) {
  using Op = CtlFormula::Op;
  if (depth <= 0 || coin(rng, 0.2)) return CtlFormula::pred("p" + std::to_string(pick(rng, 3)));
  static const Op unary[] = {Op::ex, Op::ax, Op::ef, Op::af, Op::eg, Op::ag};
  static const Op binary[] = {Op::eu, Op::au, Op::er, Op::ar};
  switch (pick(rng, 5)) {
    case 0:
      return CtlFormula::neg(random_formula(rng, depth - 1));
    case 1:
      return CtlFormula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 2:
      return CtlFormula::disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3:
      return CtlFormula::unary(unary[pick(rng, 6)], random_formula(rng, depth - 1));
    default:
      return CtlFormula::binary(binary[pick(rng, 4)], random_formula(rng, depth - 1),
                                random_formula(rng, depth - 1));
  }
}

}  // namespace testing_support
