#include "insider/model.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace insider {

std::optional<LocIndex> Model::find_location(std::string_view name) const {
  for (LocIndex l = 0; l < locations.size(); ++l)
    if (locations[l].name == name) return l;
  return std::nullopt;
}

std::optional<IdIndex> Model::find_identity(std::string_view name) const {
  auto it = std::lower_bound(identities.begin(), identities.end(), name);
  if (it == identities.end() || *it != name) return std::nullopt;
  return static_cast<IdIndex>(it - identities.begin());
}

LocIndex Model::location(std::string_view name) const {
  if (auto l = find_location(name)) return *l;
  throw ModelError("unknown location '" + std::string(name) + "'");
}

IdIndex Model::identity(std::string_view name) const {
  if (auto i = find_identity(name)) return *i;
  throw ModelError("unknown identity '" + std::string(name) + "'");
}

const IdentitySet* Model::find_set(std::string_view name) const {
  for (const auto& s : sets)
    if (s.name == name) return &s;
  return nullptr;
}

const NamedPredicate* Model::find_predicate(std::string_view name) const {
  for (const auto& p : predicates)
    if (p.name == name) return &p;
  return nullptr;
}

void Model::select_variant(std::string_view variant) {
  for (std::size_t i = 0; i < variants.size(); ++i) {
    if (variants[i].name == variant) {
      active_variant = i;
      return;
    }
  }
  throw ModelError("unknown policy variant '" + std::string(variant) + "'");
}

namespace {

bool valid_token(std::string_view s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0 || std::iscntrl(c) != 0;
  });
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ModelError(message);
}

void check_condition(const Model& m, const PolicyCondition& c, const std::string& where) {
  using K = PolicyCondition::Kind;
  switch (c.kind) {
    case K::requester_at:
    case K::is_in:
    case K::count_at_least:
      require(c.location < m.locations.size(), where + ": location out of range");
      break;
    case K::all_at_authorized:
      require(c.location < m.locations.size(), where + ": location out of range");
      for (IdIndex i : c.allowed)
        require(i < m.identities.size(), where + ": identity out of range");
      require(std::adjacent_find(c.allowed.begin(), c.allowed.end(),
                                 std::greater_equal<>()) == c.allowed.end(),
              where + ": allowed identities must be strictly ascending");
      if (!c.token.empty()) {
        const IdentitySet* set = m.find_set(c.token);
        require(set != nullptr, where + ": unknown set '" + c.token + "'");
        require(set->members == c.allowed,
                where + ": allowed identities differ from set '" + c.token + "'");
      }
      break;
    case K::neg:
      require(c.operands.size() == 1, where + ": negation takes one operand");
      break;
    case K::conj:
    case K::disj:
      require(c.operands.size() >= 2, where + ": connective needs two or more operands");
      break;
    default:
      break;
  }
  for (const auto& op : c.operands) check_condition(m, op, where);
}

void check_predicate(const Model& m, const StatePredicate& p,
                     const std::optional<std::string>& param, const std::string& where,
                     std::set<std::string>& calls) {
  using K = StatePredicate::Kind;
  auto check_identity = [&](const IdentityArg& arg) {
    if (arg.identity) {
      require(*arg.identity < m.identities.size(), where + ": identity out of range");
    } else {
      require(param.has_value() && arg.param == *param,
              where + ": unbound parameter '" + arg.param + "'");
    }
  };
  switch (p.kind) {
    case K::enables:
    case K::at:
      require(p.location < m.locations.size(), where + ": location out of range");
      check_identity(p.identity);
      break;
    case K::is_in:
    case K::count_at_least:
      require(p.location < m.locations.size(), where + ": location out of range");
      break;
    case K::in_set:
      require(m.find_set(p.token) != nullptr, where + ": unknown set '" + p.token + "'");
      check_identity(p.identity);
      break;
    case K::call: {
      const NamedPredicate* callee = m.find_predicate(p.token);
      require(callee != nullptr, where + ": unknown predicate '" + p.token + "'");
      require(callee->param.has_value() == p.has_argument,
              where + ": predicate '" + p.token + "' called with wrong arity");
      if (p.has_argument) check_identity(p.identity);
      calls.insert(p.token);
      break;
    }
    case K::neg:
      require(p.operands.size() == 1, where + ": negation takes one operand");
      break;
    case K::conj:
    case K::disj:
      require(p.operands.size() >= 2, where + ": connective needs two or more operands");
      break;
    default:
      break;
  }
  for (const auto& op : p.operands) check_predicate(m, op, param, where, calls);
}

}  // namespace

void finalize(Model& m) {
  require(!m.locations.empty(), "model needs at least one location");
  std::set<std::string> names;
  for (std::size_t i = 0; i < m.locations.size(); ++i) {
    const auto& loc = m.locations[i];
    require(valid_token(loc.name), "location name must be a non-empty token");
    require(names.insert(loc.name).second, "duplicate location '" + loc.name + "'");
    if (i > 0)
      require(m.locations[i - 1].id < loc.id,
              "location ids must be unique and ascending ('" + loc.name + "')");
  }
  for (std::size_t i = 0; i < m.identities.size(); ++i) {
    require(valid_token(m.identities[i]), "identity must be a non-empty token");
    if (i > 0)
      require(m.identities[i - 1] < m.identities[i],
              "identities must be unique and sorted ('" + m.identities[i] + "')");
  }

  const std::size_t nloc = m.locations.size();
  const std::size_t nid = m.identities.size();
  auto& g = m.initial;
  require(g.placements.size() == nloc, "placement table does not match location count");
  require(g.values.size() == nloc, "value table does not match location count");
  require(g.credentials.size() == nid, "credential table does not match identity count");
  require(g.roles.size() == nid, "role table does not match identity count");
  for (const auto& [a, b] : g.edges)
    require(a < nloc && b < nloc, "edge references unknown location");
  for (const auto& here : g.placements)
    for (IdIndex who : here) require(who < nid, "placement references unknown identity");
  normalize(g);
  require(placements_unique(g),
          "an identity is placed twice (identities occupy at most one location, once)");

  require(m.value_alphabet.size() == nloc, "value alphabet table does not match location count");
  for (auto& alphabet : m.value_alphabet) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  }

  for (const auto& tokens : g.credentials)
    for (const auto& t : tokens) require(valid_token(t), "credential must be a non-empty token");
  for (const auto& tokens : g.roles)
    for (const auto& t : tokens) require(valid_token(t), "role must be a non-empty token");
  for (const auto& v : g.values)
    require(!v || valid_token(*v), "location value must be a non-empty token");
  for (const auto& alphabet : m.value_alphabet)
    for (const auto& t : alphabet) require(valid_token(t), "alphabet value must be a non-empty token");

  std::set<std::string> set_names;
  for (auto& s : m.sets) {
    require(valid_token(s.name), "set name must be a non-empty token");
    require(set_names.insert(s.name).second, "duplicate set '" + s.name + "'");
    std::sort(s.members.begin(), s.members.end());
    s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
    for (IdIndex i : s.members) require(i < nid, "set '" + s.name + "' has unknown identity");
  }

  require(!m.variants.empty(), "model needs at least one policy variant");
  require(m.active_variant < m.variants.size(), "active policy variant out of range");
  std::set<std::string> variant_names;
  for (const auto& v : m.variants) {
    require(valid_token(v.name), "variant name must be a non-empty token");
    require(variant_names.insert(v.name).second, "duplicate policy variant '" + v.name + "'");
    require(v.by_location.size() == nloc,
            "policy variant '" + v.name + "' does not cover every location");
    for (const auto& pols : v.by_location) {
      for (const auto& pol : pols) {
        require(!pol.actions.empty(), "policy in variant '" + v.name + "' grants no action");
        check_condition(m, pol.condition, "policy variant '" + v.name + "'");
      }
    }
  }

  for (auto& decl : m.insiders) {
    std::sort(decl.alter_egos.begin(), decl.alter_egos.end());
    decl.alter_egos.erase(std::unique(decl.alter_egos.begin(), decl.alter_egos.end()),
                          decl.alter_egos.end());
  }
  m.resolver = build_resolver(m.insiders, m.identities);

  std::map<std::string, std::set<std::string>> call_graph;
  for (const auto& p : m.predicates) {
    require(valid_token(p.name), "predicate name must be a non-empty token");
    require(call_graph.find(p.name) == call_graph.end(), "duplicate predicate '" + p.name + "'");
    if (p.param) {
      require(valid_token(*p.param), "predicate parameter must be a non-empty token");
      require(!m.find_identity(*p.param),
              "parameter of predicate '" + p.name + "' shadows an identity");
    }
    check_predicate(m, p.body, p.param, "predicate '" + p.name + "'", call_graph[p.name]);
  }
  // Reject recursive predicate definitions.
  std::map<std::string, int> mark;
  std::function<void(const std::string&)> visit = [&](const std::string& name) {
    int& state = mark[name];
    require(state != 1, "predicate '" + name + "' is defined recursively");
    if (state == 2) return;
    state = 1;
    for (const auto& callee : call_graph[name]) visit(callee);
    mark[name] = 2;
  };
  for (const auto& p : m.predicates) visit(p.name);

  for (const auto& a : m.assumptions)
    require(a.location < nloc && a.foe < nid, "assumption references unknown location/identity");
}

bool eval_condition(const PolicyCondition& c, const InfraGraph& g, ActorClassId requester,
                    const ActorResolver& resolver) {
  using K = PolicyCondition::Kind;
  switch (c.kind) {
    case K::always:
      return true;
    case K::requester_at: {
      const auto& here = g.placements.at(c.location);
      return std::any_of(here.begin(), here.end(),
                         [&](IdIndex n) { return resolver.actor_of(n) == requester; });
    }
    case K::has_cred:
    case K::has_role: {
      const auto& table = c.kind == K::has_cred ? g.credentials : g.roles;
      const auto& members = resolver.members(requester);
      return std::any_of(members.begin(), members.end(),
                         [&](IdIndex n) { return has_token(table.at(n), c.token); });
    }
    case K::is_in: {
      const auto& v = g.values.at(c.location);
      return v.has_value() && *v == c.token;
    }
    case K::count_at_least:
      return g.placements.at(c.location).size() >= c.count;
    case K::all_at_authorized: {
      const auto& here = g.placements.at(c.location);
      return std::all_of(here.begin(), here.end(), [&](IdIndex n) {
        return std::binary_search(c.allowed.begin(), c.allowed.end(), n);
      });
    }
    case K::conj:
      return std::all_of(c.operands.begin(), c.operands.end(), [&](const PolicyCondition& op) {
        return eval_condition(op, g, requester, resolver);
      });
    case K::disj:
      return std::any_of(c.operands.begin(), c.operands.end(), [&](const PolicyCondition& op) {
        return eval_condition(op, g, requester, resolver);
      });
    case K::neg:
      return !eval_condition(c.operands.front(), g, requester, resolver);
  }
  return false;
}

bool enables_by_policy(const Model& m, const InfraGraph& g, LocIndex l, ActorClassId requester,
                       Action a) {
  const auto& pols = m.policies_at(l);
  return std::any_of(pols.begin(), pols.end(), [&](const AtomicPolicy& p) {
    return p.actions.contains(a) && eval_condition(p.condition, g, requester, m.resolver);
  });
}

bool enables(const Model& m, const InfraGraph& g, LocIndex l, ActorClassId requester, Action a) {
  for (const auto& assumption : m.assumptions) {
    if (assumption.location != l || assumption.action != a) continue;
    const ActorClassId foe = m.actor_of(assumption.foe);
    if (requester != foe) continue;
    const auto& here = g.placements.at(l);
    bool guarded = std::any_of(here.begin(), here.end(),
                               [&](IdIndex x) { return m.actor_of(x) != foe; });
    if (guarded) return false;
  }
  return enables_by_policy(m, g, l, requester, a);
}

namespace {

IdIndex resolve(const IdentityArg& arg, std::optional<IdIndex> binding) {
  if (arg.identity) return *arg.identity;
  if (!binding) throw CheckError("unbound predicate parameter '" + arg.param + "'");
  return *binding;
}

}  // namespace

bool eval_predicate(const Model& m, const InfraGraph& g, const StatePredicate& p,
                    std::optional<IdIndex> binding) {
  using K = StatePredicate::Kind;
  switch (p.kind) {
    case K::constant:
      return p.value;
    case K::enables:
      return enables(m, g, p.location, m.actor_of(resolve(p.identity, binding)), p.action);
    case K::at:
      return is_at(g, resolve(p.identity, binding), p.location);
    case K::is_in: {
      const auto& v = g.values.at(p.location);
      return v.has_value() && *v == p.token;
    }
    case K::count_at_least:
      return g.placements.at(p.location).size() >= p.count;
    case K::in_set: {
      const IdentitySet* set = m.find_set(p.token);
      if (set == nullptr) throw CheckError("unknown set '" + p.token + "'");
      return std::binary_search(set->members.begin(), set->members.end(),
                                resolve(p.identity, binding));
    }
    case K::call: {
      const NamedPredicate* callee = m.find_predicate(p.token);
      if (callee == nullptr) throw CheckError("unknown predicate '" + p.token + "'");
      std::optional<IdIndex> arg;
      if (p.has_argument) arg = resolve(p.identity, binding);
      return eval_predicate(m, g, callee->body, arg);
    }
    case K::neg:
      return !eval_predicate(m, g, p.operands.front(), binding);
    case K::conj:
      return std::all_of(p.operands.begin(), p.operands.end(), [&](const StatePredicate& op) {
        return eval_predicate(m, g, op, binding);
      });
    case K::disj:
      return std::any_of(p.operands.begin(), p.operands.end(), [&](const StatePredicate& op) {
        return eval_predicate(m, g, op, binding);
      });
  }
  return false;
}

bool eval_named(const Model& m, const InfraGraph& g, std::string_view name) {
  const NamedPredicate* p = m.find_predicate(name);
  if (p == nullptr) throw CheckError("unknown predicate '" + std::string(name) + "'");
  if (p->param)
    throw CheckError("predicate '" + std::string(name) + "' expects an identity argument");
  return eval_predicate(m, g, p->body);
}

std::vector<std::string> lint(const Model& m) {
  std::vector<std::string> out;
  for (const auto& v : m.variants) {
    for (LocIndex l = 0; l < v.by_location.size(); ++l) {
      for (const auto& pol : v.by_location[l]) {
        if (pol.actions.only(Action::eval))
          out.push_back("policy variant '" + v.name + "' at '" + m.location_name(l) +
                        "' grants only eval, which has no transition rule");
      }
    }
  }
  return out;
}

}  // namespace insider
