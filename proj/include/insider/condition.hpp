#pragma once

#include <optional>
#include <string>
#include <vector>

#include "insider/types.hpp"

namespace insider {

/// Condition of an atomic policy, evaluated for a requesting actor class
/// against a graph snapshot.
struct PolicyCondition {
  enum class Kind {
    always,             // true
    requester_at,       // some identity of the requester's class is at `location`
    has_cred,           // some class member holds credential `token`
    has_role,           // some class member holds role `token`
    is_in,              // value of `location` equals `token`
    count_at_least,     // at least `count` identities placed at `location`
    all_at_authorized,  // everyone at `location` is in `allowed`
    conj,
    disj,
    neg,
  };

  Kind kind = Kind::always;
  LocIndex location = 0;
  std::string token;  // credential, role, value, or the name of the allowed set
  std::size_t count = 0;
  std::vector<IdIndex> allowed;  // sorted
  std::vector<PolicyCondition> operands;

  static PolicyCondition always();
  static PolicyCondition requester_at(LocIndex loc);
  static PolicyCondition has_cred(std::string cred);
  static PolicyCondition has_role(std::string role);
  static PolicyCondition is_in(LocIndex loc, std::string value);
  static PolicyCondition count_at_least(LocIndex loc, std::size_t k);
  static PolicyCondition all_at_authorized(LocIndex loc, std::vector<IdIndex> allowed,
                                           std::string set_name = {});
  static PolicyCondition conj(std::vector<PolicyCondition> ops);
  static PolicyCondition disj(std::vector<PolicyCondition> ops);
  static PolicyCondition neg(PolicyCondition op);

  friend bool operator==(const PolicyCondition&, const PolicyCondition&) = default;
};

struct AtomicPolicy {
  PolicyCondition condition;
  ActionSet actions;

  friend bool operator==(const AtomicPolicy&, const AtomicPolicy&) = default;
};

/// Identity argument of a state-predicate atom: either a concrete identity
/// or a reference to the enclosing predicate's parameter.
struct IdentityArg {
  std::optional<IdIndex> identity;
  std::string param;

  static IdentityArg of(IdIndex id) { return {id, {}}; }
  static IdentityArg parameter(std::string name) { return {std::nullopt, std::move(name)}; }

  friend bool operator==(const IdentityArg&, const IdentityArg&) = default;
};

/// Boolean expression over a whole state; the building block of named
/// predicates such as the global policy.
struct StatePredicate {
  enum class Kind {
    constant,
    enables,         // enables(location, identity, action)
    at,              // identity placed at location
    is_in,           // location value equals token
    count_at_least,  // placement length at location >= count
    in_set,          // identity is a member of named set `token`
    call,            // named predicate `token`, optionally applied to `identity`
    neg,
    conj,
    disj,
  };

  Kind kind = Kind::constant;
  bool value = true;
  LocIndex location = 0;
  IdentityArg identity;
  Action action = Action::put;
  std::string token;
  std::size_t count = 0;
  bool has_argument = false;  // for `call`
  std::vector<StatePredicate> operands;

  static StatePredicate constant(bool v);
  static StatePredicate enables(LocIndex loc, IdentityArg who, Action a);
  static StatePredicate at(IdentityArg who, LocIndex loc);
  static StatePredicate is_in(LocIndex loc, std::string value);
  static StatePredicate count_at_least(LocIndex loc, std::size_t k);
  static StatePredicate in_set(IdentityArg who, std::string set_name);
  static StatePredicate call(std::string name);
  static StatePredicate call(std::string name, IdentityArg arg);
  static StatePredicate neg(StatePredicate op);
  static StatePredicate conj(std::vector<StatePredicate> ops);
  static StatePredicate disj(std::vector<StatePredicate> ops);

  friend bool operator==(const StatePredicate&, const StatePredicate&) = default;
};

struct NamedPredicate {
  std::string name;
  std::optional<std::string> param;
  StatePredicate body;

  friend bool operator==(const NamedPredicate&, const NamedPredicate&) = default;
};

}  // namespace insider
