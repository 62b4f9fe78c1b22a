#include "insider/condition.hpp"

#include <algorithm>

namespace insider {

PolicyCondition PolicyCondition::always() { return {}; }

PolicyCondition PolicyCondition::requester_at(LocIndex loc) {
  PolicyCondition c;
  c.kind = Kind::requester_at;
  c.location = loc;
  return c;
}

PolicyCondition PolicyCondition::has_cred(std::string cred) {
  PolicyCondition c;
  c.kind = Kind::has_cred;
  c.token = std::move(cred);
  return c;
}

PolicyCondition PolicyCondition::has_role(std::string role) {
  PolicyCondition c;
  c.kind = Kind::has_role;
  c.token = std::move(role);
  return c;
}

PolicyCondition PolicyCondition::is_in(LocIndex loc, std::string value) {
  PolicyCondition c;
  c.kind = Kind::is_in;
  c.location = loc;
  c.token = std::move(value);
  return c;
}

PolicyCondition PolicyCondition::count_at_least(LocIndex loc, std::size_t k) {
  PolicyCondition c;
  c.kind = Kind::count_at_least;
  c.location = loc;
  c.count = k;
  return c;
}

PolicyCondition PolicyCondition::all_at_authorized(LocIndex loc, std::vector<IdIndex> allowed,
                                                   std::string set_name) {
  PolicyCondition c;
  c.kind = Kind::all_at_authorized;
  c.location = loc;
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  c.allowed = std::move(allowed);
  c.token = std::move(set_name);
  return c;
}

PolicyCondition PolicyCondition::conj(std::vector<PolicyCondition> ops) {
  PolicyCondition c;
  c.kind = Kind::conj;
  c.operands = std::move(ops);
  return c;
}

PolicyCondition PolicyCondition::disj(std::vector<PolicyCondition> ops) {
  PolicyCondition c;
  c.kind = Kind::disj;
  c.operands = std::move(ops);
  return c;
}

PolicyCondition PolicyCondition::neg(PolicyCondition op) {
  PolicyCondition c;
  c.kind = Kind::neg;
  c.operands.push_back(std::move(op));
  return c;
}

StatePredicate StatePredicate::constant(bool v) {
  StatePredicate p;
  p.value = v;
  return p;
}

StatePredicate StatePredicate::enables(LocIndex loc, IdentityArg who, Action a) {
  StatePredicate p;
  p.kind = Kind::enables;
  p.location = loc;
  p.identity = std::move(who);
  p.action = a;
  return p;
}

StatePredicate StatePredicate::at(IdentityArg who, LocIndex loc) {
  StatePredicate p;
  p.kind = Kind::at;
  p.identity = std::move(who);
  p.location = loc;
  return p;
}

StatePredicate StatePredicate::is_in(LocIndex loc, std::string value) {
  StatePredicate p;
  p.kind = Kind::is_in;
  p.location = loc;
  p.token = std::move(value);
  return p;
}

StatePredicate StatePredicate::count_at_least(LocIndex loc, std::size_t k) {
  StatePredicate p;
  p.kind = Kind::count_at_least;
  p.location = loc;
  p.count = k;
  return p;
}

StatePredicate StatePredicate::in_set(IdentityArg who, std::string set_name) {
  StatePredicate p;
  p.kind = Kind::in_set;
  p.identity = std::move(who);
  p.token = std::move(set_name);
  return p;
}

StatePredicate StatePredicate::call(std::string name) {
  StatePredicate p;
  p.kind = Kind::call;
  p.token = std::move(name);
  return p;
}

StatePredicate StatePredicate::call(std::string name, IdentityArg arg) {
  StatePredicate p = call(std::move(name));
  p.identity = std::move(arg);
  p.has_argument = true;
  return p;
}

StatePredicate StatePredicate::neg(StatePredicate op) {
  StatePredicate p;
  p.kind = Kind::neg;
  p.operands.push_back(std::move(op));
  return p;
}

StatePredicate StatePredicate::conj(std::vector<StatePredicate> ops) {
  StatePredicate p;
  p.kind = Kind::conj;
  p.operands = std::move(ops);
  return p;
}

StatePredicate StatePredicate::disj(std::vector<StatePredicate> ops) {
  StatePredicate p;
  p.kind = Kind::disj;
  p.operands = std::move(ops);
  return p;
}

}  // namespace insider
