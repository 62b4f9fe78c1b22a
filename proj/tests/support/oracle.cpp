#include "oracle.hpp"

#include <deque>
#include <stdexcept>

namespace oracle {

using insider::Action;
using insider::Model;

std::string OState::key() const {
  std::string k;
  for (const auto& [l, ids] : at) {
    if (ids.empty()) continue;
    k += "@" + l + ":";
    for (const auto& i : ids) k += i + ",";
  }
  for (const auto& [i, cs] : creds) {
    if (cs.empty()) continue;
    k += "#c" + i + ":";
    for (const auto& c : cs) k += c + ",";
  }
  for (const auto& [i, rs] : roles) {
    if (rs.empty()) continue;
    k += "#r" + i + ":";
    for (const auto& r : rs) k += r + ",";
  }
  for (const auto& [l, v] : value) k += "=" + l + ":" + v + ";";
  return k;
}

OState from_graph(const Model& m, const insider::InfraGraph& g) {
  OState s;
  for (std::size_t l = 0; l < g.placements.size(); ++l)
    for (auto i : g.placements[l]) s.at[m.locations[l].name].insert(m.identities[i]);
  for (std::size_t i = 0; i < g.credentials.size(); ++i)
    for (const auto& c : g.credentials[i]) s.creds[m.identities[i]].insert(c);
  for (std::size_t i = 0; i < g.roles.size(); ++i)
    for (const auto& r : g.roles[i]) s.roles[m.identities[i]].insert(r);
  for (std::size_t l = 0; l < g.values.size(); ++l)
    if (g.values[l]) s.value[m.locations[l].name] = *g.values[l];
  return s;
}

Oracle::Oracle(const Model& m) : m_(m) {
  for (const auto& id : m.identities) classes_[id] = {id};
  // Merge classes until nothing changes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& d : m.insiders) {
      const bool tipped = !d.state.motivations.empty() && d.state.psy != insider::PsyState::happy;
      if (!tipped) continue;
      for (const auto& alter : d.alter_egos) {
        if (classes_[d.id].count(alter)) continue;
        std::set<std::string> merged = classes_[d.id];
        merged.insert(classes_[alter].begin(), classes_[alter].end());
        for (const auto& x : merged) classes_[x] = merged;
        changed = true;
      }
    }
  }
}

std::set<std::string> Oracle::actor_class(const std::string& id) const { return classes_.at(id); }

bool Oracle::condition(const OState& s, const insider::PolicyCondition& c,
                       const std::set<std::string>& req) const {
  using K = insider::PolicyCondition::Kind;
  auto here = [&](std::size_t l) {
    auto it = s.at.find(m_.locations[l].name);
    return it == s.at.end() ? std::set<std::string>{} : it->second;
  };
  auto holds = [&](const std::map<std::string, std::set<std::string>>& table,
                   const std::string& t) {
    for (const auto& r : req) {
      auto it = table.find(r);
      if (it != table.end() && it->second.count(t)) return true;
    }
    return false;
  };
  switch (c.kind) {
    case K::always:
      return true;
    case K::requester_at:
      for (const auto& i : here(c.location))
        if (req.count(i)) return true;
      return false;
    case K::has_cred:
      return holds(s.creds, c.token);
    case K::has_role:
      return holds(s.roles, c.token);
    case K::is_in: {
      auto it = s.value.find(m_.locations[c.location].name);
      return it != s.value.end() && it->second == c.token;
    }
    case K::count_at_least:
      return here(c.location).size() >= c.count;
    case K::all_at_authorized:
      for (const auto& i : here(c.location)) {
        bool ok = false;
        for (auto a : c.allowed) ok = ok || m_.identities[a] == i;
        if (!ok) return false;
      }
      return true;
    case K::conj:
      for (const auto& o : c.operands)
        if (!condition(s, o, req)) return false;
      return true;
    case K::disj:
      for (const auto& o : c.operands)
        if (condition(s, o, req)) return true;
      return false;
    case K::neg:
      return !condition(s, c.operands.at(0), req);
  }
  throw std::logic_error("condition kind");
}

bool Oracle::enables(const OState& s, const std::string& loc, const std::string& requester,
                     Action a) const {
  const auto req = actor_class(requester);
  std::size_t l = 0;
  while (m_.locations[l].name != loc) ++l;
  for (const auto& f : m_.assumptions) {
    if (f.location != l || f.action != a) continue;
    if (req != actor_class(m_.identities[f.foe])) continue;
    auto it = s.at.find(loc);
    if (it == s.at.end()) continue;
    for (const auto& i : it->second)
      if (!req.count(i)) return false;
  }
  for (const auto& p : m_.active().by_location[l])
    if (p.actions.contains(a) && condition(s, p.condition, req)) return true;
  return false;
}

std::vector<OState> Oracle::successors(const OState& s) const {
  std::vector<OState> out;
  std::set<std::string> nodes;
  for (const auto& [a, b] : m_.initial.edges) {
    nodes.insert(m_.locations[a].name);
    nodes.insert(m_.locations[b].name);
  }
  for (const auto& [l, ids] : s.at) {
    for (const auto& a : ids) {
      // move
      if (nodes.count(l)) {
        for (const auto& l2 : nodes) {
          if (!enables(s, l2, a, Action::move)) continue;
          OState t = s;
          if (!t.at[l2].count(a)) {
            t.at[l].erase(a);
            t.at[l2].insert(a);
          }
          out.push_back(t);
        }
      }
      // get
      if (enables(s, l, a, Action::get)) {
        std::set<std::string> tokens;
        for (const auto& member : actor_class(a)) {
          auto it = s.creds.find(member);
          if (it != s.creds.end()) tokens.insert(it->second.begin(), it->second.end());
        }
        for (const auto& b : ids) {
          for (const auto& z : tokens) {
            OState t = s;
            t.creds[b].insert(z);
            out.push_back(t);
          }
        }
      }
    }
  }
  for (std::size_t l = 0; l < m_.locations.size(); ++l) {
    const std::string& ln = m_.locations[l].name;
    for (const auto& a : m_.identities) {
      if (!enables(s, ln, a, Action::put)) continue;
      for (const auto& z : m_.value_alphabet[l]) {
        OState t = s;
        t.value[ln] = z;
        out.push_back(t);  // put_remote covers put
      }
    }
  }
  return out;
}

std::string Oracle::who(const insider::IdentityArg& a,
                        const std::optional<std::string>& binding) const {
  if (a.identity) return m_.identities[*a.identity];
  if (!binding) throw std::logic_error("unbound parameter");
  return *binding;
}

bool Oracle::eval(const OState& s, const insider::StatePredicate& p,
                  const std::optional<std::string>& binding) const {
  using K = insider::StatePredicate::Kind;
  switch (p.kind) {
    case K::constant:
      return p.value;
    case K::enables:
      return enables(s, m_.locations[p.location].name, who(p.identity, binding), p.action);
    case K::at: {
      auto it = s.at.find(m_.locations[p.location].name);
      return it != s.at.end() && it->second.count(who(p.identity, binding)) > 0;
    }
    case K::is_in: {
      auto it = s.value.find(m_.locations[p.location].name);
      return it != s.value.end() && it->second == p.token;
    }
    case K::count_at_least: {
      auto it = s.at.find(m_.locations[p.location].name);
      return (it == s.at.end() ? 0 : it->second.size()) >= p.count;
    }
    case K::in_set: {
      const std::string w = who(p.identity, binding);
      for (const auto& set : m_.sets)
        if (set.name == p.token)
          for (auto i : set.members)
            if (m_.identities[i] == w) return true;
      return false;
    }
    case K::call: {
      for (const auto& np : m_.predicates) {
        if (np.name != p.token) continue;
        std::optional<std::string> arg;
        if (p.has_argument) arg = who(p.identity, binding);
        return eval(s, np.body, arg);
      }
      throw std::logic_error("unknown predicate " + p.token);
    }
    case K::neg:
      return !eval(s, p.operands.at(0), binding);
    case K::conj:
      for (const auto& o : p.operands)
        if (!eval(s, o, binding)) return false;
      return true;
    case K::disj:
      for (const auto& o : p.operands)
        if (eval(s, o, binding)) return true;
      return false;
  }
  throw std::logic_error("predicate kind");
}

bool Oracle::predicate(const OState& s, const std::string& name) const {
  return eval(s, insider::StatePredicate::call(name), std::nullopt);
}

Oracle::Space Oracle::explore(std::size_t cap) const {
  Space sp;
  std::deque<std::size_t> queue;
  auto add = [&](const OState& s) {
    const std::string k = s.key();
    auto it = sp.index.find(k);
    if (it != sp.index.end()) return it->second;
    if (sp.states.size() >= cap) throw std::runtime_error("oracle cap exceeded");
    sp.index.emplace(k, sp.states.size());
    sp.states.push_back(s);
    sp.post.emplace_back();
    queue.push_back(sp.states.size() - 1);
    return sp.states.size() - 1;
  };
  add(from_graph(m_, m_.initial));
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& t : successors(sp.states[i])) {
      const std::size_t j = add(t);
      sp.post[i].insert(j);
    }
  }
  return sp;
}

std::set<std::size_t> Oracle::backward_ef(const Space& sp,
                                          const std::set<std::size_t>& target) const {
  std::vector<std::vector<std::size_t>> pre(sp.states.size());
  for (std::size_t i = 0; i < sp.post.size(); ++i)
    for (auto j : sp.post[i]) pre[j].push_back(i);
  std::set<std::size_t> seen = target;
  std::deque<std::size_t> queue(target.begin(), target.end());
  while (!queue.empty()) {
    const std::size_t j = queue.front();
    queue.pop_front();
    for (auto i : pre[j])
      if (seen.insert(i).second) queue.push_back(i);
  }
  return seen;
}

}  // namespace oracle
