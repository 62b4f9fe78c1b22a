#include <sstream>

#include <json.hpp>

#include "insider/format.hpp"
#include "lexer.hpp"

namespace insider {

namespace {

std::string ids(const Model& m, const std::vector<IdIndex>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + m.identity_name(v[i]);
  return out;
}

std::string tokens(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string describe_state(const Model& m, const InfraGraph& g) {
  std::string out;
  for (LocIndex l = 0; l < g.placements.size(); ++l) {
    if (l) out += ' ';
    out += m.location_name(l) + "{" + ids(m, g.placements[l]) + "}";
  }
  for (LocIndex l = 0; l < g.values.size(); ++l)
    if (g.values[l]) out += ' ' + m.location_name(l) + "=" + *g.values[l];
  for (IdIndex i = 0; i < g.credentials.size(); ++i) {
    if (i < m.initial.credentials.size() && g.credentials[i] == m.initial.credentials[i]) continue;
    out += ' ' + m.identity_name(i) + ".creds{" + tokens(g.credentials[i]) + "}";
  }
  for (IdIndex i = 0; i < g.roles.size(); ++i) {
    if (i < m.initial.roles.size() && g.roles[i] == m.initial.roles[i]) continue;
    out += ' ' + m.identity_name(i) + ".roles{" + tokens(g.roles[i]) + "}";
  }
  return out;
}

std::string format_trace(const Model& m, const KripkeModel& k, const Trace& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    if (i > 0) os << "  -> " << describe(m, t.labels[i - 1]) << '\n';
    os << "s" << t.states[i] << ": " << describe_state(m, k.graph(t.states[i])) << '\n';
  }
  return os.str();
}

std::string to_dot(const Model& m, const KripkeModel& k) {
  std::ostringstream os;
  os << "digraph kripke {\n  node [shape=box, fontname=\"monospace\"];\n";
  const StateSet init = k.init_set();
  for (std::size_t i = 0; i < k.size(); ++i) {
    os << "  s" << i << " [label=\"s" << i << "\\n"
       << dot_escape(describe_state(m, k.graph(i))) << "\"";
    if (init.contains(i)) os << ", peripheries=2";
    os << "];\n";
  }
  for (std::size_t i = 0; i < k.size(); ++i)
    for (const auto& e : k.edges(i))
      os << "  s" << i << " -> s" << e.target << " [label=\"" << dot_escape(describe(m, e.label))
         << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string model_to_json(const Model& m) {
  using json = nlohmann::ordered_json;
  const auto& g = m.initial;
  json j;
  j["name"] = m.name;
  j["locations"] = json::array();
  for (const auto& l : m.locations) j["locations"].push_back({{"name", l.name}, {"id", l.id}});
  j["identities"] = m.identities;
  j["sets"] = json::object();
  for (const auto& s : m.sets) {
    json members = json::array();
    for (IdIndex i : s.members) members.push_back(m.identity_name(i));
    j["sets"][s.name] = members;
  }
  j["edges"] = json::array();
  for (const auto& [a, b] : g.edges)
    j["edges"].push_back({m.location_name(a), m.location_name(b)});
  auto table = [&](const std::vector<std::vector<std::string>>& t) {
    json out = json::object();
    for (IdIndex i = 0; i < t.size(); ++i)
      if (!t[i].empty()) out[m.identity_name(i)] = t[i];
    return out;
  };
  j["credentials"] = table(g.credentials);
  j["roles"] = table(g.roles);
  j["placements"] = json::object();
  j["location_values"] = json::object();
  j["value_alphabets"] = json::object();
  for (LocIndex l = 0; l < m.locations.size(); ++l) {
    const auto& name = m.location_name(l);
    if (!g.placements[l].empty()) {
      json who = json::array();
      for (IdIndex i : g.placements[l]) who.push_back(m.identity_name(i));
      j["placements"][name] = who;
    }
    if (g.values[l]) j["location_values"][name] = *g.values[l];
    if (!m.value_alphabet[l].empty()) j["value_alphabets"][name] = m.value_alphabet[l];
  }
  j["policies"] = json::object();
  for (const auto& v : m.variants) {
    json rules = json::array();
    for (LocIndex l = 0; l < v.by_location.size(); ++l) {
      for (const auto& p : v.by_location[l]) {
        json actions = json::array();
        for (Action a : {Action::get, Action::move, Action::eval, Action::put})
          if (p.actions.contains(a)) actions.push_back(std::string(to_string(a)));
        rules.push_back({{"location", m.location_name(l)},
                         {"condition", print_condition(m, p.condition)},
                         {"actions", actions}});
      }
    }
    j["policies"][v.name] = rules;
  }
  j["active"] = m.active().name;
  j["insiders"] = json::array();
  for (const auto& d : m.insiders) {
    json motives = json::array();
    for (Motivation mv : d.state.motivations) motives.push_back(std::string(to_string(mv)));
    j["insiders"].push_back({{"id", d.id},
                             {"alter_egos", d.alter_egos},
                             {"psy_state", std::string(to_string(d.state.psy))},
                             {"motivations", motives}});
  }
  j["predicates"] = json::array();
  for (const auto& p : m.predicates) {
    j["predicates"].push_back({{"name", p.name},
                               {"param", p.param ? json(*p.param) : json(nullptr)},
                               {"body", print_predicate(m, p.body)}});
  }
  j["assumptions"] = json::array();
  for (const auto& f : m.assumptions) {
    j["assumptions"].push_back({{"kind", "foe"},
                                {"location", m.location_name(f.location)},
                                {"action", std::string(to_string(f.action))},
                                {"foe", m.identity_name(f.foe)}});
  }
  return j.dump(2) + "\n";
}

}  // namespace insider
