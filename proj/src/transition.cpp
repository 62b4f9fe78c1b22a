#include "insider/transition.hpp"

#include <algorithm>
#include <array>

namespace insider {

std::string_view to_string(Rule r) {
  static constexpr std::array<std::string_view, 4> names = {"move", "get", "put", "put_remote"};
  return names.at(static_cast<std::size_t>(r));
}

std::string describe(const Model& m, const TransitionLabel& label) {
  std::string out(to_string(label.rule));
  out += ' ';
  out += m.identity_name(label.actor);
  switch (label.rule) {
    case Rule::move:
      out += ' ' + m.location_name(label.from) + "->" + m.location_name(label.to);
      break;
    case Rule::get:
      out += ' ' + label.token + "->" + m.identity_name(label.recipient) + " @" +
             m.location_name(label.from);
      break;
    case Rule::put:
    case Rule::put_remote:
      out += ' ' + m.location_name(label.from) + ":=" + label.token;
      break;
  }
  return out;
}

namespace {

std::vector<std::string> class_credentials(const Model& m, const InfraGraph& g, IdIndex who) {
  std::vector<std::string> out;
  for (IdIndex member : m.resolver.members(m.actor_of(who)))
    for (const auto& c : g.credentials.at(member)) insert_token(out, c);
  return out;
}

InfraGraph with_value(const InfraGraph& g, LocIndex l, const std::string& z) {
  InfraGraph out = g;
  out.values[l] = z;
  return out;
}

}  // namespace

std::vector<Successor> successors(const Model& m, const InfraGraph& g) {
  std::vector<Successor> out;
  const std::size_t nloc = m.locations.size();
  const std::size_t nid = m.identities.size();
  const auto graph_nodes = nodes(g);
  const auto placed = actors_graph(g);
  auto is_node = [&](LocIndex l) {
    return std::binary_search(graph_nodes.begin(), graph_nodes.end(), l);
  };

  for (IdIndex a = 0; a < nid; ++a) {
    if (!std::binary_search(placed.begin(), placed.end(), a)) continue;
    const ActorClassId who = m.actor_of(a);
    for (LocIndex l = 0; l < nloc; ++l) {
      if (!is_node(l) || !is_at(g, a, l)) continue;
      for (LocIndex to = 0; to < nloc; ++to) {
        if (!is_node(to) || !enables(m, g, to, who, Action::move)) continue;
        out.push_back({{Rule::move, a, l, to, 0, {}}, move_graph(a, l, to, g)});
      }
    }
  }

  for (IdIndex a = 0; a < nid; ++a) {
    const ActorClassId who = m.actor_of(a);
    for (LocIndex l = 0; l < nloc; ++l) {
      if (!is_at(g, a, l) || !enables(m, g, l, who, Action::get)) continue;
      const auto held = class_credentials(m, g, a);
      for (IdIndex receiver : g.placements[l]) {
        for (const auto& z : held) {
          InfraGraph next = g;
          insert_token(next.credentials[receiver], z);
          out.push_back({{Rule::get, a, l, l, receiver, z}, std::move(next)});
        }
      }
    }
  }

  for (IdIndex a = 0; a < nid; ++a) {
    const ActorClassId who = m.actor_of(a);
    for (LocIndex l = 0; l < nloc; ++l) {
      if (!is_at(g, a, l) || !enables(m, g, l, who, Action::put)) continue;
      for (const auto& z : m.value_alphabet[l])
        out.push_back({{Rule::put, a, l, l, 0, z}, with_value(g, l, z)});
    }
  }

  for (IdIndex a = 0; a < nid; ++a) {
    const ActorClassId who = m.actor_of(a);
    for (LocIndex l = 0; l < nloc; ++l) {
      if (!enables(m, g, l, who, Action::put)) continue;
      for (const auto& z : m.value_alphabet[l])
        out.push_back({{Rule::put_remote, a, l, l, 0, z}, with_value(g, l, z)});
    }
  }
  return out;
}

}  // namespace insider
