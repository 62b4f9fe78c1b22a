#include "insider/graph.hpp"

#include <algorithm>
#include <set>

namespace insider {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void normalize(InfraGraph& g) {
  sort_unique(g.edges);
  for (auto& p : g.placements) std::sort(p.begin(), p.end());
  for (auto& c : g.credentials) sort_unique(c);
  for (auto& r : g.roles) sort_unique(r);
}

bool is_at(const InfraGraph& g, IdIndex who, LocIndex where) {
  const auto& here = g.placements.at(where);
  return std::binary_search(here.begin(), here.end(), who);
}

std::optional<LocIndex> location_of(const InfraGraph& g, IdIndex who) {
  for (LocIndex l = 0; l < g.placements.size(); ++l)
    if (is_at(g, who, l)) return l;
  return std::nullopt;
}

std::vector<LocIndex> nodes(const InfraGraph& g) {
  std::vector<LocIndex> out;
  for (const auto& [a, b] : g.edges) {
    out.push_back(a);
    out.push_back(b);
  }
  sort_unique(out);
  return out;
}

std::vector<IdIndex> actors_graph(const InfraGraph& g) {
  std::vector<IdIndex> out;
  for (LocIndex l : nodes(g)) {
    const auto& here = g.placements.at(l);
    out.insert(out.end(), here.begin(), here.end());
  }
  sort_unique(out);
  return out;
}

bool placements_unique(const InfraGraph& g) {
  std::set<IdIndex> seen;
  for (const auto& here : g.placements)
    for (IdIndex who : here)
      if (!seen.insert(who).second) return false;
  return true;
}

bool has_token(const std::vector<std::string>& sorted_tokens, const std::string& token) {
  return std::binary_search(sorted_tokens.begin(), sorted_tokens.end(), token);
}

void insert_token(std::vector<std::string>& sorted_tokens, std::string token) {
  auto it = std::lower_bound(sorted_tokens.begin(), sorted_tokens.end(), token);
  if (it == sorted_tokens.end() || *it != token) sorted_tokens.insert(it, std::move(token));
}

InfraGraph move_graph(IdIndex who, LocIndex from, LocIndex to, const InfraGraph& g) {
  if (!is_at(g, who, from) || is_at(g, who, to)) return g;
  InfraGraph out = g;
  auto& src = out.placements[from];
  src.erase(std::find(src.begin(), src.end(), who));
  auto& dst = out.placements[to];
  dst.insert(std::lower_bound(dst.begin(), dst.end(), who), who);
  return out;
}

}  // namespace insider
