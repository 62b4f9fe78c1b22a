#include "insider/kripke.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace insider {

StateSet KripkeModel::init_set() const {
  StateSet s(size());
  for (std::size_t i : init_) s.insert(i);
  return s;
}

std::size_t KripkeModel::edge_count() const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.size();
  return n;
}

std::optional<std::size_t> KripkeModel::find(const InfraGraph& g) const {
  auto it = index_.find(encode(g));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t KripkeModel::add_state(InfraGraph g, State key) {
  const std::size_t id = graphs_.size();
  index_.emplace(std::move(key), id);
  graphs_.push_back(std::move(g));
  edges_.emplace_back();
  return id;
}

void KripkeModel::finish() {
  post_.assign(size(), {});
  pre_.assign(size(), {});
  for (std::size_t s = 0; s < size(); ++s) {
    for (const auto& e : edges_[s]) post_[s].push_back(e.target);
    std::sort(post_[s].begin(), post_[s].end());
    post_[s].erase(std::unique(post_[s].begin(), post_[s].end()), post_[s].end());
    for (std::size_t t : post_[s]) pre_[t].push_back(s);
  }
}

namespace {

struct Expanded {
  std::vector<Successor> next;
  std::vector<State> keys;
};

Expanded expand(const Model& m, const InfraGraph& g) {
  Expanded out;
  out.next = successors(m, g);
  out.keys.reserve(out.next.size());
  for (const auto& s : out.next) out.keys.push_back(encode(s.graph));
  return out;
}

}  // namespace

KripkeModel reachable(const Model& m, const ReachOptions& options) {
  KripkeModel k;
  auto over_cap = [&](std::size_t n) {
    return options.max_states.has_value() && n > *options.max_states;
  };
  auto fail_cap = [&] {
    throw CheckError("state space exceeds the cap of " + std::to_string(*options.max_states) +
                     " states");
  };

  InfraGraph start = m.initial;
  normalize(start);
  State key = encode(start);
  k.init_.push_back(k.add_state(std::move(start), std::move(key)));
  if (over_cap(k.size())) fail_cap();

  // Level-synchronous BFS. Expansion of a level may run in parallel; new
  // states are then numbered sequentially in frontier order, which gives the
  // same indexing as a plain FIFO traversal.
  std::size_t level_begin = 0;
  while (level_begin < k.size()) {
    const std::size_t level_end = k.size();
    const auto width = static_cast<std::int64_t>(level_end - level_begin);
    std::vector<Expanded> expanded(static_cast<std::size_t>(width));

    if (options.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (std::int64_t i = 0; i < width; ++i)
        expanded[static_cast<std::size_t>(i)] =
            expand(m, k.graphs_[level_begin + static_cast<std::size_t>(i)]);
    } else {
      for (std::int64_t i = 0; i < width; ++i)
        expanded[static_cast<std::size_t>(i)] =
            expand(m, k.graphs_[level_begin + static_cast<std::size_t>(i)]);
    }

    for (std::size_t i = 0; i < expanded.size(); ++i) {
      const std::size_t source = level_begin + i;
      auto& ex = expanded[i];
      for (std::size_t j = 0; j < ex.next.size(); ++j) {
        std::size_t target;
        auto it = k.index_.find(ex.keys[j]);
        if (it != k.index_.end()) {
          target = it->second;
        } else {
          target = k.add_state(std::move(ex.next[j].graph), std::move(ex.keys[j]));
          if (over_cap(k.size())) fail_cap();
        }
        k.edges_[source].push_back({std::move(ex.next[j].label), target});
      }
    }
    level_begin = level_end;
  }
  k.finish();
  return k;
}

namespace {

template <typename Test>
StateSet image(const KripkeModel& k, Exec exec, Test&& test) {
  StateSet out(k.size());
  auto& words = out.words();
  const auto nwords = static_cast<std::int64_t>(words.size());
  const std::size_t n = k.size();
  // One word per task: no two threads write the same word.
  auto fill = [&](std::int64_t w) {
    std::uint64_t bits = 0;
    const std::size_t base = static_cast<std::size_t>(w) * 64;
    const std::size_t end = std::min(base + 64, n);
    for (std::size_t s = base; s < end; ++s)
      if (test(s)) bits |= std::uint64_t{1} << (s - base);
    words[static_cast<std::size_t>(w)] = bits;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t w = 0; w < nwords; ++w) fill(w);
  } else {
    for (std::int64_t w = 0; w < nwords; ++w) fill(w);
  }
  return out;
}

}  // namespace

StateSet pre_exists(const KripkeModel& k, const StateSet& z, Exec exec) {
  return image(k, exec, [&](std::size_t s) {
    const auto& post = k.post(s);
    return std::any_of(post.begin(), post.end(), [&](std::size_t t) { return z.contains(t); });
  });
}

StateSet pre_forall(const KripkeModel& k, const StateSet& z, Exec exec) {
  return image(k, exec, [&](std::size_t s) {
    const auto& post = k.post(s);
    return std::all_of(post.begin(), post.end(), [&](std::size_t t) { return z.contains(t); });
  });
}

}  // namespace insider
