#include "insider/ctl.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace insider {

CtlFormula CtlFormula::pred(std::string name) {
  CtlFormula f;
  f.name = std::move(name);
  return f;
}

CtlFormula CtlFormula::neg(CtlFormula f) { return unary(Op::neg, std::move(f)); }

CtlFormula CtlFormula::conj(CtlFormula a, CtlFormula b) {
  return binary(Op::conj, std::move(a), std::move(b));
}

CtlFormula CtlFormula::disj(CtlFormula a, CtlFormula b) {
  return binary(Op::disj, std::move(a), std::move(b));
}

CtlFormula CtlFormula::unary(Op op, CtlFormula f) {
  CtlFormula out;
  out.op = op;
  out.args.push_back(std::move(f));
  return out;
}

CtlFormula CtlFormula::binary(Op op, CtlFormula a, CtlFormula b) {
  CtlFormula out;
  out.op = op;
  out.args.push_back(std::move(a));
  out.args.push_back(std::move(b));
  return out;
}

FixpointResult lfp_iterate(const SetTransformer& t, std::size_t universe) {
  FixpointResult r{StateSet(universe), 0, true};
  for (;;) {
    StateSet next = t(r.set);
    ++r.iterations;
    if (!r.set.subset_of(next)) r.monotone_chain = false;
    if (next == r.set) return r;
    if (r.iterations > universe + 1)
      throw CheckError("least fixpoint did not converge; transformer is not monotone");
    r.set = std::move(next);
  }
}

FixpointResult gfp_iterate(const SetTransformer& t, std::size_t universe) {
  FixpointResult r{StateSet(universe, true), 0, true};
  for (;;) {
    StateSet next = t(r.set);
    ++r.iterations;
    if (!next.subset_of(r.set)) r.monotone_chain = false;
    if (next == r.set) return r;
    if (r.iterations > universe + 1)
      throw CheckError("greatest fixpoint did not converge; transformer is not monotone");
    r.set = std::move(next);
  }
}

bool spot_check_monotone(const SetTransformer& t, std::size_t universe, std::size_t samples,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < samples; ++i) {
    StateSet p(universe);
    StateSet q(universe);
    for (std::size_t s = 0; s < universe; ++s) {
      const bool in_p = coin(rng);
      if (in_p) p.insert(s);
      if (in_p || coin(rng)) q.insert(s);
    }
    if (!t(p).subset_of(t(q))) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kMonotoneSamples = 32;

class Evaluator {
 public:
  Evaluator(const KripkeModel& k, const Model& m, const EvalOptions& options, EvalStats* stats)
      : k_(k), m_(m), options_(options), stats_(stats) {}

  StateSet eval(const CtlFormula& f) {
    using Op = CtlFormula::Op;
    switch (f.op) {
      case Op::pred:
        return predicate(f.name);
      case Op::neg:
        return eval(f.args.at(0)).complement();
      case Op::conj:
        return eval(f.args.at(0)) & eval(f.args.at(1));
      case Op::disj:
        return eval(f.args.at(0)) | eval(f.args.at(1));
      case Op::ex:
        return ex(eval(f.args.at(0)));
      case Op::ax:
        return ax(eval(f.args.at(0)));
      case Op::ef: {
        const StateSet g = eval(f.args.at(0));
        return least(f.op, [&](const StateSet& z) { return g | ex(z); });
      }
      case Op::af: {
        const StateSet g = eval(f.args.at(0));
        return least(f.op, [&](const StateSet& z) { return g | ax(z); });
      }
      case Op::eg: {
        const StateSet g = eval(f.args.at(0));
        return greatest(f.op, [&](const StateSet& z) { return g & ex(z); });
      }
      case Op::ag: {
        const StateSet g = eval(f.args.at(0));
        StateSet result = greatest(f.op, [&](const StateSet& z) { return g & ax(z); });
        if (options_.check_duality) check_duality(g, result);
        return result;
      }
      case Op::eu: {
        const StateSet a = eval(f.args.at(0));
        const StateSet b = eval(f.args.at(1));
        return least(f.op, [&](const StateSet& z) { return b | (a & ex(z)); });
      }
      case Op::au: {
        const StateSet a = eval(f.args.at(0));
        const StateSet b = eval(f.args.at(1));
        return least(f.op, [&](const StateSet& z) { return b | (a & ax(z)); });
      }
      case Op::er: {
        const StateSet a = eval(f.args.at(0));
        const StateSet b = eval(f.args.at(1));
        return greatest(f.op, [&](const StateSet& z) { return b & (a | ex(z)); });
      }
      case Op::ar: {
        const StateSet a = eval(f.args.at(0));
        const StateSet b = eval(f.args.at(1));
        return greatest(f.op, [&](const StateSet& z) { return b & (a | ax(z)); });
      }
    }
    throw CheckError("malformed formula");
  }

 private:
  StateSet predicate(const std::string& name) {
    const NamedPredicate* p = m_.find_predicate(name);
    if (p == nullptr) throw CheckError("unknown predicate '" + name + "'");
    if (p->param) throw CheckError("predicate '" + name + "' expects an identity argument");
    StateSet out(k_.size());
    for (std::size_t s = 0; s < k_.size(); ++s)
      if (eval_predicate(m_, k_.graph(s), p->body)) out.insert(s);
    return out;
  }

  StateSet ex(const StateSet& z) const { return pre_exists(k_, z, options_.exec); }
  StateSet ax(const StateSet& z) const { return pre_forall(k_, z, options_.exec); }

  template <typename F>
  StateSet least(CtlFormula::Op op, F&& body) {
    SetTransformer t = body;
    spot_check(t);
    FixpointResult r = lfp_iterate(t, k_.size());
    record(op, true, r);
    return std::move(r.set);
  }

  template <typename F>
  StateSet greatest(CtlFormula::Op op, F&& body) {
    SetTransformer t = body;
    spot_check(t);
    FixpointResult r = gfp_iterate(t, k_.size());
    record(op, false, r);
    return std::move(r.set);
  }

  void spot_check(const SetTransformer& t) {
    if (!options_.check_monotone) return;
    if (!spot_check_monotone(t, k_.size(), kMonotoneSamples, 0x5eedULL + checks_++))
      throw CheckError("fixpoint transformer failed the monotonicity spot check");
  }

  void record(CtlFormula::Op op, bool least, const FixpointResult& r) {
    if (stats_ != nullptr) stats_->fixpoints.push_back({op, least, r.iterations, r.monotone_chain});
  }

  // sat(AG g) must equal the complement of sat(EF !g).
  void check_duality(const StateSet& g, const StateSet& ag) {
    const StateSet bad = g.complement();
    SetTransformer t = [&](const StateSet& z) { return bad | ex(z); };
    FixpointResult ef = lfp_iterate(t, k_.size());
    if (stats_ != nullptr) ++stats_->duality_checks;
    if (!(ef.set.complement() == ag)) throw CheckError("AG/EF duality violated");
  }

  const KripkeModel& k_;
  const Model& m_;
  const EvalOptions& options_;
  EvalStats* stats_;
  std::uint64_t checks_ = 0;
};

}  // namespace

StateSet eval_ctl(const KripkeModel& k, const CtlFormula& f, const Model& m,
                  const EvalOptions& options, EvalStats* stats) {
  return Evaluator(k, m, options, stats).eval(f);
}

Verdict check(const KripkeModel& k, const CtlFormula& f, const Model& m,
              const EvalOptions& options, EvalStats* stats) {
  Verdict v;
  v.sat = eval_ctl(k, f, m, options, stats);
  v.holds = k.init_set().subset_of(v.sat);
  return v;
}

std::optional<Trace> shortest_path(const KripkeModel& k, const StateSet& target) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(k.size(), kNone);
  std::vector<std::size_t> via(k.size(), kNone);
  std::vector<bool> seen(k.size(), false);
  std::deque<std::size_t> queue;

  std::vector<std::size_t> roots = k.init();
  std::sort(roots.begin(), roots.end());
  for (std::size_t r : roots) {
    if (seen[r]) continue;
    seen[r] = true;
    queue.push_back(r);
  }

  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    if (target.contains(s)) {
      Trace t;
      for (std::size_t cur = s; cur != kNone; cur = parent[cur]) {
        t.states.push_back(cur);
        if (parent[cur] != kNone) t.labels.push_back(k.edges(parent[cur])[via[cur]].label);
      }
      std::reverse(t.states.begin(), t.states.end());
      std::reverse(t.labels.begin(), t.labels.end());
      return t;
    }
    const auto& out = k.edges(s);
    for (std::size_t e = 0; e < out.size(); ++e) {
      const std::size_t t = out[e].target;
      if (seen[t]) continue;
      seen[t] = true;
      parent[t] = s;
      via[t] = e;
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

Trace extract_trace(const KripkeModel& k, const CtlFormula& f, TraceMode mode, const Model& m,
                    const EvalOptions& options) {
  using Op = CtlFormula::Op;
  if (mode == TraceMode::witness) {
    if (f.op != Op::ef) throw CheckError("a witness needs a formula of the form EF g");
    const StateSet goal = eval_ctl(k, f.args.at(0), m, options);
    auto path = shortest_path(k, goal);
    if (!path) throw CheckError("EF formula does not hold at any initial state; no witness");
    return *path;
  }
  if (f.op != Op::ag) throw CheckError("a counterexample needs a formula of the form AG g");
  if (check(k, f, m, options).holds)
    throw CheckError("AG formula holds; there is no counterexample");
  const StateSet good = eval_ctl(k, f.args.at(0), m, options);
  auto path = shortest_path(k, good.complement());
  if (!path) throw CheckError("AG formula fails but no violating state is reachable");
  return *path;
}

}  // namespace insider
