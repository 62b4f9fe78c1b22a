#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "insider/format.hpp"
#include "lexer.hpp"

namespace insider {

using detail::quote_if_needed;
using detail::Tok;
using detail::Token;
using detail::TokenStream;

namespace {

constexpr std::string_view kSectionOrder[] = {
    "model",    "locations",       "identities",      "sets",     "edges",
    "credentials", "roles",        "placements",      "location_values",
    "value_alphabets", "policies", "active",          "insiders", "predicates",
    "assumptions",
};

const std::set<std::string_view> kPredicateKeywords = {"true", "false", "enables", "at",
                                                       "isin", "count", "in"};

struct Line {
  std::vector<Token> tokens;
};

struct Section {
  std::string name;
  std::string arg;
  Token header;
  std::vector<Line> lines;
};

struct PendingCall {
  Token at;
  bool has_argument = false;
};

class ModelParser {
 public:
  Model run(std::string_view text);

 private:
  void split(std::string_view text);
  void guarded(const Token& at, const std::function<void()>& body);
  void diag(const Token& at, std::string message) {
    diagnostics_.push_back({at.line, at.column, std::move(message)});
  }

  const Section* section(std::string_view name) const;
  template <class F>
  void each_line(std::string_view name, F&& f) {
    for (const auto& s : sections_) {
      if (s.name != name) continue;
      for (const auto& line : s.lines) {
        guarded(line.tokens.front(), [&] {
          TokenStream ts(line.tokens);
          f(ts);
          ts.expect_end();
        });
      }
    }
  }

  LocIndex loc(TokenStream& ts);
  IdIndex ident(TokenStream& ts);
  std::vector<std::string> words_until_end(TokenStream& ts);

  void parse_locations();
  void parse_identities();
  void parse_sets();
  void parse_edges();
  void parse_tokens(std::string_view section, std::vector<std::vector<std::string>>& table);
  void parse_placements();
  void parse_values();
  void parse_alphabets();
  void parse_policies();
  void parse_active();
  void parse_insiders();
  void parse_predicates();
  void parse_assumptions();

  PolicyCondition cond_or(TokenStream& ts);
  PolicyCondition cond_and(TokenStream& ts);
  PolicyCondition cond_unary(TokenStream& ts);
  PolicyCondition cond_atom(TokenStream& ts);
  ActionSet actions(TokenStream& ts);

  StatePredicate pred_or(TokenStream& ts);
  StatePredicate pred_and(TokenStream& ts);
  StatePredicate pred_unary(TokenStream& ts);
  StatePredicate pred_atom(TokenStream& ts);
  IdentityArg pred_identity(TokenStream& ts);

  Model m_;
  std::vector<Section> sections_;
  std::vector<Diagnostic> diagnostics_;
  bool have_locations_ = false;
  std::optional<std::string> param_;
  std::vector<PendingCall> calls_;
};

void ModelParser::guarded(const Token& at, const std::function<void()>& body) {
  try {
    body();
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics()) diagnostics_.push_back(d);
  } catch (const ModelError& e) {
    diag(at, e.what());
  }
}

void ModelParser::split(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  Section* current = nullptr;
  std::set<std::pair<std::string, std::string>> seen;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    pos = end + 1;

    std::vector<Token> tokens;
    try {
      tokens = detail::tokenize(raw, line_no);
    } catch (const ParseError& e) {
      for (const auto& d : e.diagnostics()) diagnostics_.push_back(d);
      continue;
    }
    if (tokens.size() == 1) continue;  // blank or comment

    if (tokens[0].kind == Tok::punct && tokens[0].text == "[") {
      guarded(tokens[0], [&] {
        TokenStream ts(tokens);
        ts.expect("[");
        Section s;
        s.header = ts.expect_word("section name");
        s.name = s.header.text;
        if (ts.peek().kind == Tok::word) s.arg = ts.next().text;
        ts.expect("]");
        ts.expect_end();
        const bool known = std::find(std::begin(kSectionOrder), std::end(kSectionOrder),
                                     s.name) != std::end(kSectionOrder);
        if (!known) ts.fail(s.header, "unknown section '" + s.name + "'");
        if (s.name == "policies" && s.arg.empty())
          ts.fail(s.header, "policies section needs a variant name");
        if (s.name != "policies" && !s.arg.empty())
          ts.fail(s.header, "section '" + s.name + "' takes no argument");
        if (!seen.insert({s.name, s.arg}).second)
          ts.fail(s.header, "duplicate section '" + s.name + (s.arg.empty() ? "" : " " + s.arg) +
                                "'");
        sections_.push_back(std::move(s));
        current = &sections_.back();
      });
      continue;
    }
    if (current == nullptr) {
      diag(tokens[0], "content outside a section");
      continue;
    }
    current->lines.push_back({std::move(tokens)});
  }
}

const Section* ModelParser::section(std::string_view name) const {
  for (const auto& s : sections_)
    if (s.name == name) return &s;
  return nullptr;
}

LocIndex ModelParser::loc(TokenStream& ts) {
  const Token t = ts.expect_word("location");
  if (auto l = m_.find_location(t.text)) return *l;
  ts.fail(t, "unknown location '" + t.text + "'");
}

IdIndex ModelParser::ident(TokenStream& ts) {
  const Token t = ts.expect_word("identity");
  if (auto i = m_.find_identity(t.text)) return *i;
  ts.fail(t, "unknown identity '" + t.text + "'");
}

std::vector<std::string> ModelParser::words_until_end(TokenStream& ts) {
  std::vector<std::string> out;
  while (!ts.at_end()) out.push_back(ts.expect_word("token").text);
  return out;
}

void ModelParser::parse_locations() {
  struct Entry {
    Location loc;
    Token at;
  };
  std::vector<Entry> entries;
  each_line("locations", [&](TokenStream& ts) {
    const Token name = ts.expect_word("location name");
    const Token id_tok = ts.peek();
    const std::size_t id = ts.expect_number("location id");
    if (id > UINT32_MAX) ts.fail(id_tok, "location id out of range");
    for (const auto& e : entries) {
      if (e.loc.name == name.text)
        ts.fail(name, "duplicate location '" + name.text + "' (first at line " +
                          std::to_string(e.at.line) + ")");
      if (e.loc.id == id)
        ts.fail(id_tok, "duplicate location id " + std::to_string(id) + " (first at line " +
                            std::to_string(e.at.line) + ")");
    }
    entries.push_back({{static_cast<std::uint32_t>(id), name.text}, name});
  });
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.loc.id < b.loc.id; });
  for (auto& e : entries) m_.locations.push_back(std::move(e.loc));
  have_locations_ = !m_.locations.empty();
  if (!have_locations_) {
    const Section* s = section("locations");
    Token at = s != nullptr ? s->header : Token{};
    diag(at, "model needs at least one location");
  }
  const std::size_t n = m_.locations.size();
  m_.initial.placements.assign(n, {});
  m_.initial.values.assign(n, std::nullopt);
  m_.value_alphabet.assign(n, {});
}

void ModelParser::parse_identities() {
  std::map<std::string, std::size_t> first;
  each_line("identities", [&](TokenStream& ts) {
    while (!ts.at_end()) {
      const Token t = ts.expect_word("identity");
      auto [it, fresh] = first.emplace(t.text, t.line);
      if (!fresh)
        ts.fail(t, "duplicate identity '" + t.text + "' (first at line " +
                       std::to_string(it->second) + ")");
      m_.identities.push_back(t.text);
    }
  });
  std::sort(m_.identities.begin(), m_.identities.end());
  m_.initial.credentials.assign(m_.identities.size(), {});
  m_.initial.roles.assign(m_.identities.size(), {});
}

void ModelParser::parse_sets() {
  each_line("sets", [&](TokenStream& ts) {
    const Token name = ts.expect_word("set name");
    if (m_.find_set(name.text) != nullptr) ts.fail(name, "duplicate set '" + name.text + "'");
    ts.expect("=");
    IdentitySet s{name.text, {}};
    while (!ts.at_end()) s.members.push_back(ident(ts));
    std::sort(s.members.begin(), s.members.end());
    s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
    m_.sets.push_back(std::move(s));
  });
}

void ModelParser::parse_edges() {
  each_line("edges", [&](TokenStream& ts) {
    const LocIndex a = loc(ts);
    ts.expect("->");
    const LocIndex b = loc(ts);
    m_.initial.edges.emplace_back(a, b);
  });
}

void ModelParser::parse_tokens(std::string_view name,
                               std::vector<std::vector<std::string>>& table) {
  each_line(name, [&](TokenStream& ts) {
    const IdIndex who = ident(ts);
    ts.expect("=");
    for (auto& t : words_until_end(ts)) insert_token(table[who], std::move(t));
  });
}

void ModelParser::parse_placements() {
  std::map<IdIndex, Token> placed;
  each_line("placements", [&](TokenStream& ts) {
    const LocIndex where = loc(ts);
    ts.expect("=");
    while (!ts.at_end()) {
      const Token t = ts.peek();
      const IdIndex who = ident(ts);
      auto [it, fresh] = placed.emplace(who, t);
      if (!fresh)
        ts.fail(t, "identity '" + t.text + "' placed twice (first at line " +
                       std::to_string(it->second.line) +
                       "); an identity occupies at most one location, once");
      m_.initial.placements[where].push_back(who);
    }
  });
}

void ModelParser::parse_values() {
  std::map<LocIndex, std::size_t> seen;
  each_line("location_values", [&](TokenStream& ts) {
    const Token at = ts.peek();
    const LocIndex where = loc(ts);
    if (!seen.emplace(where, at.line).second)
      ts.fail(at, "location '" + at.text + "' already has a value");
    ts.expect("=");
    m_.initial.values[where] = ts.expect_word("value").text;
  });
}

void ModelParser::parse_alphabets() {
  each_line("value_alphabets", [&](TokenStream& ts) {
    const LocIndex where = loc(ts);
    ts.expect("=");
    for (auto& t : words_until_end(ts)) m_.value_alphabet[where].push_back(std::move(t));
    auto& a = m_.value_alphabet[where];
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  });
}

ActionSet ModelParser::actions(TokenStream& ts) {
  ActionSet out;
  ts.expect("{");
  if (!ts.accept("}")) {
    do {
      const Token t = ts.expect_word("action");
      auto a = parse_action(t.text);
      if (!a) ts.fail(t, "unknown action '" + t.text + "'");
      out.insert(*a);
    } while (ts.accept(","));
    ts.expect("}");
  }
  return out;
}

PolicyCondition ModelParser::cond_or(TokenStream& ts) {
  std::vector<PolicyCondition> ops{cond_and(ts)};
  while (ts.accept("|")) ops.push_back(cond_and(ts));
  return ops.size() == 1 ? std::move(ops.front()) : PolicyCondition::disj(std::move(ops));
}

PolicyCondition ModelParser::cond_and(TokenStream& ts) {
  std::vector<PolicyCondition> ops{cond_unary(ts)};
  while (ts.accept("&")) ops.push_back(cond_unary(ts));
  return ops.size() == 1 ? std::move(ops.front()) : PolicyCondition::conj(std::move(ops));
}

PolicyCondition ModelParser::cond_unary(TokenStream& ts) {
  if (ts.accept("!")) return PolicyCondition::neg(cond_unary(ts));
  if (ts.accept("(")) {
    PolicyCondition c = cond_or(ts);
    ts.expect(")");
    return c;
  }
  return cond_atom(ts);
}

PolicyCondition ModelParser::cond_atom(TokenStream& ts) {
  using C = PolicyCondition;
  const Token t = ts.expect_word("condition");
  const std::string& w = t.text;
  if (t.quoted) ts.fail(t, "unknown condition '" + w + "'");
  if (w == "true") return C::always();
  ts.expect("(");
  C out;
  if (w == "at") {
    out = C::requester_at(loc(ts));
  } else if (w == "has") {
    out = C::has_cred(ts.expect_word("credential").text);
  } else if (w == "role") {
    out = C::has_role(ts.expect_word("role").text);
  } else if (w == "isin") {
    const LocIndex l = loc(ts);
    ts.expect(",");
    out = C::is_in(l, ts.expect_word("value").text);
  } else if (w == "count") {
    const LocIndex l = loc(ts);
    ts.expect(")");
    ts.expect(">=");
    return C::count_at_least(l, ts.expect_number("count"));
  } else if (w == "all_in") {
    const LocIndex l = loc(ts);
    ts.expect(",");
    if (ts.accept("{")) {
      std::vector<IdIndex> ids;
      if (!ts.accept("}")) {
        do ids.push_back(ident(ts));
        while (ts.accept(","));
        ts.expect("}");
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      out = C::all_at_authorized(l, std::move(ids));
    } else {
      const Token name = ts.expect_word("set name");
      const IdentitySet* s = m_.find_set(name.text);
      if (s == nullptr) ts.fail(name, "unknown set '" + name.text + "'");
      out = C::all_at_authorized(l, s->members, name.text);
    }
  } else {
    ts.fail(t, "unknown condition '" + w + "'");
  }
  ts.expect(")");
  return out;
}

void ModelParser::parse_policies() {
  for (const auto& s : sections_) {
    if (s.name != "policies") continue;
    PolicyVariant v;
    v.name = s.arg;
    v.by_location.assign(m_.locations.size(), {});
    for (const auto& line : s.lines) {
      guarded(line.tokens.front(), [&] {
        TokenStream ts(line.tokens);
        const LocIndex where = loc(ts);
        ts.expect(":");
        PolicyCondition c = cond_or(ts);
        ts.expect("->");
        const Token at = ts.peek();
        ActionSet a = actions(ts);
        if (a.empty()) ts.fail(at, "policy grants no action");
        ts.expect_end();
        v.by_location[where].push_back({std::move(c), a});
      });
    }
    m_.variants.push_back(std::move(v));
  }
  if (m_.variants.empty()) {
    m_.variants.push_back({"default", std::vector<std::vector<AtomicPolicy>>(m_.locations.size())});
  }
}

void ModelParser::parse_active() {
  each_line("active", [&](TokenStream& ts) {
    const Token t = ts.expect_word("variant name");
    for (std::size_t i = 0; i < m_.variants.size(); ++i) {
      if (m_.variants[i].name == t.text) {
        m_.active_variant = i;
        return;
      }
    }
    ts.fail(t, "unknown policy variant '" + t.text + "'");
  });
}

void ModelParser::parse_insiders() {
  each_line("insiders", [&](TokenStream& ts) {
    InsiderDecl d;
    const IdIndex who = ident(ts);
    d.id = m_.identities[who];
    ts.expect("->");
    while (ts.peek().kind == Tok::word) {
      const Token t = ts.peek();
      const IdIndex alter = ident(ts);
      if (alter == who) ts.fail(t, "an insider cannot be its own alter ego");
      d.alter_egos.push_back(m_.identities[alter]);
    }
    std::sort(d.alter_egos.begin(), d.alter_egos.end());
    d.alter_egos.erase(std::unique(d.alter_egos.begin(), d.alter_egos.end()),
                       d.alter_egos.end());
    ts.expect(":");
    const Token psy = ts.expect_word("psychological state");
    auto p = parse_psy_state(psy.text);
    if (!p) ts.fail(psy, "unknown psychological state '" + psy.text + "'");
    d.state.psy = *p;
    ts.expect("{");
    if (!ts.accept("}")) {
      do {
        const Token mt = ts.expect_word("motivation");
        auto mv = parse_motivation(mt.text);
        if (!mv) ts.fail(mt, "unknown motivation '" + mt.text + "'");
        d.state.motivations.insert(*mv);
      } while (ts.accept(","));
      ts.expect("}");
    }
    m_.insiders.push_back(std::move(d));
  });
}

IdentityArg ModelParser::pred_identity(TokenStream& ts) {
  const Token t = ts.expect_word("identity");
  if (param_ && t.text == *param_) return IdentityArg::parameter(t.text);
  if (auto i = m_.find_identity(t.text)) return IdentityArg::of(*i);
  ts.fail(t, "unknown identity or parameter '" + t.text + "'");
}

StatePredicate ModelParser::pred_or(TokenStream& ts) {
  std::vector<StatePredicate> ops{pred_and(ts)};
  while (ts.accept("|")) ops.push_back(pred_and(ts));
  return ops.size() == 1 ? std::move(ops.front()) : StatePredicate::disj(std::move(ops));
}

StatePredicate ModelParser::pred_and(TokenStream& ts) {
  std::vector<StatePredicate> ops{pred_unary(ts)};
  while (ts.accept("&")) ops.push_back(pred_unary(ts));
  return ops.size() == 1 ? std::move(ops.front()) : StatePredicate::conj(std::move(ops));
}

StatePredicate ModelParser::pred_unary(TokenStream& ts) {
  if (ts.accept("!")) return StatePredicate::neg(pred_unary(ts));
  if (ts.accept("(")) {
    StatePredicate p = pred_or(ts);
    ts.expect(")");
    return p;
  }
  return pred_atom(ts);
}

StatePredicate ModelParser::pred_atom(TokenStream& ts) {
  using P = StatePredicate;
  const Token t = ts.expect_word("predicate");
  const std::string& w = t.text;
  const bool keyword = !t.quoted && kPredicateKeywords.count(w) != 0;
  if (!keyword) {
    if (ts.accept("(")) {
      IdentityArg arg = pred_identity(ts);
      ts.expect(")");
      calls_.push_back({t, true});
      return P::call(w, std::move(arg));
    }
    calls_.push_back({t, false});
    return P::call(w);
  }
  if (w == "true") return P::constant(true);
  if (w == "false") return P::constant(false);
  ts.expect("(");
  P out;
  if (w == "enables") {
    const LocIndex l = loc(ts);
    ts.expect(",");
    IdentityArg who = pred_identity(ts);
    ts.expect(",");
    const Token at = ts.expect_word("action");
    auto a = parse_action(at.text);
    if (!a) ts.fail(at, "unknown action '" + at.text + "'");
    out = P::enables(l, std::move(who), *a);
  } else if (w == "at") {
    IdentityArg who = pred_identity(ts);
    ts.expect(",");
    out = P::at(std::move(who), loc(ts));
  } else if (w == "isin") {
    const LocIndex l = loc(ts);
    ts.expect(",");
    out = P::is_in(l, ts.expect_word("value").text);
  } else if (w == "count") {
    const LocIndex l = loc(ts);
    ts.expect(")");
    ts.expect(">=");
    return P::count_at_least(l, ts.expect_number("count"));
  } else {  // in
    IdentityArg who = pred_identity(ts);
    ts.expect(",");
    const Token name = ts.expect_word("set name");
    if (m_.find_set(name.text) == nullptr) ts.fail(name, "unknown set '" + name.text + "'");
    out = P::in_set(std::move(who), name.text);
  }
  ts.expect(")");
  return out;
}

void ModelParser::parse_predicates() {
  std::map<std::string, std::size_t> first;
  each_line("predicates", [&](TokenStream& ts) {
    const Token name = ts.expect_word("predicate name");
    auto [it, fresh] = first.emplace(name.text, name.line);
    if (!fresh)
      ts.fail(name, "duplicate predicate '" + name.text + "' (first at line " +
                        std::to_string(it->second) + ")");
    NamedPredicate p;
    p.name = name.text;
    param_.reset();
    if (ts.accept("(")) {
      const Token param = ts.expect_word("parameter");
      if (m_.find_identity(param.text))
        ts.fail(param, "parameter '" + param.text + "' shadows an identity");
      param_ = param.text;
      p.param = param.text;
      ts.expect(")");
    }
    ts.expect(":=");
    p.body = pred_or(ts);
    param_.reset();
    m_.predicates.push_back(std::move(p));
  });
  for (const auto& call : calls_) {
    const NamedPredicate* callee = m_.find_predicate(call.at.text);
    if (callee == nullptr) {
      diag(call.at, "unknown predicate '" + call.at.text + "'");
    } else if (callee->param.has_value() != call.has_argument) {
      diag(call.at, "predicate '" + call.at.text + "' " +
                        (callee->param ? "expects an identity argument" : "takes no argument"));
    }
  }
}

void ModelParser::parse_assumptions() {
  each_line("assumptions", [&](TokenStream& ts) {
    const Token kw = ts.expect_word("assumption");
    if (kw.text != "foe") ts.fail(kw, "unknown assumption '" + kw.text + "'");
    FoeControl f;
    f.location = loc(ts);
    const Token at = ts.expect_word("action");
    auto a = parse_action(at.text);
    if (!a) ts.fail(at, "unknown action '" + at.text + "'");
    f.action = *a;
    f.foe = ident(ts);
    m_.assumptions.push_back(f);
  });
}

Model ModelParser::run(std::string_view text) {
  split(text);
  each_line("model", [&](TokenStream& ts) {
    if (!m_.name.empty()) ts.fail(ts.peek(), "model name given twice");
    m_.name = ts.expect_word("model name").text;
  });
  parse_locations();
  if (have_locations_) {
    parse_identities();
    parse_sets();
    parse_edges();
    parse_tokens("credentials", m_.initial.credentials);
    parse_tokens("roles", m_.initial.roles);
    parse_placements();
    parse_values();
    parse_alphabets();
    parse_policies();
    parse_active();
    parse_insiders();
    parse_predicates();
    parse_assumptions();
  }

  if (diagnostics_.empty()) {
    try {
      finalize(m_);
    } catch (const ModelError& e) {
      diagnostics_.push_back({1, 1, e.what()});
    }
  }
  if (!diagnostics_.empty()) {
    std::stable_sort(diagnostics_.begin(), diagnostics_.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                       return std::tie(a.line, a.column) < std::tie(b.line, b.column);
                     });
    throw ParseError(std::move(diagnostics_));
  }
  return std::move(m_);
}

// Printing.

std::string q(std::string_view s) { return quote_if_needed(s); }

std::string pred_name(std::string_view s) {
  if (kPredicateKeywords.count(s) != 0) return "\"" + std::string(s) + "\"";
  return q(s);
}

std::string print_actions(ActionSet a) {
  std::string out = "{";
  bool first = true;
  for (Action x : {Action::get, Action::move, Action::eval, Action::put}) {
    if (!a.contains(x)) continue;
    if (!first) out += ", ";
    out += to_string(x);
    first = false;
  }
  return out + "}";
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += " " + q(w);
  return out;
}

std::string print_arg(const Model& m, const IdentityArg& a) {
  return a.identity ? q(m.identity_name(*a.identity)) : q(a.param);
}

}  // namespace

Model parse_model(std::string_view text) { return ModelParser().run(text); }

std::string print_condition(const Model& m, const PolicyCondition& c) {
  using K = PolicyCondition::Kind;
  auto wrapped = [&](const PolicyCondition& op, bool wrap_conj) {
    const bool paren = op.kind == K::disj || (wrap_conj && op.kind == K::conj);
    return paren ? "(" + print_condition(m, op) + ")" : print_condition(m, op);
  };
  auto loc = [&](LocIndex l) { return q(m.location_name(l)); };
  switch (c.kind) {
    case K::always:
      return "true";
    case K::requester_at:
      return "at(" + loc(c.location) + ")";
    case K::has_cred:
      return "has(" + q(c.token) + ")";
    case K::has_role:
      return "role(" + q(c.token) + ")";
    case K::is_in:
      return "isin(" + loc(c.location) + ", " + q(c.token) + ")";
    case K::count_at_least:
      return "count(" + loc(c.location) + ") >= " + std::to_string(c.count);
    case K::all_at_authorized: {
      if (!c.token.empty()) return "all_in(" + loc(c.location) + ", " + q(c.token) + ")";
      std::string out = "all_in(" + loc(c.location) + ", {";
      for (std::size_t i = 0; i < c.allowed.size(); ++i)
        out += (i ? ", " : "") + q(m.identity_name(c.allowed[i]));
      return out + "})";
    }
    case K::neg:
      return "!" + wrapped(c.operands.at(0), true);
    case K::conj:
    case K::disj: {
      const bool is_conj = c.kind == K::conj;
      std::string out;
      for (std::size_t i = 0; i < c.operands.size(); ++i) {
        if (i) out += is_conj ? " & " : " | ";
        const auto& op = c.operands[i];
        const bool paren = op.kind == K::disj || (is_conj && op.kind == K::conj);
        out += paren ? "(" + print_condition(m, op) + ")" : print_condition(m, op);
      }
      return out;
    }
  }
  return {};
}

std::string print_predicate(const Model& m, const StatePredicate& p) {
  using K = StatePredicate::Kind;
  auto loc = [&](LocIndex l) { return q(m.location_name(l)); };
  switch (p.kind) {
    case K::constant:
      return p.value ? "true" : "false";
    case K::enables:
      return "enables(" + loc(p.location) + ", " + print_arg(m, p.identity) + ", " +
             std::string(to_string(p.action)) + ")";
    case K::at:
      return "at(" + print_arg(m, p.identity) + ", " + loc(p.location) + ")";
    case K::is_in:
      return "isin(" + loc(p.location) + ", " + q(p.token) + ")";
    case K::count_at_least:
      return "count(" + loc(p.location) + ") >= " + std::to_string(p.count);
    case K::in_set:
      return "in(" + print_arg(m, p.identity) + ", " + q(p.token) + ")";
    case K::call:
      return pred_name(p.token) + (p.has_argument ? "(" + print_arg(m, p.identity) + ")" : "");
    case K::neg: {
      const auto& op = p.operands.at(0);
      const bool paren = op.kind == K::conj || op.kind == K::disj;
      return "!" + (paren ? "(" + print_predicate(m, op) + ")" : print_predicate(m, op));
    }
    case K::conj:
    case K::disj: {
      const bool is_conj = p.kind == K::conj;
      std::string out;
      for (std::size_t i = 0; i < p.operands.size(); ++i) {
        if (i) out += is_conj ? " & " : " | ";
        const auto& op = p.operands[i];
        const bool paren = op.kind == K::disj || (is_conj && op.kind == K::conj);
        out += paren ? "(" + print_predicate(m, op) + ")" : print_predicate(m, op);
      }
      return out;
    }
  }
  return {};
}

std::string serialize_model(const Model& m) {
  std::ostringstream os;
  const auto& g = m.initial;
  auto section = [&](std::string_view name) {
    if (os.tellp() > 0) os << '\n';
    os << '[' << name << "]\n";
  };

  if (!m.name.empty()) {
    section("model");
    os << q(m.name) << '\n';
  }

  section("locations");
  for (const auto& l : m.locations) os << q(l.name) << ' ' << l.id << '\n';

  if (!m.identities.empty()) {
    section("identities");
    for (const auto& i : m.identities) os << q(i) << '\n';
  }

  if (!m.sets.empty()) {
    section("sets");
    for (const auto& s : m.sets) {
      os << q(s.name) << " =";
      for (IdIndex i : s.members) os << ' ' << q(m.identity_name(i));
      os << '\n';
    }
  }

  if (!g.edges.empty()) {
    section("edges");
    for (const auto& [a, b] : g.edges)
      os << q(m.location_name(a)) << " -> " << q(m.location_name(b)) << '\n';
  }

  auto token_table = [&](std::string_view name, const std::vector<std::vector<std::string>>& t) {
    if (std::all_of(t.begin(), t.end(), [](const auto& v) { return v.empty(); })) return;
    section(name);
    for (IdIndex i = 0; i < t.size(); ++i)
      if (!t[i].empty()) os << q(m.identity_name(i)) << " =" << join_words(t[i]) << '\n';
  };
  token_table("credentials", g.credentials);
  token_table("roles", g.roles);

  if (std::any_of(g.placements.begin(), g.placements.end(),
                  [](const auto& v) { return !v.empty(); })) {
    section("placements");
    for (LocIndex l = 0; l < g.placements.size(); ++l) {
      if (g.placements[l].empty()) continue;
      os << q(m.location_name(l)) << " =";
      for (IdIndex i : g.placements[l]) os << ' ' << q(m.identity_name(i));
      os << '\n';
    }
  }

  if (std::any_of(g.values.begin(), g.values.end(), [](const auto& v) { return v.has_value(); })) {
    section("location_values");
    for (LocIndex l = 0; l < g.values.size(); ++l)
      if (g.values[l]) os << q(m.location_name(l)) << " = " << q(*g.values[l]) << '\n';
  }

  if (std::any_of(m.value_alphabet.begin(), m.value_alphabet.end(),
                  [](const auto& v) { return !v.empty(); })) {
    section("value_alphabets");
    for (LocIndex l = 0; l < m.value_alphabet.size(); ++l)
      if (!m.value_alphabet[l].empty())
        os << q(m.location_name(l)) << " =" << join_words(m.value_alphabet[l]) << '\n';
  }

  for (const auto& v : m.variants) {
    section("policies " + q(v.name));
    for (LocIndex l = 0; l < v.by_location.size(); ++l)
      for (const auto& p : v.by_location[l])
        os << q(m.location_name(l)) << " : " << print_condition(m, p.condition) << " -> "
           << print_actions(p.actions) << '\n';
  }

  section("active");
  os << q(m.active().name) << '\n';

  if (!m.insiders.empty()) {
    section("insiders");
    for (const auto& d : m.insiders) {
      os << q(d.id) << " ->" << join_words(d.alter_egos) << " : " << to_string(d.state.psy)
         << " {";
      bool first = true;
      for (Motivation mv : d.state.motivations) {
        os << (first ? "" : ", ") << to_string(mv);
        first = false;
      }
      os << "}\n";
    }
  }

  if (!m.predicates.empty()) {
    section("predicates");
    for (const auto& p : m.predicates) {
      os << q(p.name);
      if (p.param) os << '(' << q(*p.param) << ')';
      os << " := " << print_predicate(m, p.body) << '\n';
    }
  }

  if (!m.assumptions.empty()) {
    section("assumptions");
    for (const auto& f : m.assumptions)
      os << "foe " << q(m.location_name(f.location)) << ' ' << to_string(f.action) << ' '
         << q(m.identity_name(f.foe)) << '\n';
  }
  return os.str();
}

}  // namespace insider
