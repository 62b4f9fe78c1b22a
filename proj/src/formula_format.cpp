#include <set>

#include "insider/format.hpp"
#include "lexer.hpp"

namespace insider {

using detail::Tok;
using detail::Token;
using detail::TokenStream;

namespace {

using Op = CtlFormula::Op;

const std::set<std::string_view> kKeywords = {"EX", "AX", "EF", "AF", "EG",
                                              "AG", "E",  "A",  "U",  "R"};

std::optional<Op> prefix_op(const Token& t) {
  if (t.kind != Tok::word || t.quoted) return std::nullopt;
  if (t.text == "EX") return Op::ex;
  if (t.text == "AX") return Op::ax;
  if (t.text == "EF") return Op::ef;
  if (t.text == "AF") return Op::af;
  if (t.text == "EG") return Op::eg;
  if (t.text == "AG") return Op::ag;
  return std::nullopt;
}

bool is_keyword(const Token& t, std::string_view k) {
  return t.kind == Tok::word && !t.quoted && t.text == k;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : ts_(detail::tokenize(text)) {}

  CtlFormula run() {
    if (ts_.at_end()) ts_.fail(ts_.peek(), "empty formula");
    CtlFormula f = disj();
    ts_.expect_end();
    return f;
  }

 private:
  CtlFormula disj() {
    CtlFormula f = conj();
    while (ts_.accept("|")) f = CtlFormula::disj(std::move(f), conj());
    return f;
  }

  CtlFormula conj() {
    CtlFormula f = unary();
    while (ts_.accept("&")) f = CtlFormula::conj(std::move(f), unary());
    return f;
  }

  CtlFormula unary() {
    if (ts_.accept("!")) return CtlFormula::neg(unary());
    if (ts_.accept("(")) {
      CtlFormula f = disj();
      ts_.expect(")");
      return f;
    }
    const Token& t = ts_.peek();
    if (auto op = prefix_op(t)) {
      ts_.next();
      return CtlFormula::unary(*op, unary());
    }
    if (is_keyword(t, "E") || is_keyword(t, "A")) {
      const bool exists = t.text == "E";
      ts_.next();
      ts_.expect("[");
      CtlFormula a = disj();
      const Token mid = ts_.peek();
      Op op;
      if (is_keyword(mid, "U")) {
        op = exists ? Op::eu : Op::au;
      } else if (is_keyword(mid, "R")) {
        op = exists ? Op::er : Op::ar;
      } else {
        ts_.fail(mid, "expected 'U' or 'R'");
      }
      ts_.next();
      CtlFormula b = disj();
      ts_.expect("]");
      return CtlFormula::binary(op, std::move(a), std::move(b));
    }
    if (t.kind != Tok::word) ts_.fail(t, "expected a formula");
    if (!t.quoted && kKeywords.count(t.text) != 0)
      ts_.fail(t, "unexpected keyword '" + t.text + "'");
    return CtlFormula::pred(ts_.next().text);
  }

  TokenStream ts_;
};

std::string_view prefix_name(Op op) {
  switch (op) {
    case Op::ex:
      return "EX";
    case Op::ax:
      return "AX";
    case Op::ef:
      return "EF";
    case Op::af:
      return "AF";
    case Op::eg:
      return "EG";
    case Op::ag:
      return "AG";
    default:
      return "";
  }
}

bool is_connective(const CtlFormula& f) { return f.op == Op::conj || f.op == Op::disj; }

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

CtlFormula parse_formula(std::string_view text) { return FormulaParser(text).run(); }

std::string print_formula(const CtlFormula& f) {
  switch (f.op) {
    case Op::pred:
      return kKeywords.count(f.name) != 0 ? "\"" + f.name + "\"" : detail::quote_if_needed(f.name);
    case Op::neg:
    case Op::ex:
    case Op::ax:
    case Op::ef:
    case Op::af:
    case Op::eg:
    case Op::ag: {
      const auto& a = f.args.at(0);
      const std::string inner = is_connective(a) ? paren(print_formula(a)) : print_formula(a);
      if (f.op == Op::neg) return "!" + inner;
      return std::string(prefix_name(f.op)) + " " + inner;
    }
    case Op::conj:
    case Op::disj: {
      // Both connectives associate to the left.
      const auto& l = f.args.at(0);
      const auto& r = f.args.at(1);
      const bool is_conj = f.op == Op::conj;
      const bool wrap_l = is_conj && l.op == Op::disj;
      const bool wrap_r = is_connective(r) && !(!is_conj && r.op == Op::conj);
      return (wrap_l ? paren(print_formula(l)) : print_formula(l)) + (is_conj ? " & " : " | ") +
             (wrap_r ? paren(print_formula(r)) : print_formula(r));
    }
    case Op::eu:
    case Op::au:
    case Op::er:
    case Op::ar: {
      const char* q = (f.op == Op::eu || f.op == Op::er) ? "E[" : "A[";
      const char* mid = (f.op == Op::eu || f.op == Op::au) ? " U " : " R ";
      return q + print_formula(f.args.at(0)) + mid + print_formula(f.args.at(1)) + "]";
    }
  }
  return {};
}

}  // namespace insider
