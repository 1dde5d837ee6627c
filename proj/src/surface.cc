// Copyright 2026 The dbsyn Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dbsyn/surface.h"

#include <nlohmann/json.hpp>

#include "lexer.h"

namespace dbsyn {

namespace {

template <class T, class F>
std::string join_with(const std::vector<T>& xs, const std::string& sep, F show) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += show(xs[i]);
  }
  return s;
}

void check_op(TokenStream& ts, const BindingSignature* sig, Symbol name, std::size_t got,
              const SourceSpan& span) {
  if (!sig) return;
  const BindingArity* ar = sig->find(name);
  if (!ar) {
    throw Error(make_diagnostic(ErrorKind::kValidation, "unknown operation '" + name.str() + "'",
                                span));
  }
  if (first_order_arity(*ar) != got) {
    throw Error(make_diagnostic(ErrorKind::kValidation,
                                "operation '" + name.str() + "' expects " +
                                    std::to_string(first_order_arity(*ar)) +
                                    " arguments, got " + std::to_string(got),
                                span));
  }
  (void)ts;
}

// Iterative, so arbitrarily deep terms parse without recursion.
Term read_term(TokenStream& ts, const BindingSignature* sig) {
  struct Frame {
    Symbol name;
    std::vector<Term> args;
    SourceSpan open;
  };
  std::vector<Frame> stack;
  while (true) {
    std::optional<Term> done;
    if (ts.at(Tok::kNat)) {
      done = Term::var(ts.expect_nat("a variable index"));
    } else if (ts.at(Tok::kLParen)) {
      Token open = ts.next();
      Token name = ts.expect(Tok::kIdent, "an operation name");
      stack.push_back(Frame{Symbol::intern(name.text), {}, open.span});
      continue;
    } else if (ts.at(Tok::kRParen) && !stack.empty()) {
      Token close = ts.next();
      Frame f = std::move(stack.back());
      stack.pop_back();
      check_op(ts, sig, f.name, f.args.size(), join(f.open, close.span));
      done = Term::op(f.name, std::move(f.args));
    } else {
      ts.fail("expected a term (a natural number or '(')");
    }
    if (stack.empty()) return std::move(*done);
    stack.back().args.push_back(std::move(*done));
  }
}

NamedTerm read_named(TokenStream& ts, const BindingSignature* sig) {
  if (ts.at(Tok::kIdent)) return NamedTerm::variable(ts.next().text);
  Token open = ts.expect(Tok::kLParen, "a name or '('");
  Token name = ts.expect(Tok::kIdent, "an operation name");
  std::vector<NamedArg> args;
  while (!ts.at(Tok::kRParen)) {
    NamedArg a{{}, NamedTerm::variable("")};
    if (ts.accept(Tok::kLBracket)) {
      while (!ts.accept(Tok::kRBracket)) {
        a.binders.push_back(ts.expect(Tok::kIdent, "a binder name or ']'").text);
      }
    }
    a.body = read_named(ts, sig);
    args.push_back(std::move(a));
  }
  Token close = ts.next();
  const Symbol op = Symbol::intern(name.text);
  const SourceSpan span = join(open.span, close.span);
  check_op(ts, sig, op, args.size(), span);
  if (sig) {
    const BindingArity& ar = *sig->find(op);
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i].binders.size() != ar.binders[i]) {
        throw Error(make_diagnostic(
            ErrorKind::kValidation,
            "argument " + std::to_string(i) + " of '" + name.text + "' binds " +
                std::to_string(ar.binders[i]) + " names, got " +
                std::to_string(args[i].binders.size()),
            span));
      }
    }
  }
  return NamedTerm::op(name.text, std::move(args));
}

TypeExpr read_type(TokenStream& ts);

TypeExpr read_type_atom(TokenStream& ts) {
  if (ts.accept(Tok::kLParen)) {
    TypeExpr t = read_type(ts);
    ts.expect(Tok::kRParen, "')'");
    return t;
  }
  TypeExpr t{ts.expect(Tok::kIdent, "a type").text, {}};
  if (ts.accept(Tok::kLParen)) {
    t.args.push_back(read_type(ts));
    while (ts.accept(Tok::kComma)) t.args.push_back(read_type(ts));
    ts.expect(Tok::kRParen, "',' or ')'");
  }
  return t;
}

TypeExpr read_type(TokenStream& ts) {
  TypeExpr from = read_type_atom(ts);
  if (!ts.accept(Tok::kArrow)) return from;
  return TypeExpr::arrow(std::move(from), read_type(ts));
}

std::vector<TypeExpr> read_type_list(TokenStream& ts, Tok close) {
  std::vector<TypeExpr> out;
  if (ts.accept(close)) return out;
  out.push_back(read_type(ts));
  while (ts.accept(Tok::kComma)) out.push_back(read_type(ts));
  ts.expect(close, std::string("',' or ") + describe(close));
  return out;
}

TypedTerm read_typed(TokenStream& ts) {
  ts.expect(Tok::kLParen, "'('");
  if (ts.accept(Tok::kHash)) {
    const std::size_t n = ts.expect_nat("a variable index");
    ts.expect(Tok::kColon, "':'");
    TypeExpr ty = read_type(ts);
    ts.expect(Tok::kRParen, "')'");
    return TypedTerm::var(n, std::move(ty));
  }
  std::string name = ts.expect(Tok::kIdent, "an operation name or '#'").text;
  std::vector<TypeExpr> tys;
  if (name == "op" && ts.at(Tok::kLBracket) && ts.peek(1).kind == Tok::kIdent &&
      ts.peek(2).kind == Tok::kSemicolon) {
    ts.next();
    name = ts.next().text;
    ts.next();
    tys = read_type_list(ts, Tok::kRBracket);
  } else if (ts.accept(Tok::kLBracket)) {
    tys = read_type_list(ts, Tok::kRBracket);
  }
  std::vector<TypedTerm> args;
  while (!ts.accept(Tok::kRParen)) args.push_back(read_typed(ts));
  return TypedTerm::op(name, std::move(tys), std::move(args));
}

TypedNamedTerm read_typed_named(TokenStream& ts) {
  ts.expect(Tok::kLParen, "'('");
  std::string name = ts.expect(Tok::kIdent, "a name").text;
  if (ts.accept(Tok::kColon)) {
    TypeExpr ty = read_type(ts);
    ts.expect(Tok::kRParen, "')'");
    return TypedNamedTerm::variable(std::move(name), std::move(ty));
  }
  auto binder_list_ahead = [&ts] {
    return ts.at(Tok::kLBracket) && ts.peek(1).kind == Tok::kIdent &&
           ts.peek(2).kind == Tok::kColon;
  };
  std::vector<TypeExpr> tys;
  if (ts.at(Tok::kLBracket) && !binder_list_ahead()) {
    ts.next();
    tys = read_type_list(ts, Tok::kRBracket);
  }
  std::vector<TypedNamedArg> args;
  while (!ts.accept(Tok::kRParen)) {
    std::vector<TypedBinder> binders;
    if (binder_list_ahead()) {
      ts.next();
      do {
        std::string b = ts.expect(Tok::kIdent, "a binder name").text;
        ts.expect(Tok::kColon, "':'");
        binders.push_back(TypedBinder{std::move(b), read_type(ts)});
      } while (ts.accept(Tok::kComma));
      ts.expect(Tok::kRBracket, "',' or ']'");
    }
    args.push_back(TypedNamedArg{std::move(binders), read_typed_named(ts)});
  }
  return TypedNamedTerm::op(std::move(name), std::move(tys), std::move(args));
}

MetaTerm read_metaterm(TokenStream& ts) {
  if (ts.accept(Tok::kQuestion)) return MetaTerm::mvar(ts.expect_nat("a metavariable index"));
  if (ts.at(Tok::kNat)) return MetaTerm::var(ts.expect_nat("a variable index"));
  if (ts.accept(Tok::kLBrace)) {
    MetaTerm body = read_metaterm(ts);
    ts.expect(Tok::kLBracket, "'['");
    std::vector<MetaTerm> prefix;
    std::size_t shift = 0;
    if (!ts.at(Tok::kSemicolon) && !ts.at(Tok::kRBracket)) {
      prefix.push_back(read_metaterm(ts));
      while (ts.accept(Tok::kComma)) prefix.push_back(read_metaterm(ts));
    }
    if (ts.accept(Tok::kSemicolon)) {
      ts.expect(Tok::kCaret, "'^'");
      shift = ts.expect_nat("a shift");
    }
    ts.expect(Tok::kRBracket, "']'");
    ts.expect(Tok::kRBrace, "'}'");
    return MetaTerm::subst(std::move(body), std::move(prefix), shift);
  }
  ts.expect(Tok::kLParen, "a metaterm");
  std::string name = ts.expect(Tok::kIdent, "an operation name").text;
  std::vector<MetaTerm> args;
  while (!ts.accept(Tok::kRParen)) args.push_back(read_metaterm(ts));
  return MetaTerm::op(name, std::move(args));
}

// `[e0, e1; ^k]` with entries read by `entry`.
template <class T, class F>
std::pair<std::vector<T>, std::size_t> read_literal(TokenStream& ts, F entry) {
  ts.expect(Tok::kLBracket, "'['");
  std::vector<T> prefix;
  std::size_t shift = 0;
  if (!ts.at(Tok::kSemicolon) && !ts.at(Tok::kRBracket)) {
    prefix.push_back(entry());
    while (ts.accept(Tok::kComma)) prefix.push_back(entry());
  }
  if (ts.accept(Tok::kSemicolon)) {
    ts.expect(Tok::kCaret, "'^'");
    shift = ts.expect_nat("a shift");
  }
  ts.expect(Tok::kRBracket, "']'");
  return {std::move(prefix), shift};
}

// Signature declarations.

void expect_keyword(TokenStream& ts, std::string_view kw) {
  Token t = ts.expect(Tok::kIdent, "'" + std::string(kw) + "'");
  if (t.text != kw) ts.fail(t, "expected '" + std::string(kw) + "', found '" + t.text + "'");
}

TypeGrammar read_types_block(TokenStream& ts) {
  TypeGrammar g;
  ts.expect(Tok::kLBrace, "'{'");
  while (!ts.accept(Tok::kRBrace)) {
    std::string name = ts.expect(Tok::kIdent, "a type constructor").text;
    std::size_t arity = 0;
    if (ts.accept(Tok::kLParen)) {
      arity = ts.expect_nat("a constructor arity");
      ts.expect(Tok::kRParen, "')'");
    }
    g.ctors.emplace_back(std::move(name), arity);
    if (!ts.accept(Tok::kSemicolon)) {
      ts.expect(Tok::kRBrace, "';' or '}'");
      break;
    }
  }
  return g;
}

Premise read_premise(TokenStream& ts) {
  ts.expect(Tok::kLParen, "'('");
  Premise p;
  if (!ts.at(Tok::kTurnstile)) {
    p.context.push_back(read_type(ts));
    while (ts.accept(Tok::kComma)) p.context.push_back(read_type(ts));
  }
  ts.expect(Tok::kTurnstile, "'|-'");
  p.type = read_type(ts);
  ts.expect(Tok::kRParen, "')'");
  return p;
}

struct ParsedSignature {
  std::string name;
  std::vector<OpDecl> untyped;
  std::vector<TypedOpSchema> typed;
  SourceSpan span;
};

ParsedSignature read_signature(TokenStream& ts) {
  ParsedSignature s;
  s.span = ts.peek().span;
  s.name = ts.expect(Tok::kIdent, "a signature name").text;
  ts.expect(Tok::kLBrace, "'{'");
  while (!ts.accept(Tok::kRBrace)) {
    expect_keyword(ts, "op");
    const Token name = ts.expect(Tok::kIdent, "an operation name");
    bool typed = false;
    TypedOpSchema op{name.text, {}, {}};
    if (ts.accept(Tok::kLBracket)) {
      typed = true;
      if (!ts.accept(Tok::kRBracket)) {
        do {
          op.metavars.push_back(ts.expect(Tok::kIdent, "a type metavariable").text);
        } while (ts.accept(Tok::kComma));
        ts.expect(Tok::kRBracket, "',' or ']'");
      }
    }
    ts.expect(Tok::kColon, "':'");
    const bool untyped_arity = !typed && ts.at(Tok::kLParen) &&
                               (ts.peek(1).kind == Tok::kNat || ts.peek(1).kind == Tok::kRParen);
    if (untyped_arity) {
      ts.next();
      BindingArity ar;
      if (!ts.accept(Tok::kRParen)) {
        do {
          ar.binders.push_back(ts.expect_nat("a binder count"));
        } while (ts.accept(Tok::kComma));
        ts.expect(Tok::kRParen, "',' or ')'");
      }
      s.untyped.push_back(OpDecl{Symbol::intern(name.text), std::move(ar)});
    } else {
      if (!ts.at(Tok::kArrow)) {
        op.arity.premises.push_back(read_premise(ts));
        while (ts.accept(Tok::kComma)) op.arity.premises.push_back(read_premise(ts));
      }
      ts.expect(Tok::kArrow, "'->'");
      op.arity.conclusion = read_type(ts);
      s.typed.push_back(std::move(op));
    }
    ts.expect(Tok::kSemicolon, "';'");
  }
  if (!s.untyped.empty() && !s.typed.empty()) {
    throw Error(make_diagnostic(ErrorKind::kValidation,
                                "signature '" + s.name + "' mixes typed and untyped operations",
                                s.span));
  }
  return s;
}

std::string print_premise(const Premise& p) {
  std::string s = "(" + join_with(p.context, ", ", print_type);
  if (!p.context.empty()) s += " ";
  return s + "|- " + print_type(p.type) + ")";
}

std::string print_types_block(const TypeGrammar& g) {
  std::string s = "types {";
  for (std::size_t i = 0; i < g.ctors.size(); ++i) {
    s += i ? "; " : " ";
    s += g.ctors[i].first;
    if (g.ctors[i].second) s += "(" + std::to_string(g.ctors[i].second) + ")";
  }
  return s + " }\n";
}

nlohmann::json to_json(const Term& t) {
  if (t.is_var()) return nlohmann::json{{"var", t.index()}};
  nlohmann::json args = nlohmann::json::array();
  for (const auto& a : t.args()) args.push_back(to_json(a));
  return nlohmann::json{{"op", t.name().str()}, {"args", std::move(args)}};
}

Term from_json(const nlohmann::json& j) {
  auto bad = [] {
    throw Error(ErrorKind::kParse,
                "expected {\"var\": n} or {\"op\": name, \"args\": [...]}");
  };
  if (!j.is_object()) bad();
  if (j.contains("var")) {
    if (j.size() != 1 || !j["var"].is_number_unsigned()) bad();
    return Term::var(j["var"].get<std::size_t>());
  }
  if (!j.contains("op") || !j["op"].is_string() || j.size() > 2) bad();
  std::vector<Term> args;
  if (j.contains("args")) {
    if (!j["args"].is_array()) bad();
    for (const auto& a : j["args"]) args.push_back(from_json(a));
  } else if (j.size() != 1) {
    bad();
  }
  return Term::op(j["op"].get<std::string>(), std::move(args));
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  struct Frame {
    const Term* t;
    std::size_t next;
  };
  std::vector<Frame> stack{{&t, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Term& x = *f.t;
    if (x.is_var()) {
      out += std::to_string(x.index());
      stack.pop_back();
      continue;
    }
    if (f.next == 0) out += "(" + x.name().str();
    if (f.next < x.args().size()) {
      out += ' ';
      const Term* child = &x.args()[f.next++];
      stack.push_back(Frame{child, 0});
    } else {
      out += ')';
      stack.pop_back();
    }
  }
  return out;
}

Term parse_term(std::string_view text, const BindingSignature* sig) {
  TokenStream ts(text);
  Term t = read_term(ts, sig);
  ts.expect_end();
  return t;
}

std::string print_named(const NamedTerm& t) {
  if (t.is_var()) return t.name();
  std::string s = "(" + t.name();
  for (const auto& a : t.args()) {
    s += ' ';
    if (!a.binders.empty()) s += "[" + join_with(a.binders, " ", [](const std::string& b) { return b; }) + "] ";
    s += print_named(a.body);
  }
  return s + ")";
}

NamedTerm parse_named(std::string_view text, const BindingSignature* sig) {
  TokenStream ts(text);
  NamedTerm t = read_named(ts, sig);
  ts.expect_end();
  return t;
}

AnyTerm parse_term(std::string_view text, TermMode mode, const BindingSignature& sig) {
  if (mode == TermMode::kNamed) return parse_named(text, &sig);
  return parse_term(text, &sig);
}

std::string print_term(const AnyTerm& t) {
  if (const Term* x = std::get_if<Term>(&t)) return print_term(*x);
  return print_named(std::get<NamedTerm>(t));
}

std::string print_term_json(const Term& t) { return to_json(t).dump(); }

Term parse_term_json(std::string_view text, const BindingSignature* sig) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
  Term t = from_json(j);
  if (sig) {
    Diagnostics ds = wellformed(*sig, t);
    if (!ds.empty()) throw Error(std::move(ds));
  }
  return t;
}

std::string print_assignment(const Assignment& s) {
  return "[" + join_with(s.prefix(), ", ", [](const Term& t) { return print_term(t); }) + "; ^" +
         std::to_string(s.tail_shift()) + "]";
}

Assignment parse_assignment(std::string_view text, const BindingSignature* sig) {
  TokenStream ts(text);
  auto [prefix, shift] = read_literal<Term>(ts, [&] { return read_term(ts, sig); });
  ts.expect_end();
  return Assignment(std::move(prefix), shift);
}

std::string print_renaming(const Renaming& f) {
  return "[" + join_with(f.prefix(), ", ", [](std::size_t n) { return std::to_string(n); }) +
         "; ^" + std::to_string(f.tail_shift()) + "]";
}

Renaming parse_renaming(std::string_view text) {
  TokenStream ts(text);
  auto [prefix, shift] =
      read_literal<std::size_t>(ts, [&] { return ts.expect_nat("a variable index"); });
  ts.expect_end();
  return Renaming(std::move(prefix), shift);
}

std::string print_type(const TypeExpr& t) { return to_string(t); }

TypeExpr parse_type(std::string_view text) {
  TokenStream ts(text);
  TypeExpr t = read_type(ts);
  ts.expect_end();
  return t;
}

std::string print_typed_term(const TypedTerm& t) {
  if (t.is_var()) return "(#" + std::to_string(t.index()) + " : " + print_type(t.type()) + ")";
  std::string s = "(" + t.name().str();
  if (!t.type_args().empty()) s += "[" + join_with(t.type_args(), ", ", print_type) + "]";
  for (const auto& a : t.args()) s += " " + print_typed_term(a);
  return s + ")";
}

TypedTerm parse_typed_term(std::string_view text) {
  TokenStream ts(text);
  TypedTerm t = read_typed(ts);
  ts.expect_end();
  return t;
}

std::string print_typed_assignment(const TypedAssignment& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [ty, c] : s.components()) {
    if (!first) out += ", ";
    first = false;
    out += print_type(ty) + ": [" +
           join_with(c.prefix, ", ", [](const TypedTerm& t) { return print_typed_term(t); }) +
           "; ^" + std::to_string(c.tail_shift) + "]";
  }
  return out + "}";
}

std::string print_typed_named(const TypedNamedTerm& t) {
  if (t.is_var()) return "(" + t.name() + " : " + print_type(t.type()) + ")";
  std::string s = "(" + t.name();
  if (!t.type_args().empty()) s += "[" + join_with(t.type_args(), ", ", print_type) + "]";
  for (const auto& a : t.args()) {
    s += ' ';
    if (!a.binders.empty()) {
      s += "[" + join_with(a.binders, ", ", [](const TypedBinder& b) {
             return b.name + " : " + print_type(b.type);
           }) + "] ";
    }
    s += print_typed_named(a.body);
  }
  return s + ")";
}

TypedNamedTerm parse_typed_named(std::string_view text) {
  TokenStream ts(text);
  TypedNamedTerm t = read_typed_named(ts);
  ts.expect_end();
  return t;
}

SignatureFile parse_signature_file(std::string_view text) {
  TokenStream ts(text);
  SignatureFile file;
  std::optional<TypeGrammar> grammar;
  while (!ts.at(Tok::kEnd)) {
    Token kw = ts.expect(Tok::kIdent, "'types' or 'signature'");
    if (kw.text == "types") {
      grammar = read_types_block(ts);
    } else if (kw.text == "signature") {
      ParsedSignature s = read_signature(ts);
      if (!s.typed.empty()) {
        if (!grammar) {
          throw Error(make_diagnostic(ErrorKind::kValidation,
                                      "typed signature '" + s.name +
                                          "' needs a preceding types block",
                                      s.span));
        }
        file.typed.push_back(TypedSignatureSchema{s.name, *grammar, std::move(s.typed)});
      } else {
        file.untyped.push_back(BindingSignature{s.name, std::move(s.untyped)});
      }
    } else {
      ts.fail(kw, "expected 'types' or 'signature', found '" + kw.text + "'");
    }
  }
  return file;
}

std::string print_signature(const BindingSignature& sig) {
  std::string s = "signature " + sig.name + " {\n";
  for (const auto& op : sig.ops) {
    s += "  op " + op.name.str() + " : (" +
         join_with(op.arity.binders, ", ", [](std::size_t n) { return std::to_string(n); }) +
         ");\n";
  }
  return s + "}\n";
}

std::string print_signature(const TypedSignatureSchema& schema) {
  std::string s = print_types_block(schema.grammar) + "\nsignature " + schema.name + " {\n";
  for (const auto& op : schema.ops) {
    s += "  op " + op.name;
    if (!op.metavars.empty()) {
      s += "[" + join_with(op.metavars, ", ", [](const std::string& v) { return v; }) + "]";
    }
    s += " : ";
    if (!op.arity.premises.empty()) s += join_with(op.arity.premises, ", ", print_premise) + " ";
    s += "-> " + print_type(op.arity.conclusion) + ";\n";
  }
  return s + "}\n";
}

std::string print_signature_file(const SignatureFile& file) {
  std::vector<std::string> parts;
  for (const auto& s : file.untyped) parts.push_back(print_signature(s));
  for (const auto& s : file.typed) parts.push_back(print_signature(s));
  return join_with(parts, "\n", [](const std::string& p) { return p; });
}

std::string print_metaterm(const MetaTerm& m) {
  switch (m.kind()) {
    case MetaTerm::Kind::kMVar:
      return "?" + std::to_string(m.index());
    case MetaTerm::Kind::kVar:
      return std::to_string(m.index());
    case MetaTerm::Kind::kOp: {
      std::string s = "(" + m.name().str();
      for (const auto& a : m.args()) s += " " + print_metaterm(a);
      return s + ")";
    }
    case MetaTerm::Kind::kSubst: {
      std::string s = "{ " + print_metaterm(m.body()) + " [";
      for (std::size_t i = 0; i < m.prefix().size(); ++i) {
        if (i) s += ", ";
        s += print_metaterm(m.prefix()[i]);
      }
      return s + "; ^" + std::to_string(m.tail_shift()) + "] }";
    }
  }
  return "";
}

MetaTerm parse_metaterm(std::string_view text) {
  TokenStream ts(text);
  MetaTerm m = read_metaterm(ts);
  ts.expect_end();
  return m;
}

EquationalTheory parse_theory(std::string_view text) {
  TokenStream ts(text);
  EquationalTheory th;
  std::optional<std::string> name;
  bool have_sig = false;
  while (!ts.at(Tok::kEnd)) {
    Token kw = ts.expect(Tok::kIdent, "'theory', 'signature' or 'eq'");
    if (kw.text == "theory") {
      if (name) ts.fail(kw, "duplicate theory name");
      name = ts.expect(Tok::kIdent, "a theory name").text;
      ts.expect(Tok::kSemicolon, "';'");
    } else if (kw.text == "signature") {
      if (have_sig) ts.fail(kw, "a theory has exactly one signature");
      ParsedSignature s = read_signature(ts);
      if (!s.typed.empty()) {
        throw Error(make_diagnostic(ErrorKind::kValidation,
                                    "equational theories are untyped", s.span));
      }
      th.sig = BindingSignature{s.name, std::move(s.untyped)};
      have_sig = true;
    } else if (kw.text == "eq") {
      if (!have_sig) ts.fail(kw, "equations must follow the signature");
      Equation eq;
      eq.name = ts.expect(Tok::kIdent, "an equation name").text;
      ts.expect(Tok::kLBracket, "'['");
      if (!ts.accept(Tok::kRBracket)) {
        do {
          eq.arity.binders.push_back(ts.expect_nat("a binder count"));
        } while (ts.accept(Tok::kComma));
        ts.expect(Tok::kRBracket, "',' or ']'");
      }
      ts.expect(Tok::kColon, "':'");
      eq.lhs = read_metaterm(ts);
      ts.expect(Tok::kEquals, "'='");
      eq.rhs = read_metaterm(ts);
      ts.expect(Tok::kSemicolon, "';'");
      th.equations.push_back(std::move(eq));
    } else {
      ts.fail(kw, "expected 'theory', 'signature' or 'eq', found '" + kw.text + "'");
    }
  }
  if (!have_sig) ts.fail("a theory file needs a signature");
  th.name = name ? *name : th.sig.name;
  return th;
}

std::string print_theory(const EquationalTheory& theory) {
  std::string s = "theory " + theory.name + ";\n\n" + print_signature(theory.sig);
  if (!theory.equations.empty()) s += "\n";
  for (const auto& eq : theory.equations) {
    s += "eq " + eq.name + " [" +
         join_with(eq.arity.binders, ", ", [](std::size_t n) { return std::to_string(n); }) +
         "] : " + print_metaterm(eq.lhs) + " = " + print_metaterm(eq.rhs) + ";\n";
  }
  return s;
}

}  // namespace dbsyn
