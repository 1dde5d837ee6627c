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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "dbsyn/gen.h"
#include "dbsyn/model.h"
#include "test_support.h"

namespace dbsyn {
namespace {

using testutil::app;
using testutil::lam;
using testutil::napp;
using testutil::nlam;
using testutil::nv;
using testutil::v;

const BindingSignature& lambda() {
  static const BindingSignature sig = lambda_signature();
  return sig;
}

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(DBSYN_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Diagnostic first_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.diagnostics().front();
  }
  ADD_FAILURE() << "expected an error";
  return {};
}

TEST(Nameless, ParseAndPrint) {
  EXPECT_EQ(parse_term("(lam (app 1 0))", lambda()), lam(app(v(1), v(0))));
  EXPECT_EQ(print_term(lam(app(v(1), v(0)))), "(lam (app 1 0))");
  EXPECT_EQ(parse_term("  ( lam\n(app 1   0) ) // trailing", lambda()), lam(app(v(1), v(0))));
  EXPECT_EQ(parse_term("7"), v(7));
  EXPECT_EQ(print_term(Term::op("c", {})), "(c)");
  EXPECT_EQ(parse_term("(c)", testutil::first_order_signature()), Term::op("c", {}));
}

TEST(Nameless, Diagnostics) {
  const Diagnostic arity = first_error([] { parse_term("(app 0)", lambda()); });
  EXPECT_EQ(arity.kind, ErrorKind::kValidation);
  ASSERT_TRUE(arity.span);
  EXPECT_EQ(arity.span->start, 0u);
  EXPECT_EQ(arity.span->end, 7u);
  const Diagnostic unknown = first_error([] { parse_term("(lam (foo 0))", lambda()); });
  EXPECT_EQ(unknown.kind, ErrorKind::kValidation);
  ASSERT_TRUE(unknown.span);
  EXPECT_EQ(unknown.span->start, 5u);
  EXPECT_EQ(unknown.span->column, 6u);
  EXPECT_EQ(first_error([] { parse_term("(lam 0", lambda()); }).kind, ErrorKind::kParse);
  EXPECT_EQ(first_error([] { parse_term("(lam 0))", lambda()); }).kind, ErrorKind::kParse);
  EXPECT_EQ(first_error([] { parse_term("(lam $)", lambda()); }).kind, ErrorKind::kParse);
  EXPECT_EQ(first_error([] { parse_term("99999999999999999999999", lambda()); }).kind,
            ErrorKind::kParse);
  const Diagnostic line = first_error([] { parse_term("(lam\n  (app 0 ))", lambda()); });
  ASSERT_TRUE(line.span);
  EXPECT_EQ(line.span->line, 2u);
}

TEST(Nameless, RoundTripsFuzzedTerms) {
  const std::vector<BindingSignature> sigs{lambda(), testutil::first_order_signature(),
                                           testutil::mixed_signature()};
  for (const auto& sig : sigs) {
    for (std::size_t i = 0; i < 1000; ++i) {
      Rng r = case_rng(40, i);
      const Term t = random_term(r, sig, 8, 5);
      const std::string s = print_term(t);
      ASSERT_EQ(parse_term(s, sig), t) << s;
      ASSERT_EQ(print_term(parse_term(s, sig)), s);
      ASSERT_EQ(s.find("  "), std::string::npos);
      ASSERT_EQ(parse_term_json(print_term_json(t), &sig), t);
    }
  }
}

TEST(Nameless, DeepTermsParseAndPrint) {
  std::string text;
  for (int i = 0; i < 100000; ++i) text += "(lam ";
  text += "0";
  for (int i = 0; i < 100000; ++i) text += ")";
  const Term t = parse_term(text, lambda());
  EXPECT_EQ(term_depth(t), 100000u);
  EXPECT_EQ(print_term(t), text);
}

TEST(Json, Shape) {
  EXPECT_EQ(print_term_json(lam(app(v(1), v(0)))),
            R"({"args":[{"args":[{"var":1},{"var":0}],"op":"app"}],"op":"lam"})");
  EXPECT_EQ(parse_term_json(R"({"op":"lam","args":[{"var":0}]})", &lambda()), lam(v(0)));
  EXPECT_EQ(first_error([] { parse_term_json("{", nullptr); }).kind, ErrorKind::kParse);
  EXPECT_EQ(first_error([] { parse_term_json(R"({"var":-1})", nullptr); }).kind,
            ErrorKind::kParse);
  EXPECT_EQ(first_error([] { parse_term_json(R"({"op":"app","args":[]})", &lambda()); }).kind,
            ErrorKind::kValidation);
}

TEST(Named, ParseAndPrint) {
  const NamedTerm n = parse_named("(lam [x] (app x x0))", lambda());
  EXPECT_TRUE(alpha_equal(n, nlam("x", napp(nv("x"), nv("x0")))));
  EXPECT_EQ(print_named(to_named(lambda(), lam(lam(app(v(1), v(0)))))),
            "(lam [a] (lam [b] (app a b)))");
  const AnyTerm any = parse_term("(lam [y] y)", TermMode::kNamed, lambda());
  ASSERT_TRUE(std::holds_alternative<NamedTerm>(any));
  EXPECT_EQ(print_term(any), "(lam [y] y)");
  EXPECT_TRUE(std::holds_alternative<Term>(parse_term("(lam 0)", TermMode::kNameless, lambda())));
  EXPECT_EQ(first_error([] { parse_named("(lam x)", lambda()); }).kind, ErrorKind::kValidation);
  EXPECT_EQ(first_error([] { parse_named("(app [x] x x)", lambda()); }).kind,
            ErrorKind::kValidation);
}

TEST(Named, RoundTripsUpToAlpha) {
  const std::vector<BindingSignature> sigs{lambda(), testutil::mixed_signature()};
  for (const auto& sig : sigs) {
    for (std::size_t i = 0; i < 1000; ++i) {
      Rng r = case_rng(41, i);
      const NamedTerm n = random_named_term(r, sig, 6);
      ASSERT_TRUE(alpha_equal(parse_named(print_named(n), sig), n)) << print_named(n);
    }
  }
}

TEST(Literals, Assignments) {
  EXPECT_EQ(parse_assignment("[(lam 0), 3; ^2]", &lambda()), Assignment({lam(v(0)), v(3)}, 2));
  EXPECT_EQ(print_assignment(Assignment({v(0), lam(v(0))}, 1)), "[0, (lam 0); ^1]");
  EXPECT_EQ(print_assignment(Assignment::identity()), "[; ^0]");
  EXPECT_EQ(parse_assignment("[; ^0]"), Assignment::identity());
  EXPECT_EQ(parse_assignment("[0, 1; ^2]"), Assignment::identity());
  EXPECT_EQ(parse_renaming("[5; ^0]"), Renaming({5}, 0));
  EXPECT_EQ(print_renaming(Renaming::shift(1)), "[; ^1]");
  EXPECT_EQ(first_error([] { parse_assignment("[0; 2]"); }).kind, ErrorKind::kParse);
  GenConfig cfg;
  for (std::size_t i = 0; i < 500; ++i) {
    Rng r = case_rng(42, i);
    const Assignment s = random_assignment(r, lambda(), cfg);
    ASSERT_EQ(parse_assignment(print_assignment(s), &lambda()), s);
    const Renaming f = random_renaming(r, cfg);
    ASSERT_EQ(parse_renaming(print_renaming(f)), f);
  }
}

TEST(Types, ParseAndPrint) {
  const TypeExpr a = TypeExpr::base("a"), b = TypeExpr::base("b");
  EXPECT_EQ(parse_type("a -> b -> a"), TypeExpr::arrow(a, TypeExpr::arrow(b, a)));
  EXPECT_EQ(parse_type("(a -> b) -> a"), TypeExpr::arrow(TypeExpr::arrow(a, b), a));
  EXPECT_EQ(print_type(TypeExpr::arrow(TypeExpr::arrow(a, b), a)), "(a -> b) -> a");
  EXPECT_EQ(print_type(TypeExpr::arrow(a, TypeExpr::arrow(b, a))), "a -> b -> a");
  const TypeExpr list{"list", {a}};
  EXPECT_EQ(parse_type(print_type(list)), list);
  const TypeGrammar g = stlc_schema({"a", "b"}).grammar;
  for (std::size_t i = 0; i < 300; ++i) {
    Rng r = case_rng(43, i);
    const TypeExpr t = random_type(r, g, 3);
    ASSERT_EQ(parse_type(print_type(t)), t) << print_type(t);
  }
}

TEST(Typed, TermsRoundTrip) {
  const TypeExpr a = TypeExpr::base("a");
  const TypedTerm t = TypedTerm::op("lam", {a, a}, {TypedTerm::var(0, a)});
  EXPECT_EQ(print_typed_term(t), "(lam[a, a] (#0 : a))");
  EXPECT_EQ(parse_typed_term("(lam[a, a] (#0 : a))"), t);
  EXPECT_EQ(parse_typed_term("(op[lam; a, a] (#0 : a))"), t);
  const TypedSignatureSchema schema = stlc_schema({"a", "b"});
  TypedGenConfig gen;
  for (std::size_t i = 0; i < 1000; ++i) {
    Rng r = case_rng(44, i);
    const TypedTerm x = random_typed_term(r, schema, random_type(r, schema.grammar, 2), gen);
    ASSERT_EQ(parse_typed_term(print_typed_term(x)), x) << print_typed_term(x);
  }
}

TEST(Typed, NamedTermsRoundTrip) {
  const TypeExpr a = TypeExpr::base("a");
  const std::string text = "(lam[a, a] [x : a] (x : a))";
  const TypedNamedTerm n = parse_typed_named(text);
  EXPECT_EQ(print_typed_named(n), text);
  const TypedSignatureSchema schema = stlc_schema({"a", "b"});
  EXPECT_EQ(from_typed_named(schema, n),
            TypedTerm::op("lam", {a, a}, {TypedTerm::var(0, a)}));
  TypedGenConfig gen;
  for (std::size_t i = 0; i < 500; ++i) {
    Rng r = case_rng(45, i);
    const TypedTerm x = random_typed_term(r, schema, random_type(r, schema.grammar, 2), gen);
    const TypedNamedTerm nx = to_typed_named(schema, x);
    ASSERT_TRUE(alpha_equal(parse_typed_named(print_typed_named(nx)), nx));
  }
}

TEST(Signatures, DataFilesRoundTrip) {
  for (const char* name : {"lambda.sig", "mixed.sig", "stlc.sig"}) {
    const std::string text = read_file(name);
    ASSERT_FALSE(text.empty()) << name;
    const SignatureFile f = parse_signature_file(text);
    const std::string printed = print_signature_file(f);
    const SignatureFile g = parse_signature_file(printed);
    EXPECT_EQ(g.untyped, f.untyped) << name;
    EXPECT_EQ(g.typed, f.typed) << name;
    EXPECT_EQ(print_signature_file(g), printed);
  }
  const SignatureFile l = parse_signature_file(read_file("lambda.sig"));
  ASSERT_EQ(l.untyped.size(), 1u);
  EXPECT_EQ(l.untyped[0], lambda());
  const SignatureFile s = parse_signature_file(read_file("stlc.sig"));
  ASSERT_EQ(s.typed.size(), 1u);
  EXPECT_EQ(s.typed[0].ops, stlc_schema({"a", "b"}).ops);
  EXPECT_EQ(s.typed[0].grammar, stlc_schema({"a", "b"}).grammar);
  const SignatureFile m = parse_signature_file(read_file("mixed.sig"));
  ASSERT_EQ(m.untyped.size(), 2u);
  EXPECT_EQ(m.untyped[0], testutil::first_order_signature());
  EXPECT_EQ(m.untyped[1], testutil::mixed_signature());
}

TEST(Signatures, PrintedForms) {
  EXPECT_EQ(print_signature(lambda()), "signature lambda {\n  op lam : (1);\n  op app : (0, 0);\n}\n");
}

TEST(Signatures, Errors) {
  EXPECT_EQ(first_error([] { parse_signature_file("signature s { op f : (0, 0) }"); }).kind,
            ErrorKind::kParse);
  // Parsing is syntactic; duplicate names surface in validation.
  const SignatureFile dup = parse_signature_file("signature s { op f : (0); op f : (1); }");
  ASSERT_EQ(dup.untyped.size(), 1u);
  EXPECT_FALSE(validate_signature(dup.untyped[0]).empty());
  EXPECT_EQ(first_error([] { parse_signature_file("signature s { op f[s] : (|- s) -> s; }"); })
                .kind,
            ErrorKind::kValidation);
  EXPECT_EQ(first_error([] {
              parse_signature_file("types { a } signature s { op f : (0); op g : a; }");
            }).kind,
            ErrorKind::kParse);
}

TEST(Theories, DataFilesMatchBuiltins) {
  EXPECT_EQ(parse_theory(read_file("beta.thy")), beta_theory());
  EXPECT_EQ(parse_theory(read_file("betaeta.thy")), beta_eta_theory());
  for (const auto& th : {beta_theory(), beta_eta_theory()}) {
    EXPECT_EQ(parse_theory(print_theory(th)), th);
  }
}

TEST(Theories, Metaterms) {
  const MetaTerm m = MetaTerm::op("lam", {MetaTerm::subst(MetaTerm::mvar(0), {MetaTerm::var(2)}, 1)});
  EXPECT_EQ(print_metaterm(m), "(lam { ?0 [2; ^1] })");
  EXPECT_EQ(parse_metaterm("(lam { ?0 [2; ^1] })"), m);
  EXPECT_EQ(parse_metaterm("{ ?1 [; ^0] }"), MetaTerm::subst(MetaTerm::mvar(1), {}, 0));
}

TEST(Theories, Errors) {
  const std::string sig = "signature lambda { op lam : (1); op app : (0, 0); }\n";
  const Diagnostics arity = validate_theory(parse_theory(sig + "eq bad [0] : (app ?0) = ?0;"));
  ASSERT_FALSE(arity.empty());
  EXPECT_NE(arity[0].message.find("wrong argument count"), std::string::npos);
  const Diagnostics unbound = validate_theory(parse_theory(sig + "eq bad [0] : ?0 = ?1;"));
  ASSERT_FALSE(unbound.empty());
  EXPECT_NE(format_diagnostics(unbound).find("out of range"), std::string::npos);
  EXPECT_EQ(first_error([&] { parse_theory(sig + "eq bad [0] : ?0 = "); }).kind,
            ErrorKind::kParse);
  EXPECT_EQ(first_error([&] { parse_theory("eq e [0] : ?0 = ?0;"); }).kind, ErrorKind::kParse);
}

}  // namespace
}  // namespace dbsyn
