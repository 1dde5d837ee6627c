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

#include "dbsyn/typed.h"

#include <gtest/gtest.h>

#include "dbsyn/gen.h"
#include "dbsyn/surface.h"
#include "dbsyn/typed_named.h"
#include "test_support.h"

namespace dbsyn {
namespace {

const TypeExpr a = TypeExpr::base("a");
const TypeExpr b = TypeExpr::base("b");

TypeExpr arr(TypeExpr x, TypeExpr y) { return TypeExpr::arrow(std::move(x), std::move(y)); }
TypedTerm tv(std::size_t n, TypeExpr ty) { return TypedTerm::var(n, std::move(ty)); }
TypedTerm tlam(TypeExpr s, TypeExpr t, TypedTerm body) {
  return TypedTerm::op("lam", {std::move(s), std::move(t)}, {std::move(body)});
}
TypedTerm tapp(TypeExpr s, TypeExpr t, TypedTerm f, TypedTerm x) {
  return TypedTerm::op("app", {std::move(s), std::move(t)}, {std::move(f), std::move(x)});
}

const TypedSignatureSchema& stlc2() {
  static const TypedSignatureSchema s = stlc_schema({"a", "b"});
  return s;
}
const TypedSignatureSchema& stlc1() {
  static const TypedSignatureSchema s = stlc_schema({"a"});
  return s;
}

LawConfig config(std::size_t cases, std::uint64_t seed = 3) {
  LawConfig cfg;
  cfg.cases = cases;
  cfg.seed = seed;
  return cfg;
}

using TFn = std::function<TypedTerm(std::size_t, const TypeExpr&)>;
using TRen = std::function<std::size_t(std::size_t, const TypeExpr&)>;

// Clause-by-clause oracles: per-type renaming lifted through each binder of
// a premise context in order, and the single-type lift
//   (lift_tau s)(0, tau) = Var(0, tau)
//   (lift_tau s)(n + 1, tau) = s(n, tau) renamed by up_tau
//   (lift_tau s)(n, tau') = s(n, tau') renamed by up_tau.
TypedTerm oracle_trename(const TypedTerm& t, const TRen& f, const TypedSignatureSchema& schema) {
  if (t.is_var()) return tv(f(t.index(), t.type()), t.type());
  const TypedArity ar = arity_of(schema, t);
  std::vector<TypedTerm> args;
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    TRen g = f;
    for (const auto& tau : ar.premises[i].context) {
      g = [g, tau](std::size_t n, const TypeExpr& ty) -> std::size_t {
        if (ty != tau) return g(n, ty);
        return n == 0 ? 0 : g(n - 1, ty) + 1;
      };
    }
    args.push_back(oracle_trename(t.args()[i], g, schema));
  }
  return TypedTerm::op(t.name(), t.type_args(), std::move(args));
}

TFn oracle_tlift(TFn s, const TypeExpr& tau, const TypedSignatureSchema& schema) {
  return [s, tau, &schema](std::size_t n, const TypeExpr& ty) -> TypedTerm {
    const TRen up = [tau](std::size_t m, const TypeExpr& u) { return u == tau ? m + 1 : m; };
    if (ty == tau) {
      if (n == 0) return tv(0, tau);
      return oracle_trename(s(n - 1, ty), up, schema);
    }
    return oracle_trename(s(n, ty), up, schema);
  };
}

TypedTerm oracle_tsubst(const TypedTerm& t, const TFn& s, const TypedSignatureSchema& schema) {
  if (t.is_var()) return s(t.index(), t.type());
  const TypedArity ar = arity_of(schema, t);
  std::vector<TypedTerm> args;
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    TFn g = s;
    for (const auto& tau : ar.premises[i].context) g = oracle_tlift(g, tau, schema);
    args.push_back(oracle_tsubst(t.args()[i], g, schema));
  }
  return TypedTerm::op(t.name(), t.type_args(), std::move(args));
}

TFn as_fn(const TypedAssignment& s) {
  return [s](std::size_t n, const TypeExpr& ty) { return s(n, ty); };
}

bool mentions_type(const TypedTerm& t, const TypeExpr& ty) {
  if (t.is_var()) return t.type() == ty;
  for (const auto& x : t.args()) {
    if (mentions_type(x, ty)) return true;
  }
  return false;
}

TEST(Typecheck, Examples) {
  EXPECT_EQ(typecheck(stlc2(), tlam(a, a, tv(0, a))), arr(a, a));
  EXPECT_EQ(typecheck(stlc2(), tapp(a, a, tlam(a, a, tv(0, a)), tv(0, a))), a);
  try {
    typecheck(stlc2(), tapp(a, a, tv(0, a), tv(0, a)));
    FAIL() << "expected a type error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kType);
    ASSERT_TRUE(e.diagnostics().front().path);
    EXPECT_EQ(*e.diagnostics().front().path, std::vector<std::size_t>{0});
  }
  const Diagnostics ds = check_typed(stlc2(), tlam(a, a, tv(0, b)));
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].kind, ErrorKind::kType);
}

TEST(Typecheck, RejectsBadAnnotationsAndSchemas) {
  EXPECT_FALSE(check_typed(stlc2(), tv(0, TypeExpr::base("c"))).empty());
  EXPECT_FALSE(check_typed(stlc2(), TypedTerm::op("fix", {a}, {tv(0, a)})).empty());
  EXPECT_FALSE(check_typed(stlc2(), TypedTerm::op("lam", {a}, {tv(0, a)})).empty());
  EXPECT_FALSE(check_typed(stlc1(), tlam(b, b, tv(0, b))).empty());
}

TEST(Typecheck, BinderOfOtherTypeLeavesIndicesFree) {
  // Under a b-binder, index 0 at type a is still the first free a-variable.
  EXPECT_EQ(typecheck(stlc2(), tlam(b, a, tv(0, a))), arr(b, a));
}

TEST(TypedAssignment, CanonicalComponents) {
  EXPECT_EQ(TypedAssignment::single(a, {tv(0, a), tv(1, a)}, 2), TypedAssignment::identity());
  const TypedAssignment s = TypedAssignment::single(a, {tv(4, a)}, 9);
  EXPECT_EQ(s(0, a), tv(4, a));
  EXPECT_EQ(s(2, a), tv(10, a));
  EXPECT_EQ(s(2, b), tv(2, b));
  EXPECT_EQ(s.components().size(), 1u);
  EXPECT_EQ(s.component(b), TypedComponent{});
}

TEST(TLift, Examples) {
  EXPECT_EQ(tlift(TypedAssignment::identity(), a, stlc2()), TypedAssignment::identity());
  const TypedAssignment s = TypedAssignment::single(a, {tv(4, a)}, 9);
  const TypedAssignment la = tlift(s, a, stlc2());
  EXPECT_EQ(la.component(a), (TypedComponent{{tv(0, a), tv(5, a)}, 10}));
  EXPECT_EQ(la.component(b), TypedComponent{});
  const TypedAssignment lb = tlift(s, b, stlc2());
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(lb(n, a), s(n, a));
  EXPECT_EQ(lb(0, b), tv(0, b));
  EXPECT_EQ(lb(3, b), tv(3, b));
}

TEST(TLift, Gamma) {
  const TypedAssignment s = TypedAssignment::single(a, {tv(4, a)}, 9).set(b, {tv(1, a)}, 0);
  EXPECT_EQ(tlift_gamma(s, {}, stlc2()), s);
  const std::vector<TypeExpr> ga{a}, gab{a, b};
  EXPECT_EQ(tlift_gamma(s, ga, stlc2()), tlift(s, a, stlc2()));
  EXPECT_EQ(tlift_gamma(s, gab, stlc2()), tlift(tlift(s, a, stlc2()), b, stlc2()));
}

TEST(TLift, AgreesWithClauseOracle) {
  TypedGenConfig gen;
  for (std::size_t i = 0; i < 500; ++i) {
    Rng r = case_rng(10, i);
    const TypedAssignment s = random_typed_assignment(r, stlc2(), gen);
    const TypeExpr tau = random_type(r, stlc2().grammar, 1);
    const TypedAssignment l = tlift(s, tau, stlc2());
    const TFn o = oracle_tlift(as_fn(s), tau, stlc2());
    for (const TypeExpr& ty : {a, b, arr(a, b), arr(b, a), tau}) {
      for (std::size_t n = 0; n < 6; ++n) ASSERT_EQ(l(n, ty), o(n, ty)) << i;
    }
  }
}

TEST(TLift, PerTypeIndependence) {
  TypedGenConfig gen;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    Rng r = case_rng(11, i);
    const TypedAssignment s = random_typed_assignment(r, stlc2(), gen);
    const TypeExpr tau = random_type(r, stlc2().grammar, 1);
    const TypedAssignment l = tlift(s, tau, stlc2());
    for (const auto& [ty, comp] : s.components()) {
      if (ty == tau) continue;
      bool clean = true;
      for (const auto& e : comp.prefix) clean = clean && !mentions_type(e, tau);
      if (!clean) continue;
      ++checked;
      EXPECT_EQ(l.component(ty), comp);
    }
  }
  EXPECT_GT(checked, 50u);
}

TEST(TSubst, Examples) {
  const TypedTerm u = tlam(a, a, tv(0, a));
  EXPECT_EQ(tsubst(tv(0, a), TypedAssignment::single(a, {u}, 0), stlc2()), u);
  const TypedTerm t = tlam(a, a, tapp(a, a, tv(1, a), tv(0, a)));
  const TypedAssignment s = TypedAssignment::single(arr(a, a), {u}, 0);
  const TypedTerm expected = tlam(a, a, tapp(a, a, u, tv(0, a)));
  // app[a, a] needs its function at a -> a, so the well-typed reading
  // substitutes an (a -> a)-variable.
  const TypedTerm t2 = tlam(a, a, tapp(a, a, tv(0, arr(a, a)), tv(0, a)));
  EXPECT_EQ(tsubst(t2, s, stlc2()), expected);
  EXPECT_EQ(oracle_tsubst(t2, as_fn(s), stlc2()), expected);
  // The literal reading is ill-typed, but substitution is still defined on it.
  const TypedTerm lit = tsubst(t, TypedAssignment::single(a, {u}, 0), stlc2());
  EXPECT_EQ(lit, oracle_tsubst(t, as_fn(TypedAssignment::single(a, {u}, 0)), stlc2()));
  EXPECT_EQ(lit, tlam(a, a, tapp(a, a, tlam(a, a, tv(0, a)), tv(0, a))));
  const TypedNamedTerm named = typed_named_subst(
      to_typed_named(stlc2(), t), [&](std::size_t n, const TypeExpr& ty) {
        return to_typed_named(stlc2(), TypedAssignment::single(a, {u}, 0)(n, ty));
      });
  EXPECT_TRUE(alpha_equal(named, to_typed_named(stlc2(), lit)));
}

TEST(TSubst, OtherTypeBinderDoesNotShift) {
  const TypedAssignment s = TypedAssignment::single(a, {tv(2, a)}, 0);
  EXPECT_EQ(tsubst(tlam(b, a, tv(0, a)), s, stlc2()), tlam(b, a, tv(2, a)));
  const TypedTerm ab = tapp(b, a, tv(0, arr(b, a)), tv(0, b));
  EXPECT_EQ(tsubst(tlam(b, a, tv(0, a)), TypedAssignment::single(a, {ab}, 0), stlc2()),
            tlam(b, a, tapp(b, a, tv(0, arr(b, a)), tv(1, b))));
}

TEST(TSubst, AgreesWithClauseOracleAndPreservesTypes) {
  TypedGenConfig gen;
  for (std::size_t i = 0; i < 1000; ++i) {
    Rng r = case_rng(12, i);
    const TypeExpr ty = random_type(r, stlc2().grammar, 2);
    const TypedTerm t = random_typed_term(r, stlc2(), ty, gen);
    ASSERT_EQ(typecheck(stlc2(), t), ty);
    const TypedAssignment s = random_typed_assignment(r, stlc2(), gen);
    const TypedTerm out = tsubst(t, s, stlc2());
    ASSERT_EQ(out, oracle_tsubst(t, as_fn(s), stlc2())) << print_typed_term(t);
    ASSERT_EQ(typecheck(stlc2(), out), ty);
    ASSERT_EQ(tsubst(t, TypedAssignment::identity(), stlc2()), t);
  }
}

TEST(TCompose, PointwiseAndAssociativity) {
  TypedGenConfig gen;
  for (std::size_t i = 0; i < 300; ++i) {
    Rng r = case_rng(13, i);
    const TypedAssignment f = random_typed_assignment(r, stlc2(), gen);
    const TypedAssignment g = random_typed_assignment(r, stlc2(), gen);
    const TypedAssignment fg = tcompose(f, g, stlc2());
    for (const TypeExpr& ty : {a, b, arr(a, b)}) {
      for (std::size_t n = 0; n < 6; ++n) ASSERT_EQ(fg(n, ty), tsubst(f(n, ty), g, stlc2()));
    }
    const TypeExpr ty = random_type(r, stlc2().grammar, 2);
    const TypedTerm t = random_typed_term(r, stlc2(), ty, gen);
    EXPECT_EQ(tsubst(tsubst(t, f, stlc2()), g, stlc2()), tsubst(t, fg, stlc2()));
  }
}

TEST(TypedLaws, TermModelPasses) {
  TypedGenConfig gen;
  for (const auto* schema : {&stlc1(), &stlc2()}) {
    const LawReport r = check_typed_laws(*schema, gen, config(1000));
    EXPECT_TRUE(r.passed()) << r.to_string();
    EXPECT_NE(r.find("typed.monad.associativity"), nullptr);
    EXPECT_NE(r.find("typed.binding.lam"), nullptr);
    EXPECT_NE(r.find("typed.binding.app"), nullptr);
    EXPECT_NE(r.find("typed.subject_invariance"), nullptr);
  }
}

TEST(TypedLaws, BrokenModelIsCaught) {
  TypedGenConfig gen;
  auto m = typed_term_model(stlc2());
  // Lifting at every type instead of the binder's type.
  const auto& schema = stlc2();
  m.substitute = [&schema](const TypedTerm& t, const TypedValuation<TypedTerm>& s) {
    if (t.is_var()) return s(t.index(), t.type());
    const TypedArity ar = arity_of(schema, t);
    std::vector<TypedTerm> args;
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      TypedValuation<TypedTerm> g = s;
      if (!ar.premises[i].context.empty()) {
        g = [s](std::size_t n, const TypeExpr& ty) -> TypedTerm {
          return n == 0 ? tv(0, ty) : s(n - 1, ty);
        };
      }
      args.push_back(oracle_tsubst(t.args()[i], g, schema));
    }
    return TypedTerm::op(t.name(), t.type_args(), std::move(args));
  };
  const LawReport r = check_typed_binding_conditions(stlc2(), m, typed_term_sampler(stlc2(), gen),
                                                     gen, config(500));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("typed.binding.lam")->passed);
}

TEST(TypedFold, IntoTermModelIsIdentity) {
  TypedGenConfig gen;
  const auto m = typed_term_model(stlc2());
  for (std::size_t i = 0; i < 500; ++i) {
    Rng r = case_rng(14, i);
    const TypedTerm t = random_typed_term(r, stlc2(), random_type(r, stlc2().grammar, 2), gen);
    ASSERT_EQ(t_initial_fold(stlc2(), m, t), t);
  }
}

TEST(TypedFold, IntoTypedNamedModel) {
  TypedGenConfig gen;
  const auto src = typed_term_model(stlc2());
  const auto dst = typed_named_model(stlc2());
  const std::function<TypedNamedTerm(const TypedTerm&)> h = [&](const TypedTerm& t) {
    return t_initial_fold(stlc2(), dst, t);
  };
  const LawReport r =
      check_typed_morphism(h, src, dst, stlc2(), typed_term_sampler(stlc2(), gen), config(500));
  EXPECT_TRUE(r.passed()) << r.to_string();
  // lam x:a. x and a free variable.
  const TypedNamedTerm id = h(tlam(a, a, tv(0, a)));
  EXPECT_TRUE(alpha_equal(
      id, TypedNamedTerm::op("lam", {a, a},
                             {TypedNamedArg{{TypedBinder{"q", a}}, TypedNamedTerm::variable("q", a)}})));
  EXPECT_TRUE(alpha_equal(h(tlam(b, a, tv(0, a))),
                          TypedNamedTerm::op("lam", {b, a},
                                             {TypedNamedArg{{TypedBinder{"q", b}},
                                                            TypedNamedTerm::variable("x0", a)}})));
}

TEST(TypedFold, CommutesWithSubstitution) {
  TypedGenConfig gen;
  const auto dst = typed_named_model(stlc2());
  for (std::size_t i = 0; i < 500; ++i) {
    Rng r = case_rng(15, i);
    const TypedTerm t = random_typed_term(r, stlc2(), random_type(r, stlc2().grammar, 2), gen);
    const TypedAssignment s = random_typed_assignment(r, stlc2(), gen);
    const TypedNamedTerm lhs = t_initial_fold(stlc2(), dst, tsubst(t, s, stlc2()));
    const TypedNamedTerm rhs =
        dst.substitute(t_initial_fold(stlc2(), dst, t), [&](std::size_t n, const TypeExpr& ty) {
          return t_initial_fold(stlc2(), dst, s(n, ty));
        });
    ASSERT_TRUE(alpha_equal(lhs, rhs)) << print_typed_term(t);
  }
}

TEST(TypedNamed, RoundTrips) {
  TypedGenConfig gen;
  for (std::size_t i = 0; i < 1000; ++i) {
    Rng r = case_rng(16, i);
    const TypedTerm t = random_typed_term(r, stlc2(), random_type(r, stlc2().grammar, 2), gen);
    ASSERT_EQ(from_typed_named(stlc2(), to_typed_named(stlc2(), t)), t) << print_typed_term(t);
  }
  try {
    from_typed_named(stlc2(), TypedNamedTerm::variable("q", a));
    FAIL() << "expected an unbound-name error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBinding);
  }
}

TEST(TypedNamed, NamesAreKeyedByType) {
  // x0 at type a and x0 at type b are different variables.
  const TypedNamedTerm t = TypedNamedTerm::op(
      "app", {b, a},
      {TypedNamedArg{{}, TypedNamedTerm::variable("x0", arr(b, a))},
       TypedNamedArg{{}, TypedNamedTerm::variable("x0", b)}});
  EXPECT_EQ(free_typed_names(t).size(), 2u);
  EXPECT_EQ(from_typed_named(stlc2(), t), tapp(b, a, tv(0, arr(b, a)), tv(0, b)));
}

TEST(Degenerate, SingleTypeMatchesUntyped) {
  const LawReport r = check_degenerate_reduction(lambda_signature(), config(500));
  EXPECT_TRUE(r.passed()) << r.to_string();
  const LawReport m = check_degenerate_reduction(testutil::mixed_signature(), config(500));
  EXPECT_TRUE(m.passed()) << m.to_string();
}

TEST(Degenerate, EmbedEraseDirect) {
  const BindingSignature sig = lambda_signature();
  const TypedSignatureSchema schema = single_type_schema(sig);
  const TypeExpr u = TypeExpr::base("u");
  GenConfig cfg;
  for (std::size_t i = 0; i < 500; ++i) {
    Rng r = case_rng(17, i);
    const Term t = random_term(r, sig, 6, 4);
    const Assignment s = random_assignment(r, sig, cfg);
    const TypedTerm et = embed(t, u);
    ASSERT_EQ(typecheck(schema, et), u);
    ASSERT_EQ(erase(et), t);
    const TypedTerm out = tsubst(et, embed(s, u), schema);
    ASSERT_EQ(out, embed(subst(t, s, sig), u));
    ASSERT_EQ(typed_node_count(out), node_count(subst(t, s, sig)));
    ASSERT_EQ(tlift(embed(s, u), u, schema), embed(lift(s, sig), u));
  }
}

TEST(BT, Enumerate) {
  const TypeGrammar& g = stlc2().grammar;
  EXPECT_EQ(bt_enumerate(g, a, 1), std::vector<BTDerivation>{BTDerivation::leaf(a)});
  EXPECT_TRUE(bt_enumerate(g, a, 0).empty());
  const std::vector<TypeExpr> ctx{arr(a, b), a};
  const BTDerivation ex = BTDerivation::node(BTDerivation::leaf(arr(a, b)), BTDerivation::leaf(a));
  EXPECT_EQ(ex.conclusion(), b);
  EXPECT_EQ(ex.context(), ctx);
  EXPECT_EQ(ex.leaves(), 2u);
  EXPECT_EQ(bt_enumerate(g, b, 2, ctx), std::vector<BTDerivation>{ex});
  // Without a context leaves are unrestricted; node types still come from b.
  const auto free = bt_enumerate(g, b, 2);
  EXPECT_EQ(free, (std::vector<BTDerivation>{
                      BTDerivation::leaf(b),
                      BTDerivation::node(BTDerivation::leaf(arr(b, b)), BTDerivation::leaf(b))}));
  EXPECT_THROW(BTDerivation::node(BTDerivation::leaf(a), BTDerivation::leaf(a)), Error);
  EXPECT_THROW(bt_enumerate(g, TypeExpr::base("c"), 2), Error);
}

TEST(BT, EnumerationIsCompleteAndOrdered) {
  const TypeGrammar& g = stlc2().grammar;
  const std::vector<TypeExpr> ctx{arr(a, arr(a, b)), a, arr(a, b)};
  const auto all = bt_enumerate(g, b, 3, ctx);
  // Hand count: b from (a->b)(a); from (a->a->b)(a)(a).
  std::size_t two = 0, three = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i].conclusion(), b);
    if (i > 0) EXPECT_LE(all[i - 1].leaves(), all[i].leaves());
    if (all[i].leaves() == 2) ++two;
    if (all[i].leaves() == 3) ++three;
  }
  EXPECT_EQ(two, 1u);
  EXPECT_EQ(three, 1u);
  EXPECT_EQ(all.size(), 2u);
  EXPECT_EQ(to_string(all[1]), "((a -> a -> b @ a) @ a)");
}

TEST(Values, Arities) {
  const TypeExpr s = TypeExpr::base("b");
  const TypedArity lam_like = values_arity(BTDerivation::leaf(a), s);
  EXPECT_EQ(lam_like.premises, (std::vector<Premise>{Premise{{s}, a}}));
  EXPECT_EQ(lam_like.conclusion, arr(s, a));
  const BTDerivation ex = BTDerivation::node(BTDerivation::leaf(arr(a, b)), BTDerivation::leaf(a));
  const TypedArity app_like = values_arity(ex, s);
  EXPECT_EQ(app_like.premises, (std::vector<Premise>{Premise{{s}, arr(a, b)}, Premise{{s}, a}}));
  EXPECT_EQ(app_like.conclusion, arr(s, b));
  const BTDerivation three = BTDerivation::node(
      BTDerivation::node(BTDerivation::leaf(arr(a, arr(a, b))), BTDerivation::leaf(a)),
      BTDerivation::leaf(a));
  EXPECT_EQ(values_arity(three, s).premises.size(), 3u);
}

TEST(Values, SignatureTypechecksSampleValues) {
  const std::vector<TypeExpr> types{a, b, arr(a, b)};
  const TypedSignatureSchema vs = values_signature(stlc2().grammar, types, 2);
  EXPECT_TRUE(validate_signature(vs).empty());
  EXPECT_FALSE(vs.ops.empty());
  for (const auto& op : vs.ops) {
    EXPECT_TRUE(op.metavars.empty());
    EXPECT_TRUE(op.arity.conclusion.is_arrow());
    EXPECT_EQ(op.name.rfind("L", 0), 0u);
  }
  // Every value op builds a well-typed term from variables of its premise types.
  for (const auto& op : vs.ops) {
    std::vector<TypedTerm> args;
    for (const auto& p : op.arity.premises) args.push_back(tv(0, p.type));
    const TypedTerm t = TypedTerm::op(op.name, {}, args);
    EXPECT_EQ(typecheck(vs, t), op.arity.conclusion);
  }
}

}  // namespace
}  // namespace dbsyn
