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

#include "dbsyn/equational.h"

#include <gtest/gtest.h>

#include "dbsyn/surface.h"
#include "test_support.h"

namespace dbsyn {
namespace {

using testutil::app;
using testutil::lam;
using testutil::v;

using M = MetaTerm;

const BindingSignature& lambda() {
  static const BindingSignature sig = lambda_signature();
  return sig;
}

bool occurs_free(const Term& t, std::size_t k) {
  if (t.is_var()) return t.index() == k;
  const BindingArity& ar = lambda().arity(t.name());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (occurs_free(t.args()[i], k + ar.binders[i])) return true;
  }
  return false;
}

// One-step beta (and optionally eta) reducts in pre-order, computed with the
// clause-by-clause substitution oracle.
std::vector<Term> oracle_reducts(const Term& t, bool eta) {
  std::vector<Term> out;
  if (t.is_var()) return out;
  const std::string op = t.name().str();
  if (op == "app" && !t.args()[0].is_var() && t.args()[0].name().str() == "lam") {
    const Term& arg = t.args()[1];
    out.push_back(testutil::oracle_subst(
        t.args()[0].args()[0], [&](std::size_t n) { return n == 0 ? arg : v(n - 1); },
        lambda()));
  }
  if (eta && op == "lam") {
    const Term& b = t.args()[0];
    if (!b.is_var() && b.name().str() == "app" && b.args()[1] == v(0) &&
        !occurs_free(b.args()[0], 0)) {
      out.push_back(testutil::oracle_rename(
          b.args()[0], [](std::size_t n) { return n - 1; }, lambda()));
    }
  }
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    for (auto& r : oracle_reducts(t.args()[i], eta)) {
      auto args = t.args();
      args[i] = std::move(r);
      out.push_back(Term::op(t.name(), std::move(args)));
    }
  }
  return out;
}

Term random_lambda(Rng& r, std::size_t depth) { return random_term(r, lambda(), depth, 3); }

TEST(MetaTerm, EvaluatesBetaSides) {
  const EquationalTheory beta = beta_theory();
  ASSERT_EQ(beta.equations.size(), 1u);
  const Equation& eq = beta.equations[0];
  EXPECT_EQ(eq.arity, BindingArity({1, 0}));
  EXPECT_EQ(eq.lhs, M::op("app", {M::op("lam", {M::mvar(0)}), M::mvar(1)}));
  EXPECT_EQ(eq.rhs, M::subst(M::mvar(0), {M::mvar(1)}, 0));
  const std::vector<Term> env{v(0), v(1)};
  EXPECT_EQ(eval_metaterm(lambda(), env, eq.lhs), app(lam(v(0)), v(1)));
  EXPECT_EQ(eval_metaterm(lambda(), env, eq.rhs), v(1));
  const std::vector<Term> one{lam(v(4))};
  EXPECT_EQ(eval_metaterm(lambda(), one, M::mvar(0)), lam(v(4)));
  EXPECT_THROW(eval_metaterm(lambda(), one, M::mvar(1)), Error);
}

TEST(MetaTerm, GenericEvaluationAgreesWithTermEvaluation) {
  const auto model = term_model(lambda());
  const MetaTerm mt = M::op("lam", {M::subst(M::mvar(0), {M::var(2), M::mvar(1)}, 3)});
  for (std::size_t i = 0; i < 200; ++i) {
    Rng r = case_rng(1, i);
    const std::vector<Term> env{random_lambda(r, 4), random_lambda(r, 4)};
    EXPECT_EQ(eval_metaterm<Term>(model, env, mt), eval_metaterm(lambda(), env, mt));
  }
}

TEST(MetaVariableSignature, MirrorsEquationArities) {
  const BindingSignature t = beta_eta_theory().metavariable_signature();
  ASSERT_EQ(t.ops.size(), 2u);
  EXPECT_EQ(t.ops[0].arity, BindingArity({1, 0}));
  EXPECT_EQ(t.ops[1].arity, BindingArity({0}));
}

TEST(HalfEquation, BetaSidesPass) {
  const EquationalTheory th = beta_theory();
  const Equation& eq = th.equations[0];
  const LawReport l = check_half_equation(lambda(), {1, 0}, eq.lhs);
  const LawReport r = check_half_equation(lambda(), {1, 0}, eq.rhs);
  EXPECT_TRUE(l.passed()) << l.to_string();
  EXPECT_TRUE(r.passed()) << r.to_string();
}

TEST(HalfEquation, WrongArityFails) {
  const EquationalTheory th = beta_theory();
  const Equation& eq = th.equations[0];
  const LawReport r = check_half_equation(lambda(), {0, 0}, eq.rhs);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("half.binding")->passed);
  // The distinguishing assignment by hand: ?0 = Var 0, ?1 = Var 0, s = Var 1 . id.
  const Assignment s({v(1)}, 0);
  const std::vector<Term> env{v(0), v(0)};
  const std::vector<Term> senv{subst(v(0), s, lambda()), subst(v(0), s, lambda())};
  EXPECT_NE(subst(eval_metaterm(lambda(), env, eq.rhs), s, lambda()),
            eval_metaterm(lambda(), senv, eq.rhs));
}

TEST(HalfEquation, EtaSidesPass) {
  const EquationalTheory th = beta_eta_theory();
  const Equation& eq = th.equations[1];
  EXPECT_TRUE(check_half_equation(lambda(), {0}, eq.lhs).passed());
  EXPECT_TRUE(check_half_equation(lambda(), {0}, eq.rhs).passed());
  // Dropping the shift breaks the binding condition.
  const MetaTerm bad = M::op("lam", {M::op("app", {M::mvar(0), M::var(0)})});
  EXPECT_FALSE(check_half_equation(lambda(), {0}, bad).passed());
}

TEST(ValidateTheory, BuiltinsAreValid) {
  EXPECT_TRUE(validate_theory(beta_theory()).empty());
  EXPECT_TRUE(validate_theory(beta_eta_theory()).empty());
}

TEST(ValidateTheory, RejectsBadTheories) {
  EquationalTheory th;
  th.name = "bad";
  th.sig = lambda();
  th.equations.push_back({"nonlinear", {0, 0}, M::op("app", {M::mvar(0), M::mvar(0)}), M::mvar(1)});
  th.equations.push_back({"unbound", {0, 0}, M::op("app", {M::mvar(0), M::var(0)}), M::mvar(1)});
  th.equations.push_back({"range", {0}, M::mvar(3), M::mvar(0)});
  th.equations.push_back({"arity", {0}, M::op("app", {M::mvar(0)}), M::mvar(0)});
  th.equations.push_back({"range", {0}, M::op("lam", {M::mvar(0)}), M::mvar(0)});
  th.equations.push_back({"lifting", {0, 0}, M::op("app", {M::op("lam", {M::mvar(0)}), M::mvar(1)}),
                          M::subst(M::mvar(0), {M::mvar(1)}, 0)});
  const Diagnostics ds = validate_theory(th);
  const std::string all = format_diagnostics(ds);
  EXPECT_NE(all.find("not linear"), std::string::npos) << all;
  EXPECT_NE(all.find("does not bind"), std::string::npos) << all;
  EXPECT_NE(all.find("duplicate equation 'range'"), std::string::npos) << all;
  EXPECT_NE(all.find("equation 'arity'"), std::string::npos) << all;
  EXPECT_NE(all.find("equation 'lifting': right side fails half.binding"), std::string::npos) << all;
  EXPECT_EQ(all.find("equation 'range': left side is not linear"), std::string::npos);
}

TEST(ValidateTheory, RejectsSubstitutedMetavariablesWithRenamingPrefix) {
  // Only pure shifts of a metavariable can be matched.
  EXPECT_FALSE(validate_pattern(M::op("lam", {M::subst(M::mvar(0), {M::var(1)}, 0)})).empty());
  EXPECT_TRUE(validate_pattern(M::op("lam", {M::subst(M::mvar(0), {}, 1)})).empty());
}

TEST(Match, BindsArgumentSlots) {
  const EquationalTheory beta = beta_theory();
  const EquationalTheory be = beta_eta_theory();
  const MetaTerm& lhs = beta.equations[0].lhs;
  const auto m = match(lambda(), lhs, 2, app(lam(app(v(0), v(2))), v(7)));
  ASSERT_TRUE(m);
  EXPECT_EQ((*m)[0], app(v(0), v(2)));
  EXPECT_EQ((*m)[1], v(7));
  EXPECT_FALSE(match(lambda(), lhs, 2, app(v(0), v(1))));
  // Under an explicit shift the bound term must avoid the shifted-out index.
  const MetaTerm& eta = be.equations[1].lhs;
  const auto e = match(lambda(), eta, 1, lam(app(v(6), v(0))));
  ASSERT_TRUE(e);
  EXPECT_EQ((*e)[0], v(5));
  EXPECT_FALSE(match(lambda(), eta, 1, lam(app(v(0), v(0)))));
}

TEST(RewriteStep, Examples) {
  const EquationalTheory beta = beta_theory();
  EXPECT_EQ(rewrite_step(beta, app(lam(v(0)), v(3))), std::vector<Term>{v(3)});
  EXPECT_TRUE(rewrite_step(beta, v(0)).empty());
  EXPECT_EQ(rewrite_step(beta, app(lam(app(v(0), v(0))), v(3))),
            std::vector<Term>{app(v(3), v(3))});
  // Leftmost-outermost ordering.
  const Term i = lam(v(0));
  const Term t = app(app(i, app(i, v(1))), app(i, v(2)));
  const std::vector<Term> expected{app(app(i, v(1)), app(i, v(2))),
                                   app(app(i, v(1)), app(i, v(2))),
                                   app(app(i, app(i, v(1))), v(2))};
  EXPECT_EQ(rewrite_step(beta, t), expected);
  EXPECT_EQ(first_rewrite(beta, t), expected[0]);
}

TEST(RewriteStep, AgreesWithReductionOracle) {
  const EquationalTheory beta = beta_theory();
  const EquationalTheory be = beta_eta_theory();
  std::size_t with_redex = 0;
  for (std::size_t i = 0; i < 2000; ++i) {
    Rng r = case_rng(2, i);
    const Term t = random_lambda(r, 6);
    const auto got = rewrite_step(beta, t);
    ASSERT_EQ(got, oracle_reducts(t, false)) << print_term(t);
    ASSERT_EQ(rewrite_step(be, t), oracle_reducts(t, true)) << print_term(t);
    for (const auto& u : got) ASSERT_TRUE(wellformed(lambda(), u).empty());
    if (!got.empty()) ++with_redex;
  }
  EXPECT_GT(with_redex, 200u);
}

TEST(RewriteStep, StableUnderSubstitution) {
  const EquationalTheory be = beta_eta_theory();
  GenConfig cfg;
  std::size_t checked = 0;
  for (std::size_t i = 0; i < 2000; ++i) {
    Rng r = case_rng(3, i);
    const Term t = random_lambda(r, 6);
    const Assignment s = random_assignment(r, lambda(), cfg);
    const auto next = rewrite_step(be, t);
    if (next.empty()) continue;
    const auto st = rewrite_step(be, subst(t, s, lambda()));
    for (const auto& u : next) {
      ++checked;
      ASSERT_NE(std::find(st.begin(), st.end(), subst(u, s, lambda())), st.end()) << print_term(t);
    }
  }
  EXPECT_GT(checked, 200u);
}

TEST(Normalize, Examples) {
  const EquationalTheory beta = beta_theory();
  const NormalizeResult a = normalize(beta, app(lam(v(0)), v(3)), 10);
  EXPECT_TRUE(a.normal);
  EXPECT_EQ(a.term, v(3));
  EXPECT_EQ(a.steps, 1u);
  const NormalizeResult w = normalize(beta, testutil::omega(), 50);
  EXPECT_FALSE(w.normal);
  EXPECT_EQ(w.steps, 50u);
  EXPECT_EQ(w.term, testutil::omega());
  const NormalizeResult z = normalize(beta, v(2), 0);
  EXPECT_TRUE(z.normal);
  EXPECT_FALSE(normalize(beta, app(lam(v(0)), v(3)), 0).normal);
}

TEST(Normalize, ChurchArithmetic) {
  const EquationalTheory beta = beta_theory();
  for (std::size_t n = 0; n < 6; ++n) EXPECT_EQ(testutil::church_value(church_numeral(n)), n);
  for (std::size_t m = 0; m < 4; ++m) {
    for (std::size_t n = 0; n < 4; ++n) {
      const Term t = app(app(church_plus(), church_numeral(m)), church_numeral(n));
      const NormalizeResult r = normalize(beta, t, 10000);
      ASSERT_TRUE(r.normal);
      EXPECT_EQ(testutil::church_value(r.term), m + n) << print_term(r.term);
    }
  }
  // Leftmost-outermost discards a diverging argument.
  const Term k = lam(lam(v(1)));
  const NormalizeResult r = normalize(beta, app(app(k, v(0)), testutil::omega()), 20);
  EXPECT_TRUE(r.normal);
  EXPECT_EQ(r.term, v(0));
}

TEST(Normalize, Deterministic) {
  const EquationalTheory be = beta_eta_theory();
  for (std::size_t i = 0; i < 300; ++i) {
    Rng r = case_rng(4, i);
    const Term t = random_lambda(r, 6);
    const NormalizeResult a = normalize(be, t, 200), b = normalize(be, t, 200);
    EXPECT_EQ(a.term, b.term);
    EXPECT_EQ(a.normal, b.normal);
    EXPECT_EQ(a.steps, b.steps);
    if (a.normal) EXPECT_TRUE(rewrite_step(be, a.term).empty());
  }
}

TEST(Equiv, Examples) {
  const EquationalTheory beta = beta_theory();
  EXPECT_EQ(equiv(beta, app(lam(v(0)), v(3)), v(3), 100), Equivalence::kYes);
  EXPECT_EQ(equiv(beta, v(0), v(1), 100), Equivalence::kNo);
  EXPECT_EQ(equiv(beta, testutil::omega(), v(0), 50), Equivalence::kUnknown);
  EXPECT_STREQ(to_string(Equivalence::kYes), "yes");
  EXPECT_STREQ(to_string(Equivalence::kNo), "no");
  EXPECT_STREQ(to_string(Equivalence::kUnknown), "unknown");
}

TEST(Equiv, EtaInstance) {
  const EquationalTheory be = beta_eta_theory();
  const Term t = v(5);
  const Term expanded = lam(app(rename(t, Renaming::shift(1), lambda()), v(0)));
  EXPECT_EQ(expanded, lam(app(v(6), v(0))));
  EXPECT_EQ(equiv(be, expanded, t, 10), Equivalence::kYes);
  EXPECT_EQ(equiv(beta_theory(), expanded, t, 10), Equivalence::kNo);
  EXPECT_EQ(rewrite_step(be, app(lam(v(0)), v(3))), std::vector<Term>{v(3)});
  for (std::size_t i = 0; i < 300; ++i) {
    Rng r = case_rng(5, i);
    const Term u = random_lambda(r, 4);
    const Term eu = lam(app(rename(u, Renaming::shift(1), lambda()), v(0)));
    EXPECT_EQ(equiv(be, eu, u, 500), equiv(be, u, u, 500)) << print_term(u);
  }
}

TEST(Equiv, Congruence) {
  const EquationalTheory beta = beta_theory();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < 500; ++i) {
    Rng r = case_rng(6, i);
    const Term b1 = random_lambda(r, 4), b2 = random_lambda(r, 4);
    const Term a1 = app(lam(v(0)), b1);
    const Term a2 = app(lam(lam(v(1))), b2);
    const Term a2full = app(a2, v(9));
    if (equiv(beta, a1, b1, 500) != Equivalence::kYes) continue;
    if (equiv(beta, a2full, b2, 500) != Equivalence::kYes) continue;
    EXPECT_EQ(equiv(beta, lam(a1), lam(b1), 500), Equivalence::kYes);
    if (normalize(beta, app(b1, b2), 500).normal) {
      ++checked;
      EXPECT_EQ(equiv(beta, app(a1, a2full), app(b1, b2), 1000), Equivalence::kYes);
    }
  }
  EXPECT_GT(checked, 100u);
}

}  // namespace
}  // namespace dbsyn
