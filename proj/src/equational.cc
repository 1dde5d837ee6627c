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

#include <set>

#include "dbsyn/surface.h"

namespace dbsyn {

MetaTerm MetaTerm::mvar(std::size_t i) {
  MetaTerm m;
  m.kind_ = Kind::kMVar;
  m.index_ = i;
  return m;
}

MetaTerm MetaTerm::var(std::size_t n) {
  MetaTerm m;
  m.kind_ = Kind::kVar;
  m.index_ = n;
  return m;
}

MetaTerm MetaTerm::op(Symbol name, std::vector<MetaTerm> args) {
  MetaTerm m;
  m.kind_ = Kind::kOp;
  m.name_ = name;
  m.items_ = std::move(args);
  return m;
}

MetaTerm MetaTerm::subst(MetaTerm body, std::vector<MetaTerm> prefix, std::size_t tail_shift) {
  MetaTerm m;
  m.kind_ = Kind::kSubst;
  m.index_ = tail_shift;
  m.items_.reserve(prefix.size() + 1);
  m.items_.push_back(std::move(body));
  for (auto& p : prefix) m.items_.push_back(std::move(p));
  return m;
}

std::span<const MetaTerm> MetaTerm::args() const { return items_; }

std::span<const MetaTerm> MetaTerm::prefix() const {
  return std::span<const MetaTerm>(items_).subspan(1);
}

bool operator==(const MetaTerm& a, const MetaTerm& b) {
  return a.kind_ == b.kind_ && a.index_ == b.index_ && a.name_ == b.name_ &&
         a.items_ == b.items_;
}

BindingSignature EquationalTheory::metavariable_signature() const {
  BindingSignature t;
  t.name = name + ".T";
  for (const auto& e : equations) t.add(e.name, e.arity);
  return t;
}

Term eval_metaterm(const BindingSignature& sig, std::span<const Term> env, const MetaTerm& mt) {
  switch (mt.kind()) {
    case MetaTerm::Kind::kMVar:
      if (mt.index() >= env.size()) {
        throw Error(ErrorKind::kArgument,
                    "metavariable ?" + std::to_string(mt.index()) + " out of range");
      }
      return env[mt.index()];
    case MetaTerm::Kind::kVar:
      return Term::var(mt.index());
    case MetaTerm::Kind::kOp: {
      std::vector<Term> xs;
      xs.reserve(mt.args().size());
      for (const auto& c : mt.args()) xs.push_back(eval_metaterm(sig, env, c));
      return Term::op(mt.name(), std::move(xs));
    }
    case MetaTerm::Kind::kSubst: {
      std::vector<Term> p;
      for (const auto& c : mt.prefix()) p.push_back(eval_metaterm(sig, env, c));
      return subst(eval_metaterm(sig, env, mt.body()), Assignment(std::move(p), mt.tail_shift()),
                   sig);
    }
  }
  throw Error(ErrorKind::kArgument, "bad metaterm");
}

namespace {

void validate_rec(const BindingSignature& sig, std::size_t p, const MetaTerm& mt,
                  Diagnostics& out) {
  switch (mt.kind()) {
    case MetaTerm::Kind::kMVar:
      if (mt.index() >= p) {
        out.push_back(make_diagnostic(ErrorKind::kValidation,
                                      "metavariable ?" + std::to_string(mt.index()) +
                                          " out of range for " + std::to_string(p) +
                                          " metavariables"));
      }
      return;
    case MetaTerm::Kind::kVar:
      return;
    case MetaTerm::Kind::kOp: {
      const BindingArity* ar = sig.find(mt.name());
      if (!ar) {
        out.push_back(make_diagnostic(ErrorKind::kValidation,
                                      "unknown operation '" + mt.name().str() + "'"));
      } else if (first_order_arity(*ar) != mt.args().size()) {
        out.push_back(make_diagnostic(ErrorKind::kValidation,
                                      "wrong argument count for '" + mt.name().str() + "'"));
      }
      for (const auto& c : mt.args()) validate_rec(sig, p, c, out);
      return;
    }
    case MetaTerm::Kind::kSubst:
      validate_rec(sig, p, mt.body(), out);
      for (const auto& c : mt.prefix()) validate_rec(sig, p, c, out);
      return;
  }
}

void collect_mvars(const MetaTerm& mt, std::multiset<std::size_t>& out) {
  if (mt.kind() == MetaTerm::Kind::kMVar) {
    out.insert(mt.index());
    return;
  }
  if (mt.kind() == MetaTerm::Kind::kOp) {
    for (const auto& c : mt.args()) collect_mvars(c, out);
  } else if (mt.kind() == MetaTerm::Kind::kSubst) {
    collect_mvars(mt.body(), out);
    for (const auto& c : mt.prefix()) collect_mvars(c, out);
  }
}

void pattern_rec(const MetaTerm& mt, Diagnostics& out) {
  switch (mt.kind()) {
    case MetaTerm::Kind::kMVar:
    case MetaTerm::Kind::kVar:
      return;
    case MetaTerm::Kind::kOp:
      for (const auto& c : mt.args()) pattern_rec(c, out);
      return;
    case MetaTerm::Kind::kSubst:
      if (mt.body().kind() != MetaTerm::Kind::kMVar || !mt.prefix().empty()) {
        out.push_back(make_diagnostic(
            ErrorKind::kValidation,
            "left side may use explicit substitution only as { ?i [; ^k] }"));
      }
      return;
  }
}

// t = shift_free(u, k) for the returned u, if all free indices of t are >= k.
std::optional<Term> unshift(const Term& t, std::size_t k, const BindingSignature& sig) {
  if (k == 0) return t;
  using R = std::optional<Term>;
  return fold_scoped<R>(
      t, sig, 0,
      [k](std::size_t i, std::size_t d) -> R {
        if (i < d) return Term::var(i);
        if (i - d < k) return std::nullopt;
        return Term::var(i - k);
      },
      [](const Term& o, std::vector<R>&& kids, std::size_t) -> R {
        std::vector<Term> args;
        args.reserve(kids.size());
        for (auto& c : kids) {
          if (!c) return std::nullopt;
          args.push_back(std::move(*c));
        }
        return Term::op(o.name(), std::move(args));
      });
}

bool match_rec(const BindingSignature& sig, const MetaTerm& pat, const Term& t,
               std::vector<std::optional<Term>>& env) {
  switch (pat.kind()) {
    case MetaTerm::Kind::kMVar:
      if (pat.index() >= env.size()) return false;
      if (env[pat.index()]) return *env[pat.index()] == t;
      env[pat.index()] = t;
      return true;
    case MetaTerm::Kind::kVar:
      return t.is_var() && t.index() == pat.index();
    case MetaTerm::Kind::kOp:
      if (t.is_var() || !(t.name() == pat.name()) || t.args().size() != pat.args().size()) {
        return false;
      }
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (!match_rec(sig, pat.args()[i], t.args()[i], env)) return false;
      }
      return true;
    case MetaTerm::Kind::kSubst: {
      if (pat.body().kind() != MetaTerm::Kind::kMVar || !pat.prefix().empty()) {
        throw Error(ErrorKind::kValidation, "unsupported explicit substitution in pattern");
      }
      auto u = unshift(t, pat.tail_shift(), sig);
      if (!u) return false;
      auto& slot = env.at(pat.body().index());
      if (slot) return *slot == *u;
      slot = std::move(u);
      return true;
    }
  }
  return false;
}

struct Visit {
  const Term* term;
  std::size_t parent;  // index into the visit log; npos for the root
  std::size_t child;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

Term rebuild_path(const std::vector<Visit>& log, std::size_t at, Term replacement) {
  while (log[at].parent != kRoot) {
    const Visit& v = log[at];
    const Term& parent = *log[v.parent].term;
    std::vector<Term> args = parent.args();
    args[v.child] = std::move(replacement);
    replacement = Term::op(parent.name(), std::move(args));
    at = v.parent;
  }
  return replacement;
}

// Pre-order walk; visit(log, index) returns true to stop.
template <class Visitor>
void preorder(const Term& t, Visitor&& visit) {
  std::vector<Visit> log{{&t, kRoot, 0}};
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t at = stack.back();
    stack.pop_back();
    if (visit(log, at)) return;
    const Term& node = *log[at].term;
    if (node.is_var()) continue;
    for (std::size_t i = node.args().size(); i-- > 0;) {
      log.push_back(Visit{&node.args()[i], at, i});
      stack.push_back(log.size() - 1);
    }
  }
}

std::optional<Term> rewrite_here(const EquationalTheory& theory, const Equation& eq,
                                 const Term& t) {
  auto env = match(theory.sig, eq.lhs, first_order_arity(eq.arity), t);
  if (!env) return std::nullopt;
  return eval_metaterm(theory.sig, *env, eq.rhs);
}

}  // namespace

Diagnostics validate_metaterm(const BindingSignature& sig, std::size_t p, const MetaTerm& mt) {
  Diagnostics out;
  validate_rec(sig, p, mt, out);
  return out;
}

Diagnostics validate_pattern(const MetaTerm& lhs) {
  Diagnostics out;
  std::multiset<std::size_t> mv;
  collect_mvars(lhs, mv);
  for (auto i : std::set<std::size_t>(mv.begin(), mv.end())) {
    if (mv.count(i) > 1) {
      out.push_back(make_diagnostic(ErrorKind::kValidation,
                                    "left side is not linear in ?" + std::to_string(i)));
    }
  }
  pattern_rec(lhs, out);
  return out;
}

std::optional<std::vector<Term>> match(const BindingSignature& sig, const MetaTerm& lhs,
                                       std::size_t p, const Term& t) {
  std::vector<std::optional<Term>> env(p);
  if (!match_rec(sig, lhs, t, env)) return std::nullopt;
  std::vector<Term> out;
  out.reserve(p);
  // Metavariables absent from the pattern are unconstrained; validate_theory
  // rejects right sides that would read them.
  for (auto& e : env) out.push_back(e ? std::move(*e) : Term::var(0));
  return out;
}

namespace {

struct HalfCase {
  std::vector<Term> env;
  Assignment s;
};

}  // namespace

LawReport check_half_equation(const BindingSignature& sig, const BindingArity& t_arity,
                              const MetaTerm& side, const LawConfig& cfg) {
  const std::size_t p = first_order_arity(t_arity);
  GenConfig gen;
  gen.max_depth = 4;
  gen.entry_depth = 2;
  const auto named = named_model(sig);

  std::vector<Law<HalfCase>> laws{
      {"half.binding",
       [&](const HalfCase& c) {
         Term lhs = subst(eval_metaterm(sig, c.env, side), c.s, sig);
         std::vector<Term> lifted;
         for (std::size_t i = 0; i < p; ++i) {
           lifted.push_back(subst(c.env[i], lift_n(c.s, t_arity.binders[i], sig), sig));
         }
         return lhs == eval_metaterm(sig, lifted, side);
       }},
      {"half.naturality",
       [&](const HalfCase& c) {
         std::vector<NamedTerm> nenv;
         for (const auto& e : c.env) nenv.push_back(to_named(sig, e));
         return alpha_equal(to_named(sig, eval_metaterm(sig, c.env, side)),
                            eval_metaterm(named, std::span<const NamedTerm>(nenv), side));
       }},
  };
  std::function<HalfCase(Rng&)> draw = [&](Rng& r) {
    HalfCase c;
    for (std::size_t i = 0; i < p; ++i) {
      c.env.push_back(random_term(r, sig, gen.max_depth, gen.free_range));
    }
    c.s = random_assignment(r, sig, gen);
    return c;
  };
  CaseTools<HalfCase> tools;
  tools.show = [](const HalfCase& c) {
    std::string s = "{env=[";
    for (std::size_t i = 0; i < c.env.size(); ++i) {
      if (i) s += ", ";
      s += print_term(c.env[i]);
    }
    return s + "] s=" + print_assignment(c.s) + "}";
  };
  tools.shrink = [](const HalfCase& c) {
    std::vector<HalfCase> out;
    for (std::size_t i = 0; i < c.env.size(); ++i) {
      for (auto& t : shrink_term(c.env[i])) {
        HalfCase d = c;
        d.env[i] = std::move(t);
        out.push_back(std::move(d));
      }
    }
    for (std::size_t i = 0; i < c.s.prefix().size(); ++i) {
      auto pre = c.s.prefix();
      pre.erase(pre.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(HalfCase{c.env, Assignment(std::move(pre), c.s.tail_shift())});
    }
    return out;
  };
  return run_laws(laws, draw, tools, cfg);
}

Diagnostics validate_theory(const EquationalTheory& theory, const LawConfig& cfg) {
  Diagnostics out = validate_signature(theory.sig);
  std::set<std::string> names;
  for (const auto& eq : theory.equations) {
    const std::string where = "equation '" + eq.name + "': ";
    auto tag = [&](Diagnostics ds) {
      for (auto& d : ds) {
        d.message = where + d.message;
        out.push_back(std::move(d));
      }
    };
    if (!names.insert(eq.name).second) {
      out.push_back(make_diagnostic(ErrorKind::kValidation, "duplicate equation '" + eq.name + "'"));
    }
    const std::size_t p = first_order_arity(eq.arity);
    const std::size_t before = out.size();
    tag(validate_metaterm(theory.sig, p, eq.lhs));
    tag(validate_metaterm(theory.sig, p, eq.rhs));
    tag(validate_pattern(eq.lhs));
    std::multiset<std::size_t> in_lhs, in_rhs;
    collect_mvars(eq.lhs, in_lhs);
    collect_mvars(eq.rhs, in_rhs);
    for (auto i : in_rhs) {
      if (!in_lhs.count(i)) {
        out.push_back(make_diagnostic(ErrorKind::kValidation,
                                      where + "right side uses ?" + std::to_string(i) +
                                          " which the left side does not bind"));
        break;
      }
    }
    if (out.size() != before) continue;
    for (const auto* side : {&eq.lhs, &eq.rhs}) {
      LawReport r = check_half_equation(theory.sig, eq.arity, *side, cfg);
      for (const auto& law : r.results) {
        if (law.passed) continue;
        out.push_back(make_diagnostic(
            ErrorKind::kValidation, where + (side == &eq.lhs ? "left" : "right") +
                                        " side fails " + law.law +
                                        " (counterexample " + law.counterexample + ")"));
      }
    }
  }
  return out;
}

std::vector<Term> rewrite_step(const EquationalTheory& theory, const Term& t) {
  std::vector<Term> out;
  preorder(t, [&](const std::vector<Visit>& log, std::size_t at) {
    for (const auto& eq : theory.equations) {
      if (auto r = rewrite_here(theory, eq, *log[at].term)) {
        out.push_back(rebuild_path(log, at, std::move(*r)));
      }
    }
    return false;
  });
  return out;
}

std::optional<Term> first_rewrite(const EquationalTheory& theory, const Term& t) {
  std::optional<Term> out;
  preorder(t, [&](const std::vector<Visit>& log, std::size_t at) {
    for (const auto& eq : theory.equations) {
      if (auto r = rewrite_here(theory, eq, *log[at].term)) {
        out = rebuild_path(log, at, std::move(*r));
        return true;
      }
    }
    return false;
  });
  return out;
}

NormalizeResult normalize(const EquationalTheory& theory, const Term& t, std::size_t fuel) {
  NormalizeResult r{false, t, 0};
  while (true) {
    auto next = first_rewrite(theory, r.term);
    if (!next) {
      r.normal = true;
      return r;
    }
    if (r.steps == fuel) return r;
    r.term = std::move(*next);
    ++r.steps;
  }
}

Equivalence equiv(const EquationalTheory& theory, const Term& a, const Term& b,
                  std::size_t fuel) {
  auto na = normalize(theory, a, fuel);
  auto nb = normalize(theory, b, fuel);
  if (!na.normal || !nb.normal) return Equivalence::kUnknown;
  return na.term == nb.term ? Equivalence::kYes : Equivalence::kNo;
}

const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::kYes: return "yes";
    case Equivalence::kNo: return "no";
    case Equivalence::kUnknown: return "unknown";
  }
  return "unknown";
}

EquationalTheory beta_theory() {
  EquationalTheory th;
  th.name = "beta";
  th.sig = lambda_signature();
  th.equations.push_back(Equation{
      "beta",
      {1, 0},
      MetaTerm::op("app", {MetaTerm::op("lam", {MetaTerm::mvar(0)}), MetaTerm::mvar(1)}),
      MetaTerm::subst(MetaTerm::mvar(0), {MetaTerm::mvar(1)}, 0)});
  return th;
}

EquationalTheory beta_eta_theory() {
  EquationalTheory th = beta_theory();
  th.name = "betaeta";
  th.equations.push_back(Equation{
      "eta",
      {0},
      MetaTerm::op("lam", {MetaTerm::op("app", {MetaTerm::subst(MetaTerm::mvar(0), {}, 1),
                                                MetaTerm::var(0)})}),
      MetaTerm::mvar(0)});
  return th;
}

Term church_numeral(std::size_t n) {
  Term body = Term::var(0);
  for (std::size_t i = 0; i < n; ++i) body = Term::op("app", {Term::var(1), body});
  return Term::op("lam", {Term::op("lam", {body})});
}

Term church_plus() {
  // lam m. lam n. lam f. lam x. m f (n f x)
  auto app = [](Term a, Term b) { return Term::op("app", {std::move(a), std::move(b)}); };
  Term body = app(app(Term::var(3), Term::var(1)), app(app(Term::var(2), Term::var(1)), Term::var(0)));
  for (int i = 0; i < 4; ++i) body = Term::op("lam", {body});
  return body;
}

}  // namespace dbsyn
