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

#include <algorithm>
#include <set>

#include "dbsyn/gen.h"
#include "dbsyn/surface.h"

namespace dbsyn {

struct TypedTerm::Node {
  bool is_var = false;
  std::size_t index = 0;
  TypeExpr type;
  Symbol name;
  std::vector<TypeExpr> type_args;
  std::vector<TypedTerm> args;
};

TypedTerm TypedTerm::var(std::size_t index, TypeExpr type) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->index = index;
  n->type = std::move(type);
  return TypedTerm(std::move(n));
}

TypedTerm TypedTerm::op(Symbol name, std::vector<TypeExpr> type_args,
                        std::vector<TypedTerm> args) {
  auto n = std::make_shared<Node>();
  n->name = name;
  n->type_args = std::move(type_args);
  n->args = std::move(args);
  return TypedTerm(std::move(n));
}

bool TypedTerm::is_var() const { return node_->is_var; }
std::size_t TypedTerm::index() const { return node_->index; }
const TypeExpr& TypedTerm::type() const { return node_->type; }
Symbol TypedTerm::name() const { return node_->name; }
const std::vector<TypeExpr>& TypedTerm::type_args() const { return node_->type_args; }
const std::vector<TypedTerm>& TypedTerm::args() const { return node_->args; }

bool operator==(const TypedTerm& a, const TypedTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.index() == b.index() && a.type() == b.type();
  return a.name() == b.name() && a.type_args() == b.type_args() && a.args() == b.args();
}

TypeCounts count_types(std::span<const TypeExpr> gamma) {
  TypeCounts c;
  for (const auto& t : gamma) ++c[t];
  return c;
}

namespace {

std::size_t count_of(const TypeCounts& c, const TypeExpr& t) {
  auto it = c.find(t);
  return it == c.end() ? 0 : it->second;
}

TypeCounts plus(TypeCounts c, std::span<const TypeExpr> gamma) {
  for (const auto& t : gamma) ++c[t];
  return c;
}

}  // namespace

TypedAssignment TypedAssignment::single(const TypeExpr& type, std::vector<TypedTerm> prefix,
                                        std::size_t tail_shift) {
  TypedAssignment a;
  a.set(type, std::move(prefix), tail_shift);
  return a;
}

TypedAssignment& TypedAssignment::set(const TypeExpr& type, std::vector<TypedTerm> prefix,
                                      std::size_t tail_shift) {
  while (!prefix.empty() && tail_shift > 0 &&
         prefix.back() == TypedTerm::var(tail_shift - 1, type)) {
    prefix.pop_back();
    --tail_shift;
  }
  if (prefix.empty() && tail_shift == 0) {
    comps_.erase(type);
  } else {
    comps_.insert_or_assign(type, TypedComponent{std::move(prefix), tail_shift});
  }
  return *this;
}

TypedTerm TypedAssignment::operator()(std::size_t n, const TypeExpr& type) const {
  auto it = comps_.find(type);
  if (it == comps_.end()) return TypedTerm::var(n, type);
  const auto& c = it->second;
  if (n < c.prefix.size()) return c.prefix[n];
  return TypedTerm::var(c.tail_shift + (n - c.prefix.size()), type);
}

TypedComponent TypedAssignment::component(const TypeExpr& type) const {
  auto it = comps_.find(type);
  return it == comps_.end() ? TypedComponent{} : it->second;
}

TypedArity arity_of(const TypedSignatureSchema& schema, const TypedTerm& op_node) {
  try {
    return schema.instantiate(op_node.name().str(), op_node.type_args());
  } catch (const Error& e) {
    throw Error(ErrorKind::kType, e.diagnostics().front().message);
  }
}

namespace {

TypeExpr typecheck_rec(const TypedSignatureSchema& schema, const TypedTerm& t,
                       std::vector<std::size_t>& path) {
  auto fail = [&path](std::string msg) {
    throw Error(make_diagnostic(ErrorKind::kType, std::move(msg), std::nullopt, path));
  };
  if (t.is_var()) {
    if (!validate_type(t.type(), schema.grammar).empty()) {
      fail("variable #" + std::to_string(t.index()) + " is annotated with '" +
           to_string(t.type()) + "', which is not a type of the grammar");
    }
    return t.type();
  }
  TypedArity ar;
  try {
    ar = arity_of(schema, t);
  } catch (const Error& e) {
    fail(e.diagnostics().front().message);
  }
  if (ar.premises.size() != t.args().size()) {
    fail("operation '" + t.name().str() + "' expects " + std::to_string(ar.premises.size()) +
         " arguments, got " + std::to_string(t.args().size()));
  }
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    path.push_back(i);
    TypeExpr got = typecheck_rec(schema, t.args()[i], path);
    if (got != ar.premises[i].type) {
      fail("argument " + std::to_string(i) + " of '" + t.name().str() + "' has type " +
           to_string(got) + ", expected " + to_string(ar.premises[i].type));
    }
    path.pop_back();
  }
  return ar.conclusion;
}

using TypedFn = std::function<TypedTerm(std::size_t, const TypeExpr&)>;

TypedTerm shift_rec(const TypedTerm& t, const TypeCounts& k, const TypeCounts& bound,
                    const TypedSignatureSchema& schema) {
  if (t.is_var()) {
    const std::size_t b = count_of(bound, t.type());
    const std::size_t add = count_of(k, t.type());
    if (t.index() < b || add == 0) return t;
    return TypedTerm::var(t.index() + add, t.type());
  }
  const TypedArity ar = arity_of(schema, t);
  std::vector<TypedTerm> args;
  args.reserve(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    args.push_back(shift_rec(t.args()[i], k, plus(bound, ar.premises.at(i).context), schema));
  }
  return TypedTerm::op(t.name(), t.type_args(), std::move(args));
}

TypedTerm subst_rec(const TypedTerm& t, const TypedFn& s, const TypeCounts& bound,
                    const TypedSignatureSchema& schema) {
  if (t.is_var()) {
    const std::size_t b = count_of(bound, t.type());
    if (t.index() < b) return t;
    TypedTerm img = s(t.index() - b, t.type());
    return bound.empty() ? img : shift_rec(img, bound, {}, schema);
  }
  const TypedArity ar = arity_of(schema, t);
  std::vector<TypedTerm> args;
  args.reserve(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    args.push_back(subst_rec(t.args()[i], s, plus(bound, ar.premises.at(i).context), schema));
  }
  return TypedTerm::op(t.name(), t.type_args(), std::move(args));
}

TypedTerm tsubst_fn(const TypedTerm& t, const TypedFn& s, const TypedSignatureSchema& schema) {
  return subst_rec(t, s, {}, schema);
}

}  // namespace

TypeExpr typecheck(const TypedSignatureSchema& schema, const TypedTerm& t) {
  std::vector<std::size_t> path;
  return typecheck_rec(schema, t, path);
}

Diagnostics check_typed(const TypedSignatureSchema& schema, const TypedTerm& t) {
  try {
    typecheck(schema, t);
  } catch (const Error& e) {
    return e.diagnostics();
  }
  return {};
}

TypedTerm tshift(const TypedTerm& t, const TypeCounts& k, const TypedSignatureSchema& schema) {
  return shift_rec(t, k, {}, schema);
}

TypedAssignment tlift(const TypedAssignment& s, const TypeExpr& tau,
                      const TypedSignatureSchema& schema) {
  const TypeCounts up{{tau, 1}};
  TypedAssignment out;
  for (const auto& [ty, c] : s.components()) {
    std::vector<TypedTerm> prefix;
    std::size_t tail = c.tail_shift;
    if (ty == tau) {
      prefix.push_back(TypedTerm::var(0, tau));
      ++tail;
    }
    for (const auto& p : c.prefix) prefix.push_back(tshift(p, up, schema));
    out.set(ty, std::move(prefix), tail);
  }
  return out;
}

TypedAssignment tlift_gamma(const TypedAssignment& s, std::span<const TypeExpr> gamma,
                            const TypedSignatureSchema& schema) {
  TypedAssignment out = s;
  for (const auto& ty : gamma) out = tlift(out, ty, schema);
  return out;
}

TypedTerm tsubst(const TypedTerm& t, const TypedAssignment& s,
                 const TypedSignatureSchema& schema) {
  if (s.components().empty()) return t;
  return tsubst_fn(t, [&s](std::size_t n, const TypeExpr& ty) { return s(n, ty); }, schema);
}

TypedAssignment tcompose(const TypedAssignment& s, const TypedAssignment& t,
                         const TypedSignatureSchema& schema) {
  std::set<TypeExpr> types;
  for (const auto& [ty, c] : s.components()) types.insert(ty);
  for (const auto& [ty, c] : t.components()) types.insert(ty);
  TypedAssignment out;
  for (const auto& ty : types) {
    const TypedComponent sc = s.component(ty);
    const TypedComponent tc = t.component(ty);
    std::vector<TypedTerm> prefix;
    for (const auto& p : sc.prefix) prefix.push_back(tsubst(p, t, schema));
    std::size_t tail;
    if (sc.tail_shift >= tc.prefix.size()) {
      tail = tc.tail_shift + (sc.tail_shift - tc.prefix.size());
    } else {
      prefix.insert(prefix.end(), tc.prefix.begin() + static_cast<std::ptrdiff_t>(sc.tail_shift),
                    tc.prefix.end());
      tail = tc.tail_shift;
    }
    out.set(ty, std::move(prefix), tail);
  }
  return out;
}

std::size_t typed_node_count(const TypedTerm& t) {
  std::size_t n = 1;
  if (!t.is_var()) {
    for (const auto& a : t.args()) n += typed_node_count(a);
  }
  return n;
}


bool match_type(const TypeExpr& pattern, const TypeExpr& ground,
                std::span<const std::string> metavars, std::map<std::string, TypeExpr>& bound) {
  if (pattern.args.empty() &&
      std::find(metavars.begin(), metavars.end(), pattern.head) != metavars.end()) {
    auto [it, fresh] = bound.emplace(pattern.head, ground);
    return fresh || it->second == ground;
  }
  if (pattern.head != ground.head || pattern.args.size() != ground.args.size()) return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (!match_type(pattern.args[i], ground.args[i], metavars, bound)) return false;
  }
  return true;
}

TypeExpr random_type(Rng& rng, const TypeGrammar& g, std::size_t max_depth) {
  std::vector<const std::pair<std::string, std::size_t>*> bases, all;
  for (const auto& c : g.ctors) {
    all.push_back(&c);
    if (c.second == 0) bases.push_back(&c);
  }
  if (bases.empty()) throw Error(ErrorKind::kArgument, "type grammar has no base type");
  const auto* pick = (max_depth == 0 || rng.chance(1, 2)) ? bases[rng.below(bases.size())]
                                                          : all[rng.below(all.size())];
  TypeExpr t{pick->first, {}};
  for (std::size_t i = 0; i < pick->second; ++i) {
    t.args.push_back(random_type(rng, g, max_depth == 0 ? 0 : max_depth - 1));
  }
  return t;
}

namespace {

TypedTerm random_typed_at(Rng& rng, const TypedSignatureSchema& schema, const TypeExpr& type,
                          const TypedGenConfig& cfg, const TypeCounts& bound, std::size_t budget) {
  auto leaf = [&] {
    return TypedTerm::var(rng.below(count_of(bound, type) + std::max<std::size_t>(cfg.free_range, 1)),
                          type);
  };
  if (budget == 0 || rng.chance(1, 3)) return leaf();
  std::vector<std::pair<const TypedOpSchema*, std::map<std::string, TypeExpr>>> fits;
  for (const auto& op : schema.ops) {
    std::map<std::string, TypeExpr> m;
    if (match_type(op.arity.conclusion, type, op.metavars, m)) fits.emplace_back(&op, std::move(m));
  }
  if (fits.empty()) return leaf();
  auto& [op, m] = fits[rng.below(fits.size())];
  std::vector<TypeExpr> tys;
  for (const auto& v : op->metavars) {
    auto it = m.find(v);
    tys.push_back(it != m.end() ? it->second : random_type(rng, schema.grammar, cfg.type_depth));
  }
  const TypedArity ar = schema.instantiate(op->name, tys);
  std::vector<TypedTerm> args;
  for (const auto& p : ar.premises) {
    args.push_back(random_typed_at(rng, schema, p.type, cfg, plus(bound, p.context), budget - 1));
  }
  return TypedTerm::op(op->name, std::move(tys), std::move(args));
}

}  // namespace

TypedTerm random_typed_term(Rng& rng, const TypedSignatureSchema& schema, const TypeExpr& type,
                            const TypedGenConfig& cfg, const TypeCounts& bound) {
  return random_typed_at(rng, schema, type, cfg, bound, cfg.max_depth);
}

TypedAssignment random_typed_assignment(Rng& rng, const TypedSignatureSchema& schema,
                                        const TypedGenConfig& cfg) {
  TypedAssignment a;
  for (std::size_t k = 0; k < cfg.assign_types; ++k) {
    const TypeExpr ty = random_type(rng, schema.grammar, cfg.type_depth);
    std::vector<TypedTerm> prefix;
    const std::size_t q = rng.below(cfg.max_prefix + 1);
    TypedGenConfig entry = cfg;
    entry.max_depth = cfg.entry_depth;
    for (std::size_t i = 0; i < q; ++i) prefix.push_back(random_typed_term(rng, schema, ty, entry));
    a.set(ty, std::move(prefix), rng.below(cfg.max_shift + 1));
  }
  return a;
}

TypedSampler<TypedTerm> typed_term_sampler(const TypedSignatureSchema& schema,
                                           const TypedGenConfig& cfg) {
  auto shared = std::make_shared<const TypedSignatureSchema>(schema);
  TypedSampler<TypedTerm> s;
  s.type = [shared, cfg](Rng& r) { return random_type(r, shared->grammar, cfg.type_depth); };
  s.element = [shared, cfg](Rng& r, const TypeExpr& ty) {
    return random_typed_term(r, *shared, ty, cfg);
  };
  s.assignment = [shared, cfg](Rng& r) {
    TypedFinite<TypedTerm> f;
    const TypedAssignment a = random_typed_assignment(r, *shared, cfg);
    for (const auto& [ty, c] : a.components()) {
      f.comps.emplace(ty, std::make_pair(c.prefix, c.tail_shift));
    }
    return f;
  };
  return s;
}

TypedModel<TypedTerm> typed_term_model(const TypedSignatureSchema& schema) {
  auto shared = std::make_shared<const TypedSignatureSchema>(schema);
  TypedModel<TypedTerm> m;
  m.name = "typed-term";
  m.variables = [](std::size_t n, const TypeExpr& ty) { return TypedTerm::var(n, ty); };
  m.substitute = [shared](const TypedTerm& t, const TypedValuation<TypedTerm>& s) {
    return tsubst_fn(t, s, *shared);
  };
  m.equal = [](const TypedTerm& a, const TypedTerm& b) { return a == b; };
  m.show = [](const TypedTerm& t) { return print_typed_term(t); };
  for (const auto& op : schema.ops) {
    m.ops[Symbol::intern(op.name)] = [name = Symbol::intern(op.name)](
                                         std::span<const TypeExpr> tys,
                                         std::span<const TypedTerm> xs) {
      return TypedTerm::op(name, std::vector<TypeExpr>(tys.begin(), tys.end()),
                           std::vector<TypedTerm>(xs.begin(), xs.end()));
    };
  }
  return m;
}

namespace {

struct InvarianceCase {
  TypeExpr type;
  TypedTerm t;
  TypedAssignment s;
};

}  // namespace

LawReport check_subject_invariance(const TypedSignatureSchema& schema, const TypedGenConfig& gen,
                                   const LawConfig& cfg) {
  std::vector<Law<InvarianceCase>> laws{
      {"typed.subject_invariance", [&](const InvarianceCase& c) {
         return typecheck(schema, c.t) == c.type &&
                typecheck(schema, tsubst(c.t, c.s, schema)) == c.type;
       }}};
  std::function<InvarianceCase(Rng&)> draw = [&](Rng& r) {
    TypeExpr ty = random_type(r, schema.grammar, gen.type_depth);
    TypedTerm t = random_typed_term(r, schema, ty, gen);
    return InvarianceCase{std::move(ty), std::move(t), random_typed_assignment(r, schema, gen)};
  };
  CaseTools<InvarianceCase> tools;
  tools.show = [](const InvarianceCase& c) {
    return "{type=" + to_string(c.type) + " t=" + print_typed_term(c.t) +
           " s=" + print_typed_assignment(c.s) + "}";
  };
  return run_laws(laws, draw, tools, cfg);
}

LawReport check_typed_laws(const TypedSignatureSchema& schema, const TypedGenConfig& gen,
                           const LawConfig& cfg) {
  const auto model = typed_term_model(schema);
  const auto sampler = typed_term_sampler(schema, gen);
  LawReport report = check_typed_monad_laws(model, sampler, cfg);
  report.append(check_typed_binding_conditions(schema, model, sampler, gen, cfg));
  report.append(check_subject_invariance(schema, gen, cfg));
  return report;
}

TypedSignatureSchema single_type_schema(const BindingSignature& sig, const std::string& base) {
  TypedSignatureSchema s;
  s.name = sig.name;
  s.grammar.ctors.emplace_back(base, 0);
  const TypeExpr u = TypeExpr::base(base);
  for (const auto& op : sig.ops) {
    TypedOpSchema o;
    o.name = op.name.str();
    for (auto n : op.arity.binders) {
      o.arity.premises.push_back(Premise{std::vector<TypeExpr>(n, u), u});
    }
    o.arity.conclusion = u;
    s.ops.push_back(std::move(o));
  }
  return s;
}

TypedTerm embed(const Term& t, const TypeExpr& type) {
  if (t.is_var()) return TypedTerm::var(t.index(), type);
  std::vector<TypedTerm> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(embed(a, type));
  return TypedTerm::op(t.name(), {}, std::move(args));
}

TypedAssignment embed(const Assignment& s, const TypeExpr& type) {
  std::vector<TypedTerm> prefix;
  for (const auto& p : s.prefix()) prefix.push_back(embed(p, type));
  return TypedAssignment::single(type, std::move(prefix), s.tail_shift());
}

Term erase(const TypedTerm& t) {
  if (t.is_var()) return Term::var(t.index());
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(erase(a));
  return Term::op(t.name(), std::move(args));
}

namespace {

struct DegenerateCase {
  Term t;
  Assignment s;
};

}  // namespace

LawReport check_degenerate_reduction(const BindingSignature& sig, const LawConfig& cfg) {
  const auto schema = single_type_schema(sig);
  const TypeExpr u = TypeExpr::base("u");
  GenConfig gen;
  gen.max_depth = 6;
  std::vector<Law<DegenerateCase>> laws{
      {"typed.degenerate.subst",
       [&](const DegenerateCase& c) {
         const TypedTerm typed = tsubst(embed(c.t, u), embed(c.s, u), schema);
         const Term plain = subst(c.t, c.s, sig);
         return typed == embed(plain, u) && erase(typed) == plain;
       }},
      {"typed.degenerate.lift",
       [&](const DegenerateCase& c) {
         return tlift(embed(c.s, u), u, schema) == embed(lift(c.s, sig), u);
       }},
  };
  std::function<DegenerateCase(Rng&)> draw = [&](Rng& r) {
    DegenerateCase c{random_term(r, sig, gen.max_depth, gen.free_range), {}};
    c.s = random_assignment(r, sig, gen);
    return c;
  };
  CaseTools<DegenerateCase> tools;
  tools.show = [](const DegenerateCase& c) {
    return "{t=" + print_term(c.t) + " s=" + print_assignment(c.s) + "}";
  };
  tools.shrink = [](const DegenerateCase& c) {
    std::vector<DegenerateCase> out;
    for (auto& t : shrink_term(c.t)) out.push_back(DegenerateCase{std::move(t), c.s});
    return out;
  };
  return run_laws(laws, draw, tools, cfg);
}


struct BTDerivation::Node {
  TypeExpr conclusion;
  std::vector<BTDerivation> kids;  // empty for a leaf, else left and right
  std::size_t leaves = 1;
};

BTDerivation BTDerivation::leaf(TypeExpr type) {
  auto n = std::make_shared<Node>();
  n->conclusion = std::move(type);
  return BTDerivation(std::move(n));
}

BTDerivation BTDerivation::node(BTDerivation left, BTDerivation right) {
  const TypeExpr& f = left.conclusion();
  if (!f.is_arrow() || f.domain() != right.conclusion()) {
    throw Error(ErrorKind::kType, "cannot apply a derivation of " + to_string(f) +
                                      " to one of " + to_string(right.conclusion()));
  }
  auto n = std::make_shared<Node>();
  n->conclusion = f.codomain();
  n->leaves = left.leaves() + right.leaves();
  n->kids.push_back(std::move(left));
  n->kids.push_back(std::move(right));
  return BTDerivation(std::move(n));
}

bool BTDerivation::is_leaf() const { return node_->kids.empty(); }
const TypeExpr& BTDerivation::conclusion() const { return node_->conclusion; }
std::size_t BTDerivation::leaves() const { return node_->leaves; }

const BTDerivation& BTDerivation::left() const { return node_->kids.at(0); }
const BTDerivation& BTDerivation::right() const { return node_->kids.at(1); }

std::vector<TypeExpr> BTDerivation::context() const {
  if (is_leaf()) return {conclusion()};
  auto out = left().context();
  auto r = right().context();
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

bool operator==(const BTDerivation& a, const BTDerivation& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.conclusion() == b.conclusion();
  return a.left() == b.left() && a.right() == b.right();
}

std::string to_string(const BTDerivation& d) {
  if (d.is_leaf()) return to_string(d.conclusion());
  return "(" + to_string(d.left()) + " @ " + to_string(d.right()) + ")";
}

namespace {

void subexpressions(const TypeExpr& t, std::vector<TypeExpr>& out) {
  if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  for (const auto& a : t.args) subexpressions(a, out);
}

struct BTEnumerator {
  std::vector<TypeExpr> universe;
  std::optional<std::vector<TypeExpr>> context;
  std::map<std::pair<TypeExpr, std::size_t>, std::vector<BTDerivation>> memo;

  // Derivations with exactly n leaves.
  const std::vector<BTDerivation>& exactly(const TypeExpr& tau, std::size_t n) {
    auto key = std::make_pair(tau, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<BTDerivation> out;
    if (n == 1) {
      if (!context || std::find(context->begin(), context->end(), tau) != context->end()) {
        out.push_back(BTDerivation::leaf(tau));
      }
    } else {
      for (std::size_t k = 1; k < n; ++k) {
        for (const auto& sigma : universe) {
          const auto ls = exactly(TypeExpr::arrow(sigma, tau), k);
          if (ls.empty()) continue;
          const auto rs = exactly(sigma, n - k);
          for (const auto& l : ls) {
            for (const auto& r : rs) out.push_back(BTDerivation::node(l, r));
          }
        }
      }
    }
    return memo[key] = std::move(out);
  }
};

}  // namespace

std::vector<BTDerivation> bt_enumerate(const TypeGrammar& grammar, const TypeExpr& conclusion,
                                       std::size_t max_leaves,
                                       const std::optional<std::vector<TypeExpr>>& context) {
  Diagnostics ds = validate_type(conclusion, grammar);
  if (context) {
    for (const auto& t : *context) {
      auto more = validate_type(t, grammar);
      ds.insert(ds.end(), more.begin(), more.end());
    }
  }
  if (!ds.empty()) throw Error(std::move(ds));
  BTEnumerator e;
  e.context = context;
  subexpressions(conclusion, e.universe);
  if (context) {
    for (const auto& t : *context) subexpressions(t, e.universe);
  }
  std::vector<BTDerivation> out;
  for (std::size_t n = 1; n <= max_leaves; ++n) {
    const auto& level = e.exactly(conclusion, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

TypedArity values_arity(const BTDerivation& pi, const TypeExpr& sigma) {
  TypedArity a;
  for (auto& tau : pi.context()) a.premises.push_back(Premise{{sigma}, std::move(tau)});
  a.conclusion = TypeExpr::arrow(sigma, pi.conclusion());
  return a;
}

TypedSignatureSchema values_signature(const TypeGrammar& grammar,
                                      const std::vector<TypeExpr>& types,
                                      std::size_t max_leaves) {
  TypedSignatureSchema s;
  s.name = "values";
  s.grammar = grammar;
  std::size_t k = 0;
  for (const auto& sigma : types) {
    for (const auto& tau : types) {
      for (const auto& pi : bt_enumerate(grammar, tau, max_leaves, types)) {
        s.ops.push_back(TypedOpSchema{"L" + std::to_string(k++), {}, values_arity(pi, sigma)});
      }
    }
  }
  return s;
}

}  // namespace dbsyn
