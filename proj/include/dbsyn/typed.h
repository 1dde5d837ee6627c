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

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dbsyn/diagnostic.h"
#include "dbsyn/laws.h"
#include "dbsyn/rng.h"
#include "dbsyn/signature.h"
#include "dbsyn/subst.h"
#include "dbsyn/symbol.h"
#include "dbsyn/term.h"

namespace dbsyn {

/// Simply-typed De Bruijn term. Every variable carries its type; indices
/// count per type, so Var(0, a) and Var(0, b) name different binders.
/// Operations carry the type arguments that instantiate their schema.
class TypedTerm {
 public:
  static TypedTerm var(std::size_t index, TypeExpr type);
  static TypedTerm op(Symbol name, std::vector<TypeExpr> type_args, std::vector<TypedTerm> args);
  static TypedTerm op(std::string_view name, std::vector<TypeExpr> type_args,
                      std::vector<TypedTerm> args) {
    return op(Symbol::intern(name), std::move(type_args), std::move(args));
  }

  bool is_var() const;
  std::size_t index() const;
  const TypeExpr& type() const;  // annotation of a variable
  Symbol name() const;
  const std::vector<TypeExpr>& type_args() const;
  const std::vector<TypedTerm>& args() const;

  friend bool operator==(const TypedTerm& a, const TypedTerm& b);
  friend bool operator!=(const TypedTerm& a, const TypedTerm& b) { return !(a == b); }

 private:
  struct Node;
  explicit TypedTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Per-type binder counts.
using TypeCounts = std::map<TypeExpr, std::size_t>;

TypeCounts count_types(std::span<const TypeExpr> gamma);

/// One type's component: prefix, then Var(tail_shift + j, type).
struct TypedComponent {
  std::vector<TypedTerm> prefix;
  std::size_t tail_shift = 0;

  friend bool operator==(const TypedComponent&, const TypedComponent&) = default;
};

/// A family of finite assignments indexed by type. Types without a
/// component are the identity. Components are kept canonical and identity
/// components are dropped, so equality is extensional.
class TypedAssignment {
 public:
  TypedAssignment() = default;

  static TypedAssignment identity() { return {}; }
  static TypedAssignment single(const TypeExpr& type, std::vector<TypedTerm> prefix,
                                std::size_t tail_shift);

  TypedAssignment& set(const TypeExpr& type, std::vector<TypedTerm> prefix,
                       std::size_t tail_shift);

  TypedTerm operator()(std::size_t n, const TypeExpr& type) const;
  TypedComponent component(const TypeExpr& type) const;
  const std::map<TypeExpr, TypedComponent>& components() const { return comps_; }

  friend bool operator==(const TypedAssignment&, const TypedAssignment&) = default;

 private:
  std::map<TypeExpr, TypedComponent> comps_;
};

/// Instantiated arity of an Op node. Throws Error(kType) if the operation is
/// unknown or its type arguments are unacceptable.
TypedArity arity_of(const TypedSignatureSchema& schema, const TypedTerm& op_node);

/// Type of t in the empty binding context. Throws Error(kType) with the path
/// of the offending node on any mismatch.
TypeExpr typecheck(const TypedSignatureSchema& schema, const TypedTerm& t);

/// Same check, reported as diagnostics (empty when well typed).
Diagnostics check_typed(const TypedSignatureSchema& schema, const TypedTerm& t);

/// Adds k[u] to every free index of type u.
TypedTerm tshift(const TypedTerm& t, const TypeCounts& k, const TypedSignatureSchema& schema);

/// Typed lifting under one binder of type tau: at tau, 0 -> Var(0, tau) and
/// n + 1 -> the old image shifted at tau; other types keep their images,
/// shifted at tau.
TypedAssignment tlift(const TypedAssignment& s, const TypeExpr& tau,
                      const TypedSignatureSchema& schema);

/// Left fold of tlift over gamma.
TypedAssignment tlift_gamma(const TypedAssignment& s, std::span<const TypeExpr> gamma,
                            const TypedSignatureSchema& schema);

/// Var(n, tau) -> s(n, tau); argument i of an operation is substituted under
/// tlift_gamma(s, gamma_i). Depth is tracked per type, as in subst.
TypedTerm tsubst(const TypedTerm& t, const TypedAssignment& s,
                 const TypedSignatureSchema& schema);

/// (n, tau) -> tsubst(s(n, tau), t).
TypedAssignment tcompose(const TypedAssignment& s, const TypedAssignment& t,
                         const TypedSignatureSchema& schema);

std::size_t typed_node_count(const TypedTerm& t);

// Typed models.

template <class E>
using TypedValuation = std::function<E(std::size_t, const TypeExpr&)>;

/// A typed De Bruijn monad with one interpretation per operation schema.
/// Elements do not record their type; callers track it.
template <class E>
struct TypedModel {
  std::string name;
  std::function<E(std::size_t, const TypeExpr&)> variables;
  std::function<E(const E&, const TypedValuation<E>&)> substitute;
  std::function<bool(const E&, const E&)> equal;
  std::function<std::string(const E&)> show;
  std::map<Symbol, std::function<E(std::span<const TypeExpr>, std::span<const E>)>> ops;

  E apply(Symbol op, std::span<const TypeExpr> type_args, std::span<const E> args) const {
    auto it = ops.find(op);
    if (it == ops.end()) {
      throw Error(ErrorKind::kValidation,
                  "model '" + name + "' has no interpretation for '" + op.str() + "'");
    }
    return it->second(type_args, args);
  }
};

/// Finite presentation of a typed valuation, for sampling and display.
template <class E>
struct TypedFinite {
  std::map<TypeExpr, std::pair<std::vector<E>, std::size_t>> comps;
};

template <class E>
TypedValuation<E> to_tvaluation(const TypedModel<E>& m, TypedFinite<E> a) {
  return [vars = m.variables, a = std::move(a)](std::size_t n, const TypeExpr& ty) -> E {
    auto it = a.comps.find(ty);
    if (it == a.comps.end()) return vars(n, ty);
    const auto& [prefix, shift] = it->second;
    if (n < prefix.size()) return prefix[n];
    return vars(shift + (n - prefix.size()), ty);
  };
}

/// The valuation lifted under one binder of type tau, computed in the model.
template <class E>
TypedValuation<E> tlift_valuation(const TypedModel<E>& m, TypedValuation<E> s,
                                  const TypeExpr& tau) {
  return [vars = m.variables, sub = m.substitute, s = std::move(s), tau](
             std::size_t n, const TypeExpr& ty) -> E {
    if (ty == tau && n == 0) return vars(0, tau);
    TypedValuation<E> up = [&vars, &tau](std::size_t i, const TypeExpr& u) {
      return vars(u == tau ? i + 1 : i, u);
    };
    return sub(s(ty == tau ? n - 1 : n, ty), up);
  };
}

template <class E>
TypedValuation<E> tlift_valuation_gamma(const TypedModel<E>& m, TypedValuation<E> s,
                                        std::span<const TypeExpr> gamma) {
  for (const auto& ty : gamma) s = tlift_valuation(m, std::move(s), ty);
  return s;
}

/// Variables to variables, operations to their interpretations.
template <class E>
E t_initial_fold(const TypedSignatureSchema& schema, const TypedModel<E>& m, const TypedTerm& t) {
  if (t.is_var()) return m.variables(t.index(), t.type());
  std::vector<E> xs;
  xs.reserve(t.args().size());
  for (const auto& a : t.args()) xs.push_back(t_initial_fold(schema, m, a));
  return m.apply(t.name(), t.type_args(), xs);
}

// Sampling and typed law checks.

struct TypedGenConfig {
  std::size_t max_depth = 5;
  std::size_t type_depth = 2;   // depth of sampled types (base = 0)
  std::size_t free_range = 3;   // free indices per type drawn from [0, free_range)
  std::size_t max_prefix = 3;
  std::size_t max_shift = 2;
  std::size_t entry_depth = 2;
  std::size_t assign_types = 2; // components per sampled assignment
};

TypeExpr random_type(Rng& rng, const TypeGrammar& g, std::size_t max_depth);

/// Random term of the given type in the context `bound`. Operations are
/// chosen among those whose conclusion matches `type`; their remaining type
/// metavariables are sampled.
TypedTerm random_typed_term(Rng& rng, const TypedSignatureSchema& schema, const TypeExpr& type,
                            const TypedGenConfig& cfg, const TypeCounts& bound = {});

TypedAssignment random_typed_assignment(Rng& rng, const TypedSignatureSchema& schema,
                                        const TypedGenConfig& cfg);

template <class E>
struct TypedSampler {
  std::function<TypeExpr(Rng&)> type;
  std::function<E(Rng&, const TypeExpr&)> element;
  std::function<TypedFinite<E>(Rng&)> assignment;
};

TypedSampler<TypedTerm> typed_term_sampler(const TypedSignatureSchema& schema,
                                           const TypedGenConfig& cfg = {});

/// Whether `pattern` (with `metavars` as placeholders) matches `ground`,
/// extending `bound`.
bool match_type(const TypeExpr& pattern, const TypeExpr& ground,
                std::span<const std::string> metavars, std::map<std::string, TypeExpr>& bound);

namespace detail {

template <class E>
std::string show_tfinite(const TypedModel<E>& m, const TypedFinite<E>& a) {
  std::string s = "{";
  bool first = true;
  for (const auto& [ty, c] : a.comps) {
    if (!first) s += ", ";
    first = false;
    s += to_string(ty) + ": [";
    for (std::size_t i = 0; i < c.first.size(); ++i) {
      if (i) s += ", ";
      s += m.show(c.first[i]);
    }
    s += "; ^" + std::to_string(c.second) + "]";
  }
  return s + "}";
}

// Samples type arguments for an operation schema.
inline std::vector<TypeExpr> sample_type_args(Rng& r, const TypedSignatureSchema& schema,
                                              const TypedOpSchema& op, std::size_t depth) {
  std::vector<TypeExpr> tys;
  for (std::size_t i = 0; i < op.metavars.size(); ++i) {
    tys.push_back(random_type(r, schema.grammar, depth));
  }
  return tys;
}

}  // namespace detail

template <class E>
struct TypedMonadCase {
  TypeExpr type;
  E x;
  TypedFinite<E> f, g;
  std::size_t n = 0;
};

/// x[f][g] = x[f[g]], v(n, tau)[f] = f(n, tau) and x[v] = x.
template <class E>
LawReport check_typed_monad_laws(const TypedModel<E>& m, const TypedSampler<E>& sampler,
                                 const LawConfig& cfg) {
  using C = TypedMonadCase<E>;
  std::vector<Law<C>> laws{
      {"typed.monad.associativity",
       [&](const C& c) {
         auto f = to_tvaluation(m, c.f);
         auto g = to_tvaluation(m, c.g);
         TypedValuation<E> fg = [&](std::size_t n, const TypeExpr& ty) {
           return m.substitute(f(n, ty), g);
         };
         return m.equal(m.substitute(m.substitute(c.x, f), g), m.substitute(c.x, fg));
       }},
      {"typed.monad.left_unitality",
       [&](const C& c) {
         auto f = to_tvaluation(m, c.f);
         return m.equal(m.substitute(m.variables(c.n, c.type), f), f(c.n, c.type));
       }},
      {"typed.monad.right_unitality",
       [&](const C& c) { return m.equal(m.substitute(c.x, m.variables), c.x); }},
  };
  std::function<C(Rng&)> draw = [&](Rng& r) {
    TypeExpr ty = sampler.type(r);
    E x = sampler.element(r, ty);
    return C{std::move(ty), std::move(x), sampler.assignment(r), sampler.assignment(r),
             r.below(6)};
  };
  CaseTools<C> tools;
  tools.show = [&](const C& c) {
    return "{type=" + to_string(c.type) + " x=" + m.show(c.x) +
           " f=" + detail::show_tfinite(m, c.f) + " g=" + detail::show_tfinite(m, c.g) +
           " n=" + std::to_string(c.n) + "}";
  };
  return run_laws(laws, draw, tools, cfg);
}

template <class E>
struct TypedBindingCase {
  std::vector<std::vector<TypeExpr>> type_args;  // per schema operation
  std::vector<std::vector<E>> args;
  TypedFinite<E> s;
};

/// For every operation schema, at sampled type arguments:
///   o(x_1, ..., x_p)[s] = o(x_1[lift^{gamma_1} s], ..., x_p[lift^{gamma_p} s]).
template <class E>
LawReport check_typed_binding_conditions(const TypedSignatureSchema& schema,
                                         const TypedModel<E>& m,
                                         const TypedSampler<E>& sampler,
                                         const TypedGenConfig& gen, const LawConfig& cfg) {
  using C = TypedBindingCase<E>;
  std::vector<Law<C>> laws;
  for (std::size_t k = 0; k < schema.ops.size(); ++k) {
    laws.push_back({"typed.binding." + schema.ops[k].name, [&, k](const C& c) {
                      const auto& op = schema.ops[k];
                      const Symbol name = Symbol::intern(op.name);
                      const TypedArity ar = schema.instantiate(op.name, c.type_args[k]);
                      auto s = to_tvaluation(m, c.s);
                      E lhs = m.substitute(m.apply(name, c.type_args[k], c.args[k]), s);
                      std::vector<E> ys;
                      for (std::size_t i = 0; i < c.args[k].size(); ++i) {
                        ys.push_back(m.substitute(
                            c.args[k][i], tlift_valuation_gamma(m, s, ar.premises[i].context)));
                      }
                      return m.equal(lhs, m.apply(name, c.type_args[k], ys));
                    }});
  }
  std::function<C(Rng&)> draw = [&](Rng& r) {
    C c;
    for (const auto& op : schema.ops) {
      auto tys = detail::sample_type_args(r, schema, op, gen.type_depth);
      const TypedArity ar = schema.instantiate(op.name, tys);
      std::vector<E> xs;
      for (const auto& p : ar.premises) xs.push_back(sampler.element(r, p.type));
      c.type_args.push_back(std::move(tys));
      c.args.push_back(std::move(xs));
    }
    c.s = sampler.assignment(r);
    return c;
  };
  CaseTools<C> tools;
  tools.show = [&](const C& c) {
    std::string s = "{";
    for (std::size_t k = 0; k < c.args.size(); ++k) {
      s += schema.ops[k].name + "[";
      for (std::size_t i = 0; i < c.type_args[k].size(); ++i) {
        if (i) s += ", ";
        s += to_string(c.type_args[k][i]);
      }
      s += "](";
      for (std::size_t i = 0; i < c.args[k].size(); ++i) {
        if (i) s += ", ";
        s += m.show(c.args[k][i]);
      }
      s += ") ";
    }
    return s + "s=" + detail::show_tfinite(m, c.s) + "}";
  };
  return run_laws(laws, draw, tools, cfg);
}

template <class E>
struct TypedMorphismCase {
  TypeExpr type;
  TypedTerm x;
  TypedFinite<TypedTerm> s;
  std::size_t n = 0;
};

/// Checks that h from the typed term model commutes with variables,
/// substitution and every operation (on sampled terms):
///   h(v(n, tau)) = v'(n, tau), h(x[s]) = h(x)[h . s], h(o(xs)) = o'(h(xs)).
template <class B>
LawReport check_typed_morphism(const std::function<B(const TypedTerm&)>& h,
                               const TypedModel<TypedTerm>& src, const TypedModel<B>& dst,
                               const TypedSignatureSchema& /*schema*/,
                               const TypedSampler<TypedTerm>& sampler, const LawConfig& cfg) {
  using C = TypedMorphismCase<B>;
  std::vector<Law<C>> laws{
      {"typed.morphism.variables",
       [&](const C& c) {
         return dst.equal(h(src.variables(c.n, c.type)), dst.variables(c.n, c.type));
       }},
      {"typed.morphism.substitution",
       [&](const C& c) {
         auto s = to_tvaluation(src, c.s);
         TypedValuation<B> hs = [&h, s](std::size_t i, const TypeExpr& ty) {
           return h(s(i, ty));
         };
         return dst.equal(h(src.substitute(c.x, s)), dst.substitute(h(c.x), hs));
       }},
      {"typed.morphism.operations",
       [&](const C& c) {
         // Every Op node of x is an operation instance; check each one.
         std::vector<const TypedTerm*> stack{&c.x};
         while (!stack.empty()) {
           const TypedTerm* t = stack.back();
           stack.pop_back();
           if (t->is_var()) continue;
           std::vector<B> hx;
           for (const auto& a : t->args()) {
             hx.push_back(h(a));
             stack.push_back(&a);
           }
           if (!dst.equal(h(*t), dst.apply(t->name(), t->type_args(), hx))) return false;
         }
         return true;
       }},
  };
  std::function<C(Rng&)> draw = [&](Rng& r) {
    TypeExpr ty = sampler.type(r);
    TypedTerm x = sampler.element(r, ty);
    return C{std::move(ty), std::move(x), sampler.assignment(r), r.below(6)};
  };
  CaseTools<C> tools;
  tools.show = [&](const C& c) {
    return "{type=" + to_string(c.type) + " x=" + src.show(c.x) +
           " s=" + detail::show_tfinite(src, c.s) + "}";
  };
  return run_laws(laws, draw, tools, cfg);
}

TypedModel<TypedTerm> typed_term_model(const TypedSignatureSchema& schema);

/// Law typed.subject_invariance: typecheck(tsubst(t, s)) = typecheck(t) for
/// sampled well-typed t and type-respecting s.
LawReport check_subject_invariance(const TypedSignatureSchema& schema, const TypedGenConfig& gen,
                                   const LawConfig& cfg);

/// Typed monad laws, binding conditions and subject invariance
/// (typecheck(tsubst(t, s)) = typecheck(t)) on the typed term model.
LawReport check_typed_laws(const TypedSignatureSchema& schema, const TypedGenConfig& gen,
                           const LawConfig& cfg);

// Single-type reduction.

/// The untyped signature read with one base type u: arity (n_1, ..., n_p)
/// becomes (u^{n_1} |- u), ..., (u^{n_p} |- u) -> u with no metavariables.
TypedSignatureSchema single_type_schema(const BindingSignature& sig,
                                        const std::string& base = "u");

TypedTerm embed(const Term& t, const TypeExpr& type);
TypedAssignment embed(const Assignment& s, const TypeExpr& type);
Term erase(const TypedTerm& t);

/// Laws typed.degenerate.subst (untyped subst agrees with tsubst through
/// embed/erase) and typed.degenerate.lift (same for lift / tlift).
LawReport check_degenerate_reduction(const BindingSignature& sig, const LawConfig& cfg);

// Application binary trees and the values signature.

/// A leaf proves sigma from context (sigma); a node combines a proof of
/// sigma -> tau with a proof of sigma into tau, concatenating contexts.
class BTDerivation {
 public:
  static BTDerivation leaf(TypeExpr type);
  /// Throws Error(kType) unless left concludes an arrow whose domain is
  /// right's conclusion.
  static BTDerivation node(BTDerivation left, BTDerivation right);

  bool is_leaf() const;
  const TypeExpr& conclusion() const;
  const BTDerivation& left() const;
  const BTDerivation& right() const;
  /// Leaf types, left to right.
  std::vector<TypeExpr> context() const;
  std::size_t leaves() const;

  friend bool operator==(const BTDerivation& a, const BTDerivation& b);

 private:
  struct Node;
  explicit BTDerivation(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const BTDerivation& d);

/// Every derivation with at most max_leaves leaves and the given conclusion,
/// ordered by leaf count, then left subtree size, then intermediate type.
/// Intermediate types (the sigma of each node) range over subexpressions of
/// the conclusion and of `context`. With a context, every leaf type must be
/// one of its entries. Types must belong to `grammar` (Error(kValidation)).
std::vector<BTDerivation> bt_enumerate(const TypeGrammar& grammar, const TypeExpr& conclusion,
                                       std::size_t max_leaves,
                                       const std::optional<std::vector<TypeExpr>>& context =
                                           std::nullopt);

/// Premises (sigma |- tau_i) for the leaves tau_i of pi, conclusion
/// sigma -> (conclusion of pi).
TypedArity values_arity(const BTDerivation& pi, const TypeExpr& sigma);

/// One operation L<k> per (sigma, tau, pi) with sigma, tau from `types` and
/// pi in bt_enumerate(grammar, tau, max_leaves, types).
TypedSignatureSchema values_signature(const TypeGrammar& grammar,
                                      const std::vector<TypeExpr>& types,
                                      std::size_t max_leaves);

}  // namespace dbsyn
