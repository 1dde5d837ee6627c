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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dbsyn/gen.h"
#include "dbsyn/laws.h"
#include "dbsyn/model.h"
#include "dbsyn/signature.h"
#include "dbsyn/subst.h"
#include "dbsyn/term.h"

namespace dbsyn {

/// Half-equation syntax: metavariables ?i, variables, operations of the main
/// signature and explicit substitution { body [prefix; ^k] }.
class MetaTerm {
 public:
  enum class Kind { kMVar, kVar, kOp, kSubst };

  static MetaTerm mvar(std::size_t i);
  static MetaTerm var(std::size_t n);
  static MetaTerm op(Symbol name, std::vector<MetaTerm> args);
  static MetaTerm op(std::string_view name, std::vector<MetaTerm> args) {
    return op(Symbol::intern(name), std::move(args));
  }
  static MetaTerm subst(MetaTerm body, std::vector<MetaTerm> prefix, std::size_t tail_shift);

  Kind kind() const { return kind_; }
  std::size_t index() const { return index_; }  // MVar / Var
  Symbol name() const { return name_; }         // Op
  std::span<const MetaTerm> args() const;       // Op arguments
  const MetaTerm& body() const { return items_.front(); }  // Subst
  std::span<const MetaTerm> prefix() const;     // Subst
  std::size_t tail_shift() const { return index_; }        // Subst

  friend bool operator==(const MetaTerm& a, const MetaTerm& b);

 private:
  Kind kind_ = Kind::kVar;
  std::size_t index_ = 0;
  Symbol name_;
  std::vector<MetaTerm> items_;
};

/// One equation L = R for a metavariable-signature operation of the given
/// binding arity.
struct Equation {
  std::string name;
  BindingArity arity;
  MetaTerm lhs;
  MetaTerm rhs;

  friend bool operator==(const Equation&, const Equation&) = default;
};

struct EquationalTheory {
  std::string name;
  BindingSignature sig;
  std::vector<Equation> equations;

  /// The signature T of the equations' own operations.
  BindingSignature metavariable_signature() const;

  friend bool operator==(const EquationalTheory&, const EquationalTheory&) = default;
};

/// Evaluates a metaterm in any algebra. Throws Error(kArgument) if a
/// metavariable index is out of range.
template <class E>
E eval_metaterm(const DBAlgebra<E>& a, std::span<const E> env, const MetaTerm& mt) {
  switch (mt.kind()) {
    case MetaTerm::Kind::kMVar:
      if (mt.index() >= env.size()) {
        throw Error(ErrorKind::kArgument,
                    "metavariable ?" + std::to_string(mt.index()) + " out of range");
      }
      return env[mt.index()];
    case MetaTerm::Kind::kVar:
      return a.monad.variables(mt.index());
    case MetaTerm::Kind::kOp: {
      std::vector<E> xs;
      for (const auto& c : mt.args()) xs.push_back(eval_metaterm(a, env, c));
      return a.apply(mt.name(), xs);
    }
    case MetaTerm::Kind::kSubst: {
      E body = eval_metaterm(a, env, mt.body());
      FiniteAssignment<E> s;
      for (const auto& c : mt.prefix()) s.prefix.push_back(eval_metaterm(a, env, c));
      s.tail_shift = mt.tail_shift();
      return a.monad.substitute(body, to_valuation(a.monad, std::move(s)));
    }
  }
  throw Error(ErrorKind::kArgument, "bad metaterm");
}

/// Term-model evaluation through finite assignments.
Term eval_metaterm(const BindingSignature& sig, std::span<const Term> env, const MetaTerm& mt);

/// Arity and range checks for one side of an equation with p metavariables.
Diagnostics validate_metaterm(const BindingSignature& sig, std::size_t p, const MetaTerm& mt);

/// Left sides must be usable as match patterns: linear in metavariables, and
/// explicit substitution only as { ?i [; ^k] }.
Diagnostics validate_pattern(const MetaTerm& lhs);

/// Fuzzes, in the term model, that the operation induced by `side` satisfies
/// the binding condition for `t_arity` (law half.binding) and commutes with
/// to_named (law half.naturality).
LawReport check_half_equation(const BindingSignature& sig, const BindingArity& t_arity,
                              const MetaTerm& side, const LawConfig& cfg = {});

/// Structural checks, pattern checks and check_half_equation on both sides
/// of every equation (using `cfg`).
Diagnostics validate_theory(const EquationalTheory& theory, const LawConfig& cfg = {200, 0});

/// Metavariable bindings such that eval(lhs, env) == t, if any.
std::optional<std::vector<Term>> match(const BindingSignature& sig, const MetaTerm& lhs,
                                       std::size_t p, const Term& t);

/// Every one-step rewrite L -> R at any position. Positions are visited
/// leftmost-outermost (pre-order); at one position equations are tried in
/// theory order.
std::vector<Term> rewrite_step(const EquationalTheory& theory, const Term& t);

/// The first element of rewrite_step, computed without enumerating the rest.
std::optional<Term> first_rewrite(const EquationalTheory& theory, const Term& t);

struct NormalizeResult {
  bool normal = false;  // false: fuel ran out with a redex left
  Term term;
  std::size_t steps = 0;
};

/// Leftmost-outermost rewriting, at most `fuel` steps.
NormalizeResult normalize(const EquationalTheory& theory, const Term& t, std::size_t fuel);

enum class Equivalence { kYes, kNo, kUnknown };

/// kYes on equal normal forms, kNo on distinct normal forms, kUnknown if
/// either side exhausts its fuel. kNo is only reliable for confluent systems.
Equivalence equiv(const EquationalTheory& theory, const Term& a, const Term& b,
                  std::size_t fuel);

const char* to_string(Equivalence e);

/// app(lam(?0), ?1) = { ?0 [?1; ^0] } with T-arity (1, 0).
EquationalTheory beta_theory();
/// beta plus lam(app({ ?0 [; ^1] }, 0)) = ?0 with T-arity (0).
EquationalTheory beta_eta_theory();

/// Untyped Church numeral lam f. lam x. f^n x and addition.
Term church_numeral(std::size_t n);
Term church_plus();

}  // namespace dbsyn
