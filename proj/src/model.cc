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

#include "dbsyn/model.h"

#include <memory>

#include "dbsyn/surface.h"

namespace dbsyn {

DBAlgebra<Term> term_model(const BindingSignature& sig) {
  auto shared = std::make_shared<const BindingSignature>(sig);
  DBAlgebra<Term> a;
  a.monad.name = "term";
  a.monad.variables = [](std::size_t n) { return Term::var(n); };
  a.monad.substitute = [shared](const Term& t, const Valuation<Term>& s) {
    return subst_with(t, s, *shared);
  };
  a.monad.equal = [](const Term& x, const Term& y) { return x == y; };
  a.monad.show = [](const Term& t) { return print_term(t); };
  for (const auto& op : sig.ops) {
    const std::size_t p = first_order_arity(op.arity);
    a.ops[op.name] = [name = op.name, p](std::span<const Term> xs) {
      if (xs.size() != p) {
        throw Error(ErrorKind::kValidation, "operation '" + name.str() + "' expects " +
                                                std::to_string(p) + " arguments");
      }
      return Term::op(name, std::vector<Term>(xs.begin(), xs.end()));
    };
  }
  return a;
}

DeBruijnMonad<std::size_t> nat_monad() {
  DeBruijnMonad<std::size_t> m;
  m.name = "nat";
  m.variables = [](std::size_t n) { return n; };
  m.substitute = [](const std::size_t& x, const Valuation<std::size_t>& f) { return f(x); };
  m.equal = [](const std::size_t& x, const std::size_t& y) { return x == y; };
  m.show = [](const std::size_t& x) { return std::to_string(x); };
  return m;
}

DBAlgebra<NamedTerm> named_model(const BindingSignature& sig, const NameSupply& supply) {
  DBAlgebra<NamedTerm> a;
  a.monad.name = "named";
  a.monad.variables = [supply](std::size_t n) { return NamedTerm::variable(supply.name(n)); };
  a.monad.substitute = [supply](const NamedTerm& t, const Valuation<NamedTerm>& s) {
    return named_subst(t, s, supply);
  };
  a.monad.equal = [](const NamedTerm& x, const NamedTerm& y) { return alpha_equal(x, y); };
  a.monad.show = [](const NamedTerm& t) { return print_named(t); };
  for (const auto& op : sig.ops) {
    a.ops[op.name] = [name = op.name, arity = op.arity, supply](std::span<const NamedTerm> xs) {
      if (xs.size() != first_order_arity(arity)) {
        throw Error(ErrorKind::kValidation, "operation '" + name.str() + "' expects " +
                                                std::to_string(first_order_arity(arity)) +
                                                " arguments");
      }
      std::vector<NamedArg> args;
      args.reserve(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::size_t k = arity.binders[i];
        if (k == 0) {
          args.push_back(NamedArg{{}, xs[i]});
          continue;
        }
        // The k lowest free indices of the argument become its binders,
        // rightmost binder = index 0; the rest drop by k.
        std::set<std::string> avoid = free_names(xs[i]);
        std::vector<std::string> binders;
        for (std::size_t j = 0; j < k; ++j) {
          binders.push_back(fresh_binder(avoid, supply));
          avoid.insert(binders.back());
        }
        Valuation<NamedTerm> close = [&binders, k, &supply](std::size_t n) {
          if (n < k) return NamedTerm::variable(binders[k - 1 - n]);
          return NamedTerm::variable(supply.name(n - k));
        };
        NamedTerm body = named_subst(xs[i], close, supply);
        args.push_back(NamedArg{std::move(binders), std::move(body)});
      }
      return NamedTerm::op(name.str(), std::move(args));
    };
  }
  return a;
}

NamedTerm to_named(const BindingSignature& sig, const Term& t, const NameSupply& supply) {
  return initial_fold(sig, named_model(sig, supply), t);
}

namespace {

Term from_named_rec(const BindingSignature& sig, const NamedTerm& t,
                    std::vector<std::string>& scope, const NameSupply& supply) {
  if (t.is_var()) {
    for (std::size_t i = scope.size(); i-- > 0;) {
      if (scope[i] == t.name()) return Term::var(scope.size() - 1 - i);
    }
    if (auto n = supply.index(t.name())) return Term::var(*n + scope.size());
    throw Error(ErrorKind::kBinding, "unbound name '" + t.name() + "' is not a supply name");
  }
  const Symbol name = Symbol::intern(t.name());
  const BindingArity* ar = sig.find(name);
  if (!ar) throw Error(ErrorKind::kValidation, "unknown operation '" + t.name() + "'");
  if (first_order_arity(*ar) != t.args().size()) {
    throw Error(ErrorKind::kValidation, "wrong argument count for '" + t.name() + "'");
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    const auto& a = t.args()[i];
    if (a.binders.size() != ar->binders[i]) {
      throw Error(ErrorKind::kValidation,
                  "argument " + std::to_string(i) + " of '" + t.name() + "' binds " +
                      std::to_string(ar->binders[i]) + " names, got " +
                      std::to_string(a.binders.size()));
    }
    scope.insert(scope.end(), a.binders.begin(), a.binders.end());
    args.push_back(from_named_rec(sig, a.body, scope, supply));
    scope.resize(scope.size() - a.binders.size());
  }
  return Term::op(name, std::move(args));
}

}  // namespace

Term from_named(const BindingSignature& sig, const NamedTerm& t, const NameSupply& supply) {
  std::vector<std::string> scope;
  return from_named_rec(sig, t, scope, supply);
}

}  // namespace dbsyn
