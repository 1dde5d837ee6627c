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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dbsyn/laws.h"
#include "dbsyn/named.h"
#include "dbsyn/signature.h"
#include "dbsyn/subst.h"
#include "dbsyn/term.h"

namespace dbsyn {

/// Assignment over a model's carrier, taken extensionally.
template <class E>
using Valuation = std::function<E(std::size_t)>;

/// A carrier with a variables map and a substitution map. The monad laws
/// are not assumed; check_monad_laws tests them.
template <class E>
struct DeBruijnMonad {
  std::string name;
  std::function<E(std::size_t)> variables;
  std::function<E(const E&, const Valuation<E>&)> substitute;
  std::function<bool(const E&, const E&)> equal;
  std::function<std::string(const E&)> show;
};

/// A De Bruijn monad with one interpretation per signature operation.
template <class E>
struct DBAlgebra {
  DeBruijnMonad<E> monad;
  std::map<Symbol, std::function<E(std::span<const E>)>> ops;

  E apply(Symbol op, std::span<const E> args) const {
    auto it = ops.find(op);
    if (it == ops.end()) {
      throw Error(ErrorKind::kValidation,
                  "model '" + monad.name + "' has no interpretation for '" + op.str() + "'");
    }
    return it->second(args);
  }
};

/// Finite presentation used by samplers: prefix, then variables from tail_shift.
template <class E>
struct FiniteAssignment {
  std::vector<E> prefix;
  std::size_t tail_shift = 0;
};

template <class E>
Valuation<E> to_valuation(const DeBruijnMonad<E>& m, FiniteAssignment<E> a) {
  return [vars = m.variables, a = std::move(a)](std::size_t n) -> E {
    if (n < a.prefix.size()) return a.prefix[n];
    return vars(a.tail_shift + (n - a.prefix.size()));
  };
}

/// (lift s)(0) = v(0), (lift s)(n + 1) = s(n)[shift], computed in the model.
template <class E>
Valuation<E> lift_valuation(const DeBruijnMonad<E>& m, Valuation<E> s) {
  return [vars = m.variables, sub = m.substitute, s = std::move(s)](std::size_t n) -> E {
    if (n == 0) return vars(0);
    Valuation<E> up = [&vars](std::size_t i) { return vars(i + 1); };
    return sub(s(n - 1), up);
  };
}

template <class E>
Valuation<E> lift_valuation_n(const DeBruijnMonad<E>& m, Valuation<E> s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) s = lift_valuation(m, std::move(s));
  return s;
}

/// f[g](n) = f(n)[g].
template <class E>
Valuation<E> compose_valuation(const DeBruijnMonad<E>& m, Valuation<E> f, Valuation<E> g) {
  return [sub = m.substitute, f = std::move(f), g = std::move(g)](std::size_t n) {
    return sub(f(n), g);
  };
}

/// Element and assignment generators for a model; shrink is optional.
template <class E>
struct Sampler {
  std::function<E(Rng&)> element;
  std::function<FiniteAssignment<E>(Rng&)> assignment;
  std::function<std::vector<E>(const E&)> shrink;
};

namespace detail {

template <class E>
std::string show_assignment(const DeBruijnMonad<E>& m, const FiniteAssignment<E>& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.prefix.size(); ++i) {
    if (i) s += ", ";
    s += m.show(a.prefix[i]);
  }
  return s + "; ^" + std::to_string(a.tail_shift) + "]";
}

template <class E>
std::vector<FiniteAssignment<E>> shrink_assignment(const FiniteAssignment<E>& a,
                                                   const Sampler<E>& sampler) {
  std::vector<FiniteAssignment<E>> out;
  for (std::size_t i = 0; i < a.prefix.size(); ++i) {
    auto b = a;
    b.prefix.erase(b.prefix.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(b));
  }
  if (a.tail_shift > 0) {
    auto b = a;
    b.tail_shift = 0;
    out.push_back(std::move(b));
  }
  if (sampler.shrink) {
    for (std::size_t i = 0; i < a.prefix.size(); ++i) {
      for (auto& e : sampler.shrink(a.prefix[i])) {
        auto b = a;
        b.prefix[i] = std::move(e);
        out.push_back(std::move(b));
      }
    }
  }
  return out;
}

}  // namespace detail

template <class E>
struct MonadCase {
  E x;
  FiniteAssignment<E> f, g;
  std::size_t n = 0;
};

/// Associativity x[f][g] = x[f[g]], left unitality v(n)[f] = f(n) and right
/// unitality x[v] = x, on sampled cases.
template <class E>
LawReport check_monad_laws(const DeBruijnMonad<E>& m, const Sampler<E>& sampler,
                           const LawConfig& cfg) {
  using C = MonadCase<E>;
  std::vector<Law<C>> laws{
      {"monad.associativity",
       [&](const C& c) {
         auto f = to_valuation(m, c.f);
         auto g = to_valuation(m, c.g);
         return m.equal(m.substitute(m.substitute(c.x, f), g),
                        m.substitute(c.x, compose_valuation(m, f, g)));
       }},
      {"monad.left_unitality",
       [&](const C& c) {
         auto f = to_valuation(m, c.f);
         return m.equal(m.substitute(m.variables(c.n), f), f(c.n));
       }},
      {"monad.right_unitality",
       [&](const C& c) { return m.equal(m.substitute(c.x, m.variables), c.x); }},
  };
  std::function<C(Rng&)> draw = [&](Rng& r) {
    C c{sampler.element(r), sampler.assignment(r), sampler.assignment(r), r.below(8)};
    return c;
  };
  CaseTools<C> tools;
  tools.show = [&](const C& c) {
    return "{x=" + m.show(c.x) + " f=" + detail::show_assignment(m, c.f) +
           " g=" + detail::show_assignment(m, c.g) + " n=" + std::to_string(c.n) + "}";
  };
  tools.shrink = [&](const C& c) {
    std::vector<C> out;
    if (sampler.shrink) {
      for (auto& x : sampler.shrink(c.x)) out.push_back(C{std::move(x), c.f, c.g, c.n});
    }
    for (auto& f : detail::shrink_assignment(c.f, sampler)) out.push_back(C{c.x, f, c.g, c.n});
    for (auto& g : detail::shrink_assignment(c.g, sampler)) out.push_back(C{c.x, c.f, g, c.n});
    if (c.n > 0) out.push_back(C{c.x, c.f, c.g, c.n - 1});
    return out;
  };
  return run_laws(laws, draw, tools, cfg);
}

template <class E>
struct BindingCase {
  std::vector<std::vector<E>> args;  // one argument tuple per signature operation
  FiniteAssignment<E> s;
};

/// For every operation o of arity (n_1, ..., n_p):
///   o(x_1, ..., x_p)[s] = o(x_1[lift^{n_1} s], ..., x_p[lift^{n_p} s]).
/// One law per operation, named binding.<op>.
template <class E>
LawReport check_binding_conditions(const DBAlgebra<E>& a, const BindingSignature& sig,
                                   const Sampler<E>& sampler, const LawConfig& cfg) {
  using C = BindingCase<E>;
  const auto& m = a.monad;
  std::vector<Law<C>> laws;
  for (std::size_t k = 0; k < sig.ops.size(); ++k) {
    laws.push_back({"binding." + sig.ops[k].name.str(), [&, k](const C& c) {
                      const OpDecl& op = sig.ops[k];
                      const auto& xs = c.args[k];
                      auto s = to_valuation(m, c.s);
                      E lhs = m.substitute(a.apply(op.name, xs), s);
                      std::vector<E> ys;
                      ys.reserve(xs.size());
                      for (std::size_t i = 0; i < xs.size(); ++i) {
                        ys.push_back(m.substitute(
                            xs[i], lift_valuation_n(m, s, op.arity.binders[i])));
                      }
                      return m.equal(lhs, a.apply(op.name, ys));
                    }});
  }
  std::function<C(Rng&)> draw = [&](Rng& r) {
    C c;
    for (const auto& op : sig.ops) {
      std::vector<E> xs;
      for (std::size_t i = 0; i < first_order_arity(op.arity); ++i) {
        xs.push_back(sampler.element(r));
      }
      c.args.push_back(std::move(xs));
    }
    c.s = sampler.assignment(r);
    return c;
  };
  CaseTools<C> tools;
  tools.show = [&](const C& c) {
    std::string s = "{";
    for (std::size_t k = 0; k < c.args.size(); ++k) {
      s += sig.ops[k].name.str() + "(";
      for (std::size_t i = 0; i < c.args[k].size(); ++i) {
        if (i) s += ", ";
        s += m.show(c.args[k][i]);
      }
      s += ") ";
    }
    return s + "s=" + detail::show_assignment(m, c.s) + "}";
  };
  tools.shrink = [&](const C& c) {
    std::vector<C> out;
    for (auto& s : detail::shrink_assignment(c.s, sampler)) out.push_back(C{c.args, s});
    if (sampler.shrink) {
      for (std::size_t k = 0; k < c.args.size(); ++k) {
        for (std::size_t i = 0; i < c.args[k].size(); ++i) {
          for (auto& e : sampler.shrink(c.args[k][i])) {
            C d = c;
            d.args[k][i] = std::move(e);
            out.push_back(std::move(d));
          }
        }
      }
    }
    return out;
  };
  return run_laws(laws, draw, tools, cfg);
}

template <class E>
struct MorphismCase {
  E x;
  FiniteAssignment<E> s;
  std::size_t n = 0;
  std::vector<std::vector<E>> args;
};

/// h(v_A(n)) = v_B(n), h(x[s]_A) = h(x)[h . s]_B and, per operation,
/// h(o_A(xs)) = o_B(h(xs)).
template <class A, class B>
LawReport check_morphism(const std::function<B(const A&)>& h, const DBAlgebra<A>& src,
                         const DBAlgebra<B>& dst, const BindingSignature& sig,
                         const Sampler<A>& sampler, const LawConfig& cfg) {
  using C = MorphismCase<A>;
  const auto& ma = src.monad;
  const auto& mb = dst.monad;
  std::vector<Law<C>> laws{
      {"morphism.variables",
       [&](const C& c) { return mb.equal(h(ma.variables(c.n)), mb.variables(c.n)); }},
      {"morphism.substitution",
       [&](const C& c) {
         auto s = to_valuation(ma, c.s);
         Valuation<B> hs = [&h, s](std::size_t i) { return h(s(i)); };
         return mb.equal(h(ma.substitute(c.x, s)), mb.substitute(h(c.x), hs));
       }},
  };
  for (std::size_t k = 0; k < sig.ops.size(); ++k) {
    laws.push_back({"morphism.op." + sig.ops[k].name.str(), [&, k](const C& c) {
                      std::vector<B> hx;
                      for (const auto& x : c.args[k]) hx.push_back(h(x));
                      return mb.equal(h(src.apply(sig.ops[k].name, c.args[k])),
                                      dst.apply(sig.ops[k].name, hx));
                    }});
  }
  std::function<C(Rng&)> draw = [&](Rng& r) {
    C c{sampler.element(r), sampler.assignment(r), r.below(8), {}};
    for (const auto& op : sig.ops) {
      std::vector<A> xs;
      for (std::size_t i = 0; i < first_order_arity(op.arity); ++i) {
        xs.push_back(sampler.element(r));
      }
      c.args.push_back(std::move(xs));
    }
    return c;
  };
  CaseTools<C> tools;
  tools.show = [&](const C& c) {
    std::string s = "{x=" + ma.show(c.x) + " s=" + detail::show_assignment(ma, c.s) +
                    " n=" + std::to_string(c.n);
    for (std::size_t k = 0; k < c.args.size(); ++k) {
      s += " " + sig.ops[k].name.str() + "(";
      for (std::size_t i = 0; i < c.args[k].size(); ++i) {
        if (i) s += ", ";
        s += ma.show(c.args[k][i]);
      }
      s += ")";
    }
    return s + "}";
  };
  tools.shrink = [&](const C& c) {
    std::vector<C> out;
    if (sampler.shrink) {
      for (auto& x : sampler.shrink(c.x)) out.push_back(C{std::move(x), c.s, c.n, c.args});
    }
    for (auto& s : detail::shrink_assignment(c.s, sampler)) out.push_back(C{c.x, s, c.n, c.args});
    if (c.n > 0) out.push_back(C{c.x, c.s, 0, c.args});
    return out;
  };
  return run_laws(laws, draw, tools, cfg);
}

/// The unique algebra morphism out of the term model, restricted to t:
/// Var(n) -> variables(n), Op(o, args) -> o interpreted on folded args.
template <class E>
E initial_fold(const BindingSignature& sig, const DBAlgebra<E>& a, const Term& t) {
  return fold<E>(
      sig, [&](std::size_t n) { return a.monad.variables(n); },
      [&](Symbol op, std::vector<E>&& kids) { return a.apply(op, kids); }, t);
}

// Builtin models.

/// Terms with Var, subst and Op(o, .).
DBAlgebra<Term> term_model(const BindingSignature& sig);

/// Naturals: variables are the identity, substitution is evaluation.
DeBruijnMonad<std::size_t> nat_monad();

/// Named terms up to alpha-equivalence. v(n) is the supply name for n;
/// substitution is named_subst; an operation binds fresh names for the
/// lowest indices of each argument.
DBAlgebra<NamedTerm> named_model(const BindingSignature& sig, const NameSupply& supply = {});

/// initial_fold into named_model.
NamedTerm to_named(const BindingSignature& sig, const Term& t, const NameSupply& supply = {});

/// Inverse of to_named up to alpha. Free names must be supply names;
/// anything else throws Error(kBinding). Binder counts are checked against
/// the signature (Error(kValidation)).
Term from_named(const BindingSignature& sig, const NamedTerm& t, const NameSupply& supply = {});

}  // namespace dbsyn
