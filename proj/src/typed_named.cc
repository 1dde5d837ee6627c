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

#include "dbsyn/typed_named.h"

#include <map>

#include "dbsyn/surface.h"

namespace dbsyn {

struct TypedNamedTerm::Node {
  bool is_var = false;
  std::string name;
  TypeExpr type;
  std::vector<TypeExpr> type_args;
  std::vector<TypedNamedArg> args;
};

TypedNamedTerm TypedNamedTerm::variable(std::string name, TypeExpr type) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->name = std::move(name);
  n->type = std::move(type);
  return TypedNamedTerm(std::move(n));
}

TypedNamedTerm TypedNamedTerm::op(std::string name, std::vector<TypeExpr> type_args,
                                  std::vector<TypedNamedArg> args) {
  auto n = std::make_shared<Node>();
  n->name = std::move(name);
  n->type_args = std::move(type_args);
  n->args = std::move(args);
  return TypedNamedTerm(std::move(n));
}

bool TypedNamedTerm::is_var() const { return node_->is_var; }
const std::string& TypedNamedTerm::name() const { return node_->name; }
const TypeExpr& TypedNamedTerm::type() const { return node_->type; }
const std::vector<TypeExpr>& TypedNamedTerm::type_args() const { return node_->type_args; }
const std::vector<TypedNamedArg>& TypedNamedTerm::args() const { return node_->args; }

namespace {

void collect_free(const TypedNamedTerm& t, std::multiset<TypedName>& bound,
                  std::set<TypedName>& out) {
  if (t.is_var()) {
    TypedName n{t.name(), t.type()};
    if (!bound.count(n)) out.insert(std::move(n));
    return;
  }
  for (const auto& a : t.args()) {
    for (const auto& b : a.binders) bound.insert({b.name, b.type});
    collect_free(a.body, bound, out);
    for (const auto& b : a.binders) bound.erase(bound.find({b.name, b.type}));
  }
}

using Scope = std::map<TypedName, std::vector<std::size_t>>;

std::optional<std::size_t> lookup(const Scope& scope, const TypedName& n) {
  auto it = scope.find(n);
  if (it == scope.end() || it->second.empty()) return std::nullopt;
  return it->second.back();
}

bool alpha_rec(const TypedNamedTerm& a, const TypedNamedTerm& b, Scope& sa, Scope& sb,
               std::size_t& level) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    if (a.type() != b.type()) return false;
    auto la = lookup(sa, {a.name(), a.type()});
    auto lb = lookup(sb, {b.name(), b.type()});
    if (la || lb) return la == lb;
    return a.name() == b.name();
  }
  if (a.name() != b.name() || a.type_args() != b.type_args() ||
      a.args().size() != b.args().size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    const auto& x = a.args()[i];
    const auto& y = b.args()[i];
    if (x.binders.size() != y.binders.size()) return false;
    for (std::size_t j = 0; j < x.binders.size(); ++j) {
      if (x.binders[j].type != y.binders[j].type) return false;
    }
    for (std::size_t j = 0; j < x.binders.size(); ++j) {
      sa[{x.binders[j].name, x.binders[j].type}].push_back(level);
      sb[{y.binders[j].name, y.binders[j].type}].push_back(level);
      ++level;
    }
    const bool ok = alpha_rec(x.body, y.body, sa, sb, level);
    for (std::size_t j = 0; j < x.binders.size(); ++j) {
      sa[{x.binders[j].name, x.binders[j].type}].pop_back();
      sb[{y.binders[j].name, y.binders[j].type}].pop_back();
    }
    if (!ok) return false;
  }
  return true;
}

using Env = std::map<TypedName, TypedNamedTerm>;

std::set<std::string> plain_names(const std::set<TypedName>& ns) {
  std::set<std::string> out;
  for (const auto& n : ns) out.insert(n.first);
  return out;
}

TypedNamedTerm subst_rec(const TypedNamedTerm& t, const Env& env, const NameSupply& supply) {
  if (t.is_var()) {
    auto it = env.find({t.name(), t.type()});
    return it == env.end() ? t : it->second;
  }
  std::vector<TypedNamedArg> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) {
    if (a.binders.empty()) {
      args.push_back(TypedNamedArg{{}, subst_rec(a.body, env, supply)});
      continue;
    }
    std::set<TypedName> bound;
    for (const auto& b : a.binders) bound.insert({b.name, b.type});
    std::set<std::string> avoid;
    for (const auto& y : free_typed_names(a.body)) {
      if (bound.count(y)) continue;
      auto it = env.find(y);
      if (it == env.end()) {
        avoid.insert(y.first);
      } else {
        auto fv = plain_names(free_typed_names(it->second));
        avoid.insert(fv.begin(), fv.end());
      }
    }
    Env inner = env;
    std::vector<TypedBinder> fresh;
    for (const auto& b : a.binders) {
      std::string c = fresh_binder(avoid, supply);
      avoid.insert(c);
      inner.insert_or_assign(TypedName{b.name, b.type}, TypedNamedTerm::variable(c, b.type));
      fresh.push_back(TypedBinder{std::move(c), b.type});
    }
    args.push_back(TypedNamedArg{std::move(fresh), subst_rec(a.body, inner, supply)});
  }
  return TypedNamedTerm::op(t.name(), t.type_args(), std::move(args));
}

}  // namespace

std::set<TypedName> free_typed_names(const TypedNamedTerm& t) {
  std::multiset<TypedName> bound;
  std::set<TypedName> out;
  collect_free(t, bound, out);
  return out;
}

bool alpha_equal(const TypedNamedTerm& a, const TypedNamedTerm& b) {
  Scope sa, sb;
  std::size_t level = 0;
  return alpha_rec(a, b, sa, sb, level);
}

TypedNamedTerm typed_named_subst(
    const TypedNamedTerm& t, const std::function<TypedNamedTerm(std::size_t, const TypeExpr&)>& s,
    const NameSupply& supply) {
  Env env;
  for (const auto& y : free_typed_names(t)) {
    if (auto n = supply.index(y.first)) env.emplace(y, s(*n, y.second));
  }
  return subst_rec(t, env, supply);
}

TypedModel<TypedNamedTerm> typed_named_model(const TypedSignatureSchema& schema,
                                             const NameSupply& supply) {
  auto shared = std::make_shared<const TypedSignatureSchema>(schema);
  TypedModel<TypedNamedTerm> m;
  m.name = "typed-named";
  m.variables = [supply](std::size_t n, const TypeExpr& ty) {
    return TypedNamedTerm::variable(supply.name(n), ty);
  };
  m.substitute = [supply](const TypedNamedTerm& t, const TypedValuation<TypedNamedTerm>& s) {
    return typed_named_subst(t, s, supply);
  };
  m.equal = [](const TypedNamedTerm& a, const TypedNamedTerm& b) { return alpha_equal(a, b); };
  m.show = [](const TypedNamedTerm& t) { return print_typed_named(t); };
  for (const auto& op : schema.ops) {
    m.ops[Symbol::intern(op.name)] = [shared, name = op.name, supply](
                                         std::span<const TypeExpr> tys,
                                         std::span<const TypedNamedTerm> xs) {
      const TypedArity ar = shared->instantiate(name, tys);
      if (xs.size() != ar.premises.size()) {
        throw Error(ErrorKind::kType, "operation '" + name + "' expects " +
                                          std::to_string(ar.premises.size()) + " arguments");
      }
      std::vector<TypedNamedArg> args;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto& gamma = ar.premises[i].context;
        if (gamma.empty()) {
          args.push_back(TypedNamedArg{{}, xs[i]});
          continue;
        }
        std::set<std::string> avoid = plain_names(free_typed_names(xs[i]));
        std::vector<TypedBinder> binders;
        for (const auto& ty : gamma) {
          binders.push_back(TypedBinder{fresh_binder(avoid, supply), ty});
          avoid.insert(binders.back().name);
        }
        TypedValuation<TypedNamedTerm> close = [&](std::size_t n, const TypeExpr& ty) {
          // The n-th binder of type ty counted from the right.
          std::size_t seen = 0;
          for (std::size_t j = binders.size(); j-- > 0;) {
            if (binders[j].type != ty) continue;
            if (seen++ == n) return TypedNamedTerm::variable(binders[j].name, ty);
          }
          return TypedNamedTerm::variable(supply.name(n - seen), ty);
        };
        TypedNamedTerm body = typed_named_subst(xs[i], close, supply);
        args.push_back(TypedNamedArg{std::move(binders), std::move(body)});
      }
      return TypedNamedTerm::op(name, std::vector<TypeExpr>(tys.begin(), tys.end()),
                                std::move(args));
    };
  }
  return m;
}

TypedNamedTerm to_typed_named(const TypedSignatureSchema& schema, const TypedTerm& t,
                              const NameSupply& supply) {
  return t_initial_fold(schema, typed_named_model(schema, supply), t);
}

namespace {

TypedTerm from_rec(const TypedSignatureSchema& schema, const TypedNamedTerm& t,
                   std::vector<TypedBinder>& scope, const NameSupply& supply) {
  if (t.is_var()) {
    std::size_t same_type = 0;
    for (std::size_t i = scope.size(); i-- > 0;) {
      if (scope[i].type != t.type()) continue;
      if (scope[i].name == t.name()) return TypedTerm::var(same_type, t.type());
      ++same_type;
    }
    if (auto n = supply.index(t.name())) return TypedTerm::var(*n + same_type, t.type());
    throw Error(ErrorKind::kBinding, "unbound name '" + t.name() + "' is not a supply name");
  }
  TypedArity ar;
  try {
    ar = schema.instantiate(t.name(), t.type_args());
  } catch (const Error& e) {
    throw Error(ErrorKind::kType, e.diagnostics().front().message);
  }
  if (ar.premises.size() != t.args().size()) {
    throw Error(ErrorKind::kType, "wrong argument count for '" + t.name() + "'");
  }
  std::vector<TypedTerm> args;
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    const auto& a = t.args()[i];
    const auto& gamma = ar.premises[i].context;
    bool ok = a.binders.size() == gamma.size();
    for (std::size_t j = 0; ok && j < gamma.size(); ++j) ok = a.binders[j].type == gamma[j];
    if (!ok) {
      throw Error(ErrorKind::kType, "binders of argument " + std::to_string(i) + " of '" +
                                        t.name() + "' do not match its premise context");
    }
    scope.insert(scope.end(), a.binders.begin(), a.binders.end());
    args.push_back(from_rec(schema, a.body, scope, supply));
    scope.resize(scope.size() - a.binders.size());
  }
  return TypedTerm::op(t.name(), t.type_args(), std::move(args));
}

}  // namespace

TypedTerm from_typed_named(const TypedSignatureSchema& schema, const TypedNamedTerm& t,
                           const NameSupply& supply) {
  std::vector<TypedBinder> scope;
  return from_rec(schema, t, scope, supply);
}

}  // namespace dbsyn
