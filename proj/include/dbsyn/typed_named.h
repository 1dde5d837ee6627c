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
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dbsyn/named.h"
#include "dbsyn/typed.h"

namespace dbsyn {

struct TypedBinder {
  std::string name;
  TypeExpr type;

  friend bool operator==(const TypedBinder&, const TypedBinder&) = default;
};

struct TypedNamedArg;

/// Named simply-typed term. A variable is identified by its name together
/// with its type, so x : a and x : b are different variables.
class TypedNamedTerm {
 public:
  static TypedNamedTerm variable(std::string name, TypeExpr type);
  static TypedNamedTerm op(std::string name, std::vector<TypeExpr> type_args,
                           std::vector<TypedNamedArg> args);

  bool is_var() const;
  const std::string& name() const;
  const TypeExpr& type() const;
  const std::vector<TypeExpr>& type_args() const;
  const std::vector<TypedNamedArg>& args() const;

 private:
  struct Node;
  explicit TypedNamedTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TypedNamedArg {
  // Rightmost binder of a type is index 0 at that type.
  std::vector<TypedBinder> binders;
  TypedNamedTerm body;
};

using TypedName = std::pair<std::string, TypeExpr>;

std::set<TypedName> free_typed_names(const TypedNamedTerm& t);

bool alpha_equal(const TypedNamedTerm& a, const TypedNamedTerm& b);

/// Capture-avoiding simultaneous substitution: a free (supply name n, tau)
/// becomes s(n, tau). Binders are renamed to the first names not free in
/// the result, whatever their type.
TypedNamedTerm typed_named_subst(const TypedNamedTerm& t,
                                 const std::function<TypedNamedTerm(std::size_t, const TypeExpr&)>& s,
                                 const NameSupply& supply = {});

/// Every operation binds fresh names for the lowest indices of each type in
/// its premise contexts.
TypedModel<TypedNamedTerm> typed_named_model(const TypedSignatureSchema& schema,
                                             const NameSupply& supply = {});

TypedNamedTerm to_typed_named(const TypedSignatureSchema& schema, const TypedTerm& t,
                              const NameSupply& supply = {});

/// Inverse up to alpha. Throws Error(kBinding) on a free name that is not a
/// supply name and Error(kType) when binders disagree with the premise
/// contexts of the instantiated arity.
TypedTerm from_typed_named(const TypedSignatureSchema& schema, const TypedNamedTerm& t,
                           const NameSupply& supply = {});

}  // namespace dbsyn
