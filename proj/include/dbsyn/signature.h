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
#include <string_view>
#include <utility>
#include <vector>

#include "dbsyn/diagnostic.h"
#include "dbsyn/symbol.h"

namespace dbsyn {

/// Binder counts, one per argument: (n_1, ..., n_p).
struct BindingArity {
  std::vector<std::size_t> binders;

  BindingArity() = default;
  BindingArity(std::initializer_list<std::size_t> b) : binders(b) {}
  explicit BindingArity(std::vector<std::size_t> b) : binders(std::move(b)) {}

  friend bool operator==(const BindingArity&, const BindingArity&) = default;
};

/// Length of the binder sequence, i.e. the number of arguments.
inline std::size_t first_order_arity(const BindingArity& a) { return a.binders.size(); }

struct OpDecl {
  Symbol name;
  BindingArity arity;
};

/// Untyped binding signature. Declaration order is preserved and duplicates
/// are representable so that validate_signature can report them.
struct BindingSignature {
  std::string name;
  std::vector<OpDecl> ops;

  BindingSignature& add(std::string_view op, BindingArity arity);
  const BindingArity* find(Symbol op) const;
  // Throws Error(kValidation) for an undeclared operation.
  const BindingArity& arity(Symbol op) const;

  friend bool operator==(const BindingSignature& a, const BindingSignature& b);
};

/// {lam : (1), app : (0, 0)}.
BindingSignature lambda_signature();

Diagnostics validate_signature(const BindingSignature& sig);

// Simple types and typed arities.

/// Name of the binary constructor written infix as `->`.
inline constexpr std::string_view kArrow = "arrow";

struct TypeExpr {
  std::string head;
  std::vector<TypeExpr> args;

  static TypeExpr base(std::string name) { return TypeExpr{std::move(name), {}}; }
  static TypeExpr arrow(TypeExpr from, TypeExpr to);

  bool is_arrow() const { return head == kArrow && args.size() == 2; }
  const TypeExpr& domain() const { return args.at(0); }
  const TypeExpr& codomain() const { return args.at(1); }
};

bool operator==(const TypeExpr& a, const TypeExpr& b);
bool operator<(const TypeExpr& a, const TypeExpr& b);
inline bool operator!=(const TypeExpr& a, const TypeExpr& b) { return !(a == b); }

/// `a`, `a -> b` (right associative), `list(a)`.
std::string to_string(const TypeExpr& t);

/// Declared type constructors with their arities; base types have arity 0.
struct TypeGrammar {
  std::vector<std::pair<std::string, std::size_t>> ctors;

  std::optional<std::size_t> arity_of(std::string_view ctor) const;
  friend bool operator==(const TypeGrammar&, const TypeGrammar&) = default;
};

/// Checks that every head is declared with the right arity; names listed in
/// `metavars` are accepted as nullary placeholders.
Diagnostics validate_type(const TypeExpr& t, const TypeGrammar& g,
                          std::span<const std::string> metavars = {});

/// gamma |- tau
struct Premise {
  std::vector<TypeExpr> context;
  TypeExpr type;

  friend bool operator==(const Premise&, const Premise&) = default;
};

struct TypedArity {
  std::vector<Premise> premises;
  TypeExpr conclusion;

  /// ((tau_1, ..., tau_p), tau).
  std::pair<std::vector<TypeExpr>, TypeExpr> first_order() const;

  friend bool operator==(const TypedArity&, const TypedArity&) = default;
};

/// One operation family, e.g. lam[s, t] with arity (s |- t) -> s -> t.
struct TypedOpSchema {
  std::string name;
  std::vector<std::string> metavars;
  TypedArity arity;

  friend bool operator==(const TypedOpSchema&, const TypedOpSchema&) = default;
};

struct TypedSignatureSchema {
  std::string name;
  TypeGrammar grammar;
  std::vector<TypedOpSchema> ops;

  const TypedOpSchema* find(std::string_view op) const;
  // Throws Error if the op is unknown or the arguments are unacceptable.
  TypedArity instantiate(std::string_view op, std::span<const TypeExpr> type_args) const;

  friend bool operator==(const TypedSignatureSchema&, const TypedSignatureSchema&) = default;
};

/// Substitutes ground type arguments for the schema's metavariables.
/// Throws Error(kArgument) on a count mismatch and Error(kValidation) when an
/// argument is not a ground type of `grammar`.
TypedArity instantiate_schema(const TypedOpSchema& op, std::span<const TypeExpr> type_args,
                              const TypeGrammar& grammar);

/// Base types plus `arrow`, with lam[s, t] : (s |- t) -> s -> t and
/// app[s, t] : ( |- s -> t), ( |- s) -> t. Throws Error(kArgument) if
/// `base_types` is empty.
TypedSignatureSchema stlc_schema(const std::vector<std::string>& base_types);

Diagnostics validate_signature(const TypedSignatureSchema& schema);

}  // namespace dbsyn
