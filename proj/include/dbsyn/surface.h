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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dbsyn/equational.h"
#include "dbsyn/named.h"
#include "dbsyn/signature.h"
#include "dbsyn/subst.h"
#include "dbsyn/term.h"
#include "dbsyn/typed.h"
#include "dbsyn/typed_named.h"

namespace dbsyn {

// Every parser throws Error with a source span: kParse for lexical and
// syntactic problems, kValidation when the text is well formed but does not
// fit the signature. Printers are canonical: single spaces, no trailing
// whitespace, and parse(print(x)) == x.

// Nameless terms: `n` is Var(n), `(o t1 ... tp)` an operation.
std::string print_term(const Term& t);
/// Without a signature only the syntax is checked.
Term parse_term(std::string_view text, const BindingSignature* sig = nullptr);
inline Term parse_term(std::string_view text, const BindingSignature& sig) {
  return parse_term(text, &sig);
}

// Named terms: names are variables, `(o [x y] t1 t2)` attaches a binder list
// to an argument.
std::string print_named(const NamedTerm& t);
NamedTerm parse_named(std::string_view text, const BindingSignature* sig = nullptr);
inline NamedTerm parse_named(std::string_view text, const BindingSignature& sig) {
  return parse_named(text, &sig);
}

enum class TermMode { kNameless, kNamed };
using AnyTerm = std::variant<Term, NamedTerm>;
AnyTerm parse_term(std::string_view text, TermMode mode, const BindingSignature& sig);
std::string print_term(const AnyTerm& t);

// JSON mirror of the constructors: {"var": n} and {"op": name, "args": [...]}.
std::string print_term_json(const Term& t);
Term parse_term_json(std::string_view text, const BindingSignature* sig = nullptr);

// `[t0, t1; ^k]`; the `; ^k` part defaults to ^0 when omitted.
std::string print_assignment(const Assignment& s);
Assignment parse_assignment(std::string_view text, const BindingSignature* sig = nullptr);
std::string print_renaming(const Renaming& f);
Renaming parse_renaming(std::string_view text);

// Types: base names, constructor applications c(t1, ..., tn) and
// right-associative `->`.
std::string print_type(const TypeExpr& t);
TypeExpr parse_type(std::string_view text);

// Typed terms: `(name[ty1, ty2] args...)` and variables `(#n : ty)`. The
// long form `(op[name; ty1, ty2] args...)` is accepted too.
std::string print_typed_term(const TypedTerm& t);
TypedTerm parse_typed_term(std::string_view text);
std::string print_typed_assignment(const TypedAssignment& s);

// Typed named terms: variables `(x : ty)`, binders `[x : ty, y : ty]`.
std::string print_typed_named(const TypedNamedTerm& t);
TypedNamedTerm parse_typed_named(std::string_view text);

// Signature files:
//   types { a; b; arrow(2) }
//   signature lambda { op lam : (1); op app : (0, 0); }
//   signature stlc { op lam[s, t] : (s |- t) -> s -> t; ... }
// Typed signatures use the nearest preceding types block.
struct SignatureFile {
  std::vector<BindingSignature> untyped;
  std::vector<TypedSignatureSchema> typed;
};

SignatureFile parse_signature_file(std::string_view text);
std::string print_signature(const BindingSignature& sig);
std::string print_signature(const TypedSignatureSchema& schema);  // with its types block
std::string print_signature_file(const SignatureFile& file);

// Metaterms: `?i`, `n`, `(o m1 ... mp)` and `{ m [m0, m1; ^k] }`.
std::string print_metaterm(const MetaTerm& m);
MetaTerm parse_metaterm(std::string_view text);

// Theory files: an optional `theory name;`, one untyped signature, then
//   eq beta [1, 0] : (app (lam ?0) ?1) = { ?0 [?1; ^0] };
// The theory is named after the signature when no name is given. Parsing
// checks structure only; validate_theory does the rest.
EquationalTheory parse_theory(std::string_view text);
std::string print_theory(const EquationalTheory& theory);

}  // namespace dbsyn
