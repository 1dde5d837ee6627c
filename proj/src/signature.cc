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

#include "dbsyn/signature.h"

#include <algorithm>
#include <map>
#include <set>

namespace dbsyn {

BindingSignature& BindingSignature::add(std::string_view op, BindingArity arity) {
  ops.push_back(OpDecl{Symbol::intern(op), std::move(arity)});
  return *this;
}

const BindingArity* BindingSignature::find(Symbol op) const {
  for (const auto& d : ops) {
    if (d.name == op) return &d.arity;
  }
  return nullptr;
}

const BindingArity& BindingSignature::arity(Symbol op) const {
  if (const auto* a = find(op)) return *a;
  throw Error(ErrorKind::kValidation, "unknown operation '" + op.str() + "'");
}

bool operator==(const BindingSignature& a, const BindingSignature& b) {
  if (a.name != b.name || a.ops.size() != b.ops.size()) return false;
  for (std::size_t i = 0; i < a.ops.size(); ++i) {
    if (!(a.ops[i].name == b.ops[i].name) || a.ops[i].arity != b.ops[i].arity) return false;
  }
  return true;
}

BindingSignature lambda_signature() {
  BindingSignature sig;
  sig.name = "lambda";
  sig.add("lam", {1}).add("app", {0, 0});
  return sig;
}

Diagnostics validate_signature(const BindingSignature& sig) {
  Diagnostics out;
  std::set<std::string> seen;
  for (const auto& d : sig.ops) {
    if (d.name.empty()) {
      out.push_back(make_diagnostic(ErrorKind::kValidation, "operation with empty name"));
    } else if (!seen.insert(d.name.str()).second) {
      out.push_back(make_diagnostic(ErrorKind::kValidation,
                                    "duplicate operation name '" + d.name.str() + "'"));
    }
  }
  return out;
}


TypeExpr TypeExpr::arrow(TypeExpr from, TypeExpr to) {
  TypeExpr t;
  t.head = std::string(kArrow);
  t.args.push_back(std::move(from));
  t.args.push_back(std::move(to));
  return t;
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  return a.head == b.head && a.args == b.args;
}

bool operator<(const TypeExpr& a, const TypeExpr& b) {
  if (a.head != b.head) return a.head < b.head;
  return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(),
                                      b.args.end());
}

std::string to_string(const TypeExpr& t) {
  if (t.is_arrow()) {
    std::string lhs = to_string(t.domain());
    if (t.domain().is_arrow()) lhs = "(" + lhs + ")";
    return lhs + " -> " + to_string(t.codomain());
  }
  if (t.args.empty()) return t.head;
  std::string s = t.head + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ", ";
    s += to_string(t.args[i]);
  }
  return s + ")";
}

std::optional<std::size_t> TypeGrammar::arity_of(std::string_view ctor) const {
  for (const auto& [name, n] : ctors) {
    if (name == ctor) return n;
  }
  return std::nullopt;
}

Diagnostics validate_type(const TypeExpr& t, const TypeGrammar& g,
                          std::span<const std::string> metavars) {
  Diagnostics out;
  const bool is_meta = std::find(metavars.begin(), metavars.end(), t.head) != metavars.end();
  if (is_meta) {
    if (!t.args.empty()) {
      out.push_back(make_diagnostic(ErrorKind::kValidation,
                                    "type metavariable '" + t.head + "' applied to arguments"));
    }
    return out;
  }
  auto n = g.arity_of(t.head);
  if (!n) {
    out.push_back(
        make_diagnostic(ErrorKind::kValidation, "unknown type constructor '" + t.head + "'"));
  } else if (*n != t.args.size()) {
    out.push_back(make_diagnostic(
        ErrorKind::kValidation, "type constructor '" + t.head + "' expects " +
                                    std::to_string(*n) + " arguments, got " +
                                    std::to_string(t.args.size())));
  }
  for (const auto& a : t.args) {
    auto sub = validate_type(a, g, metavars);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::pair<std::vector<TypeExpr>, TypeExpr> TypedArity::first_order() const {
  std::vector<TypeExpr> args;
  args.reserve(premises.size());
  for (const auto& p : premises) args.push_back(p.type);
  return {std::move(args), conclusion};
}

const TypedOpSchema* TypedSignatureSchema::find(std::string_view op) const {
  for (const auto& o : ops) {
    if (o.name == op) return &o;
  }
  return nullptr;
}

TypedArity TypedSignatureSchema::instantiate(std::string_view op,
                                             std::span<const TypeExpr> type_args) const {
  const auto* o = find(op);
  if (!o) throw Error(ErrorKind::kValidation, "unknown operation '" + std::string(op) + "'");
  return instantiate_schema(*o, type_args, grammar);
}

namespace {

TypeExpr replace_metavars(const TypeExpr& t, const std::map<std::string, const TypeExpr*>& env) {
  if (t.args.empty()) {
    if (auto it = env.find(t.head); it != env.end()) return *it->second;
    return t;
  }
  TypeExpr out;
  out.head = t.head;
  out.args.reserve(t.args.size());
  for (const auto& a : t.args) out.args.push_back(replace_metavars(a, env));
  return out;
}

}  // namespace

TypedArity instantiate_schema(const TypedOpSchema& op, std::span<const TypeExpr> type_args,
                              const TypeGrammar& grammar) {
  if (type_args.size() != op.metavars.size()) {
    throw Error(ErrorKind::kArgument,
                "operation '" + op.name + "' expects " + std::to_string(op.metavars.size()) +
                    " type arguments, got " + std::to_string(type_args.size()));
  }
  std::map<std::string, const TypeExpr*> env;
  for (std::size_t i = 0; i < type_args.size(); ++i) {
    auto ds = validate_type(type_args[i], grammar);
    if (!ds.empty()) {
      ds.front().message = "type argument " + std::to_string(i) + " of '" + op.name +
                           "' is not a ground type: " + ds.front().message;
      throw Error(std::move(ds));
    }
    env[op.metavars[i]] = &type_args[i];
  }
  TypedArity out;
  for (const auto& p : op.arity.premises) {
    Premise q;
    for (const auto& c : p.context) q.context.push_back(replace_metavars(c, env));
    q.type = replace_metavars(p.type, env);
    out.premises.push_back(std::move(q));
  }
  out.conclusion = replace_metavars(op.arity.conclusion, env);
  return out;
}

TypedSignatureSchema stlc_schema(const std::vector<std::string>& base_types) {
  if (base_types.empty()) throw Error(ErrorKind::kArgument, "stlc_schema needs a base type");
  TypedSignatureSchema schema;
  schema.name = "stlc";
  for (const auto& b : base_types) schema.grammar.ctors.emplace_back(b, 0);
  schema.grammar.ctors.emplace_back(std::string(kArrow), 2);

  const TypeExpr s = TypeExpr::base("s");
  const TypeExpr t = TypeExpr::base("t");
  TypedOpSchema lam{"lam", {"s", "t"}, {{Premise{{s}, t}}, TypeExpr::arrow(s, t)}};
  TypedOpSchema app{"app",
                    {"s", "t"},
                    {{Premise{{}, TypeExpr::arrow(s, t)}, Premise{{}, s}}, t}};
  schema.ops = {std::move(lam), std::move(app)};
  return schema;
}

Diagnostics validate_signature(const TypedSignatureSchema& schema) {
  Diagnostics out;
  auto append = [&out](Diagnostics ds, const std::string& where) {
    for (auto& d : ds) {
      d.message = where + ": " + d.message;
      out.push_back(std::move(d));
    }
  };

  std::set<std::string> ctor_names;
  for (const auto& [name, n] : schema.grammar.ctors) {
    (void)n;
    if (!ctor_names.insert(name).second) {
      out.push_back(make_diagnostic(ErrorKind::kValidation,
                                    "duplicate type constructor '" + name + "'"));
    }
  }

  std::set<std::string> seen;
  for (const auto& op : schema.ops) {
    if (!seen.insert(op.name).second) {
      out.push_back(
          make_diagnostic(ErrorKind::kValidation, "duplicate operation name '" + op.name + "'"));
    }
    std::set<std::string> mv;
    for (const auto& m : op.metavars) {
      if (!mv.insert(m).second) {
        out.push_back(make_diagnostic(ErrorKind::kValidation, "operation '" + op.name +
                                                                  "': duplicate metavariable '" +
                                                                  m + "'"));
      }
      if (ctor_names.count(m)) {
        out.push_back(make_diagnostic(ErrorKind::kValidation,
                                      "operation '" + op.name + "': metavariable '" + m +
                                          "' shadows a type constructor"));
      }
    }
    const std::string where = "operation '" + op.name + "'";
    for (const auto& p : op.arity.premises) {
      for (const auto& c : p.context) append(validate_type(c, schema.grammar, op.metavars), where);
      append(validate_type(p.type, schema.grammar, op.metavars), where);
    }
    append(validate_type(op.arity.conclusion, schema.grammar, op.metavars), where);
  }
  return out;
}

}  // namespace dbsyn
