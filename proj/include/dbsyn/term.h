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
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dbsyn/diagnostic.h"
#include "dbsyn/signature.h"
#include "dbsyn/symbol.h"

namespace dbsyn {

/// Immutable De Bruijn term: Var(n) or an operation applied to arguments.
/// Copies share structure; equality is structural.
class Term {
 public:
  static Term var(std::size_t index);
  static Term op(Symbol name, std::vector<Term> args);
  static Term op(std::string_view name, std::vector<Term> args) {
    return op(Symbol::intern(name), std::move(args));
  }

  bool is_var() const;
  std::size_t index() const;  // meaningful only for variables
  Symbol name() const;        // meaningful only for operations
  const std::vector<Term>& args() const;

  // Physical identity; implies structural equality.
  bool same(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  friend struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  bool is_var = false;
  std::size_t index = 0;
  Symbol name;
  std::vector<Term> args;

  ~Node();
};

inline bool Term::is_var() const { return node_->is_var; }
inline std::size_t Term::index() const { return node_->index; }
inline Symbol Term::name() const { return node_->name; }
inline const std::vector<Term>& Term::args() const { return node_->args; }

/// Arity of an Op node, checking that it is declared and that the argument
/// count matches. Throws Error(kValidation) otherwise.
const BindingArity& checked_arity(const BindingSignature& sig, const Term& op_node);

/// Empty iff every Op node is declared in `sig` with first_order_arity equal
/// to its argument count. Each diagnostic carries the path to the node.
Diagnostics wellformed(const BindingSignature& sig, const Term& t);

/// Bottom-up traversal that also reports how many binders enclose each node.
/// leaf(index, depth) handles variables; node(op_term, children, depth)
/// combines already-folded arguments. Child i of a node at depth d sits at
/// depth d + n_i. Uses an explicit stack, so term depth is not limited by
/// the call stack.
template <class A, class Leaf, class Combine>
A fold_scoped(const Term& root, const BindingSignature& sig, std::size_t base_depth,
              Leaf&& leaf, Combine&& node) {
  if (root.is_var()) return leaf(root.index(), base_depth);
  struct Frame {
    const Term* term;
    const BindingArity* arity;
    std::size_t depth;
    std::size_t next;
    std::vector<A> kids;
  };
  std::vector<Frame> stack;
  auto push = [&](const Term& t, std::size_t d) {
    const BindingArity& ar = checked_arity(sig, t);
    stack.push_back(Frame{&t, &ar, d, 0, {}});
    stack.back().kids.reserve(t.args().size());
  };
  push(root, base_depth);
  while (true) {
    Frame& f = stack.back();
    if (f.next < f.term->args().size()) {
      const Term& child = f.term->args()[f.next];
      const std::size_t d = f.depth + f.arity->binders[f.next];
      ++f.next;
      if (child.is_var()) {
        f.kids.push_back(leaf(child.index(), d));
      } else {
        push(child, d);
      }
    } else {
      A value = node(*f.term, std::move(f.kids), f.depth);
      stack.pop_back();
      if (stack.empty()) return value;
      stack.back().kids.push_back(std::move(value));
    }
  }
}

/// Structural recursion: Var(n) -> var_case(n); Op(o, args) -> op_case(o, folded args).
template <class A, class VarCase, class OpCase>
A fold(const BindingSignature& sig, VarCase&& var_case, OpCase&& op_case, const Term& t) {
  return fold_scoped<A>(
      t, sig, 0, [&](std::size_t n, std::size_t) { return var_case(n); },
      [&](const Term& o, std::vector<A>&& kids, std::size_t) {
        return op_case(o.name(), std::move(kids));
      });
}

/// Greatest free index, counting binders from the arities; nullopt if closed.
std::optional<std::size_t> max_free_var(const Term& t, const BindingSignature& sig);

/// 0 for closed terms, otherwise max_free_var + 1.
std::size_t support(const Term& t, const BindingSignature& sig);

/// Nesting depth of Op nodes (a variable has depth 0).
std::size_t term_depth(const Term& t);
std::size_t node_count(const Term& t);

}  // namespace dbsyn
