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

#include "dbsyn/term.h"

#include <algorithm>

namespace dbsyn {

namespace {

constexpr std::size_t kCachedVars = 1024;

}  // namespace

// Children that are uniquely owned are detached and released from a local
// worklist, so destroying a deep term does not recurse.
Term::Node::~Node() {
  if (args.empty()) return;
  std::vector<Term> pending = std::move(args);
  while (!pending.empty()) {
    Term t = std::move(pending.back());
    pending.pop_back();
    if (t.node_.use_count() == 1 && !t.node_->args.empty()) {
      auto& kids = const_cast<Node&>(*t.node_).args;
      for (auto& k : kids) pending.push_back(std::move(k));
      kids.clear();
    }
  }
}

Term Term::var(std::size_t index) {
  static const std::vector<Term>* cache = [] {
    auto* v = new std::vector<Term>();
    v->reserve(kCachedVars);
    for (std::size_t i = 0; i < kCachedVars; ++i) {
      auto n = std::make_shared<Node>();
      n->is_var = true;
      n->index = i;
      v->push_back(Term(std::move(n)));
    }
    return v;
  }();
  if (index < kCachedVars) return (*cache)[index];
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->index = index;
  return Term(std::move(n));
}

Term Term::op(Symbol name, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->name = name;
  n->args = std::move(args);
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  std::vector<std::pair<const Term*, const Term*>> stack{{&a, &b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x->same(*y)) continue;
    if (x->is_var() != y->is_var()) return false;
    if (x->is_var()) {
      if (x->index() != y->index()) return false;
      continue;
    }
    if (!(x->name() == y->name()) || x->args().size() != y->args().size()) return false;
    for (std::size_t i = 0; i < x->args().size(); ++i) {
      stack.emplace_back(&x->args()[i], &y->args()[i]);
    }
  }
  return true;
}

const BindingArity& checked_arity(const BindingSignature& sig, const Term& op_node) {
  const BindingArity* ar = sig.find(op_node.name());
  if (!ar) {
    throw Error(ErrorKind::kValidation, "unknown operation '" + op_node.name().str() + "'");
  }
  if (first_order_arity(*ar) != op_node.args().size()) {
    throw Error(ErrorKind::kValidation,
                "operation '" + op_node.name().str() + "' expects " +
                    std::to_string(first_order_arity(*ar)) + " arguments, got " +
                    std::to_string(op_node.args().size()));
  }
  return *ar;
}

Diagnostics wellformed(const BindingSignature& sig, const Term& t) {
  Diagnostics out;
  struct Frame {
    const Term* term;
    std::size_t next;
  };
  std::vector<Frame> stack{{&t, 0}};
  auto current_path = [&stack] {
    std::vector<std::size_t> path;
    for (std::size_t i = 0; i + 1 < stack.size(); ++i) path.push_back(stack[i].next - 1);
    return path;
  };
  // Check the root and every node as it is first entered.
  auto check = [&](const Term& node) -> bool {
    if (node.is_var()) return true;
    const BindingArity* ar = sig.find(node.name());
    if (!ar) {
      out.push_back(make_diagnostic(ErrorKind::kValidation,
                                    "unknown operation '" + node.name().str() + "'",
                                    std::nullopt, current_path()));
      return false;
    }
    if (first_order_arity(*ar) != node.args().size()) {
      out.push_back(make_diagnostic(
          ErrorKind::kValidation,
          "wrong argument count for '" + node.name().str() + "': expected " +
              std::to_string(first_order_arity(*ar)) + ", got " +
              std::to_string(node.args().size()),
          std::nullopt, current_path()));
    }
    return true;
  };
  check(t);
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.term->is_var() || f.next >= f.term->args().size()) {
      stack.pop_back();
      continue;
    }
    const Term& child = f.term->args()[f.next++];
    stack.push_back(Frame{&child, 0});
    check(child);
  }
  return out;
}

std::optional<std::size_t> max_free_var(const Term& t, const BindingSignature& sig) {
  using R = std::optional<std::size_t>;
  return fold_scoped<R>(
      t, sig, 0,
      [](std::size_t k, std::size_t d) -> R {
        if (k < d) return std::nullopt;
        return k - d;
      },
      [](const Term&, std::vector<R>&& kids, std::size_t) -> R {
        R best;
        for (const auto& k : kids) {
          if (k && (!best || *k > *best)) best = k;
        }
        return best;
      });
}

std::size_t support(const Term& t, const BindingSignature& sig) {
  auto m = max_free_var(t, sig);
  return m ? *m + 1 : 0;
}

std::size_t term_depth(const Term& t) {
  std::size_t best = 0;
  std::vector<std::pair<const Term*, std::size_t>> stack{{&t, 0}};
  while (!stack.empty()) {
    auto [x, d] = stack.back();
    stack.pop_back();
    if (x->is_var()) {
      best = std::max(best, d);
      continue;
    }
    best = std::max(best, d + 1);
    for (const auto& a : x->args()) stack.emplace_back(&a, d + 1);
  }
  return best;
}

std::size_t node_count(const Term& t) {
  std::size_t n = 0;
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* x = stack.back();
    stack.pop_back();
    ++n;
    if (!x->is_var()) {
      for (const auto& a : x->args()) stack.push_back(&a);
    }
  }
  return n;
}

}  // namespace dbsyn
