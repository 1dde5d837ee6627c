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

#include "dbsyn/gen.h"

#include <algorithm>
#include <memory>

namespace dbsyn {

namespace {

Term random_term_at(Rng& rng, const BindingSignature& sig, std::size_t budget,
                    std::size_t bound, std::size_t free_range) {
  const bool leaf = budget == 0 || sig.ops.empty() || rng.chance(1, 3);
  if (leaf) return Term::var(rng.below(bound + free_range));
  const OpDecl& op = sig.ops[rng.below(sig.ops.size())];
  std::vector<Term> args;
  args.reserve(op.arity.binders.size());
  for (auto n : op.arity.binders) {
    args.push_back(random_term_at(rng, sig, budget - 1, bound + n, free_range));
  }
  return Term::op(op.name, std::move(args));
}

NamedTerm random_named_at(Rng& rng, const BindingSignature& sig, std::size_t budget,
                          std::vector<std::string>& scope, const NameSupply& supply) {
  const bool leaf = budget == 0 || sig.ops.empty() || rng.chance(1, 3);
  if (leaf) {
    if (!scope.empty() && rng.chance(2, 3)) return NamedTerm::variable(scope[rng.below(scope.size())]);
    return NamedTerm::variable(supply.name(rng.below(4)));
  }
  const OpDecl& op = sig.ops[rng.below(sig.ops.size())];
  const std::vector<std::string> pool{"a", "b", supply.name(0), supply.name(1)};
  std::vector<NamedArg> args;
  for (auto n : op.arity.binders) {
    std::vector<std::string> binders;
    for (std::size_t j = 0; j < n; ++j) binders.push_back(pool[rng.below(pool.size())]);
    scope.insert(scope.end(), binders.begin(), binders.end());
    NamedTerm body = random_named_at(rng, sig, budget - 1, scope, supply);
    scope.resize(scope.size() - n);
    args.push_back(NamedArg{std::move(binders), std::move(body)});
  }
  return NamedTerm::op(op.name.str(), std::move(args));
}

}  // namespace

Term random_term(Rng& rng, const BindingSignature& sig, std::size_t max_depth,
                 std::size_t free_range) {
  return random_term_at(rng, sig, max_depth, 0, std::max<std::size_t>(free_range, 1));
}

Assignment random_assignment(Rng& rng, const BindingSignature& sig, const GenConfig& cfg) {
  const std::size_t q = rng.below(cfg.max_prefix + 1);
  std::vector<Term> p;
  for (std::size_t i = 0; i < q; ++i) {
    p.push_back(random_term(rng, sig, cfg.entry_depth, cfg.free_range));
  }
  return Assignment(std::move(p), rng.below(cfg.max_shift + 1));
}

Renaming random_renaming(Rng& rng, const GenConfig& cfg) {
  const std::size_t q = rng.below(cfg.max_prefix + 1);
  std::vector<std::size_t> p;
  for (std::size_t i = 0; i < q; ++i) p.push_back(rng.below(cfg.free_range + q + 1));
  return Renaming(std::move(p), rng.below(cfg.max_shift + 1));
}

NamedTerm random_named_term(Rng& rng, const BindingSignature& sig, std::size_t max_depth,
                            const NameSupply& supply) {
  std::vector<std::string> scope;
  return random_named_at(rng, sig, max_depth, scope, supply);
}

std::vector<Term> shrink_term(const Term& t) {
  std::vector<Term> out;
  if (t.is_var()) {
    if (t.index() > 0) out.push_back(Term::var(0));
    return out;
  }
  out.push_back(Term::var(0));
  for (const auto& a : t.args()) out.push_back(a);
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (t.args()[i].is_var() && t.args()[i].index() == 0) continue;
    auto args = t.args();
    args[i] = Term::var(0);
    out.push_back(Term::op(t.name(), std::move(args)));
  }
  return out;
}

std::vector<Term> enumerate_terms(const BindingSignature& sig, std::size_t max_depth,
                                  std::size_t index_bound) {
  std::vector<Term> level;
  for (std::size_t i = 0; i < index_bound; ++i) level.push_back(Term::var(i));
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<Term> next;
    for (std::size_t i = 0; i < index_bound; ++i) next.push_back(Term::var(i));
    for (const auto& op : sig.ops) {
      const std::size_t p = first_order_arity(op.arity);
      if (p == 0) {
        next.push_back(Term::op(op.name, {}));
        continue;
      }
      if (level.empty()) continue;
      // Odometer over level^p.
      std::vector<std::size_t> pick(p, 0);
      while (true) {
        std::vector<Term> args;
        args.reserve(p);
        for (auto k : pick) args.push_back(level[k]);
        next.push_back(Term::op(op.name, std::move(args)));
        std::size_t pos = p;
        while (pos > 0 && ++pick[pos - 1] == level.size()) {
          pick[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Assignment> enumerate_assignments(std::span<const Term> pool, std::size_t max_prefix,
                                              std::size_t max_shift) {
  std::vector<Assignment> out;
  auto push_unique = [&out](Assignment a) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
  };
  for (std::size_t q = 0; q <= max_prefix; ++q) {
    std::vector<std::size_t> pick(q, 0);
    while (true) {
      for (std::size_t k = 0; k <= max_shift; ++k) {
        std::vector<Term> p;
        for (auto i : pick) p.push_back(pool[i]);
        push_unique(Assignment(std::move(p), k));
      }
      std::size_t pos = q;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++pick[pos] < pool.size()) {
          done = false;
          break;
        }
        pick[pos] = 0;
      }
      if (done || pool.empty()) break;
    }
  }
  return out;
}

Sampler<Term> term_sampler(const BindingSignature& sig, const GenConfig& cfg) {
  auto shared = std::make_shared<const BindingSignature>(sig);
  Sampler<Term> s;
  s.element = [shared, cfg](Rng& r) {
    return random_term(r, *shared, cfg.max_depth, cfg.free_range);
  };
  s.assignment = [shared, cfg](Rng& r) {
    Assignment a = random_assignment(r, *shared, cfg);
    return FiniteAssignment<Term>{a.prefix(), a.tail_shift()};
  };
  s.shrink = shrink_term;
  return s;
}

Sampler<NamedTerm> named_sampler(const BindingSignature& sig, const GenConfig& cfg,
                                 const NameSupply& supply) {
  auto shared = std::make_shared<const BindingSignature>(sig);
  Sampler<NamedTerm> s;
  s.element = [shared, cfg, supply](Rng& r) {
    return random_named_term(r, *shared, cfg.max_depth, supply);
  };
  s.assignment = [shared, cfg, supply](Rng& r) {
    FiniteAssignment<NamedTerm> a;
    const std::size_t q = r.below(cfg.max_prefix + 1);
    for (std::size_t i = 0; i < q; ++i) {
      a.prefix.push_back(random_named_term(r, *shared, cfg.entry_depth, supply));
    }
    a.tail_shift = r.below(cfg.max_shift + 1);
    return a;
  };
  return s;
}

Sampler<std::size_t> nat_sampler() {
  Sampler<std::size_t> s;
  s.element = [](Rng& r) { return r.below(10); };
  s.assignment = [](Rng& r) {
    FiniteAssignment<std::size_t> a;
    const std::size_t q = r.below(5);
    for (std::size_t i = 0; i < q; ++i) a.prefix.push_back(r.below(10));
    a.tail_shift = r.below(4);
    return a;
  };
  s.shrink = [](const std::size_t& n) {
    std::vector<std::size_t> out;
    if (n > 0) out.push_back(0);
    if (n > 1) out.push_back(n - 1);
    return out;
  };
  return s;
}

}  // namespace dbsyn
