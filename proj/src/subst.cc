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

#include "dbsyn/subst.h"

namespace dbsyn {

Renaming::Renaming(std::vector<std::size_t> prefix, std::size_t tail_shift)
    : prefix_(std::move(prefix)), tail_shift_(tail_shift) {
  while (!prefix_.empty() && tail_shift_ > 0 && prefix_.back() == tail_shift_ - 1) {
    prefix_.pop_back();
    --tail_shift_;
  }
}

std::size_t Renaming::operator()(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return tail_shift_ + (n - prefix_.size());
}

Assignment::Assignment(std::vector<Term> prefix, std::size_t tail_shift)
    : prefix_(std::move(prefix)), tail_shift_(tail_shift) {
  while (!prefix_.empty() && tail_shift_ > 0 && prefix_.back().is_var() &&
         prefix_.back().index() == tail_shift_ - 1) {
    prefix_.pop_back();
    --tail_shift_;
  }
}

Assignment Assignment::from_renaming(const Renaming& f) {
  std::vector<Term> p;
  p.reserve(f.prefix().size());
  for (auto r : f.prefix()) p.push_back(Term::var(r));
  return Assignment(std::move(p), f.tail_shift());
}

Term Assignment::operator()(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return Term::var(tail_shift_ + (n - prefix_.size()));
}

Renaming lift_renaming(const Renaming& f) {
  std::vector<std::size_t> p;
  p.reserve(f.prefix().size() + 1);
  p.push_back(0);
  for (auto r : f.prefix()) p.push_back(r + 1);
  return Renaming(std::move(p), f.tail_shift() + 1);
}

Renaming lift_renaming_n(const Renaming& f, std::size_t n) {
  Renaming out = f;
  for (std::size_t i = 0; i < n; ++i) out = lift_renaming(out);
  return out;
}

namespace {

// Rebuilds an Op node from mapped children, reusing the original when no
// child changed.
Term rebuild(const Term& original, std::vector<Term>&& kids) {
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (!kids[i].same(original.args()[i])) return Term::op(original.name(), std::move(kids));
  }
  return original;
}

template <class Leaf>
Term map_vars(const Term& t, const BindingSignature& sig, Leaf&& leaf) {
  return fold_scoped<Term>(t, sig, 0, leaf,
                           [](const Term& o, std::vector<Term>&& kids, std::size_t) {
                             return rebuild(o, std::move(kids));
                           });
}

}  // namespace

Term rename(const Term& t, const Renaming& f, const BindingSignature& sig) {
  return map_vars(t, sig, [&f](std::size_t k, std::size_t d) {
    return k < d ? Term::var(k) : Term::var(f(k - d) + d);
  });
}

Term shift_free(const Term& t, std::size_t k, const BindingSignature& sig) {
  if (k == 0) return t;
  return map_vars(t, sig, [k](std::size_t i, std::size_t d) {
    return i < d ? Term::var(i) : Term::var(i + k);
  });
}

Assignment lift(const Assignment& s, const BindingSignature& sig) {
  std::vector<Term> p;
  p.reserve(s.prefix().size() + 1);
  p.push_back(Term::var(0));
  for (const auto& e : s.prefix()) p.push_back(shift_free(e, 1, sig));
  return Assignment(std::move(p), s.tail_shift() + 1);
}

Assignment lift_n(const Assignment& s, std::size_t n, const BindingSignature& sig) {
  Assignment out = s;
  for (std::size_t i = 0; i < n; ++i) out = lift(out, sig);
  return out;
}

Term subst(const Term& t, const Assignment& s, const BindingSignature& sig) {
  const std::size_t q = s.prefix().size();
  return map_vars(t, sig, [&](std::size_t k, std::size_t d) {
    if (k < d) return Term::var(k);
    const std::size_t m = k - d;
    if (m >= q) return Term::var(s.tail_shift() + (m - q) + d);
    return shift_free(s.prefix()[m], d, sig);
  });
}

Term subst_with(const Term& t, const std::function<Term(std::size_t)>& s,
                const BindingSignature& sig) {
  return map_vars(t, sig, [&](std::size_t k, std::size_t d) {
    if (k < d) return Term::var(k);
    return shift_free(s(k - d), d, sig);
  });
}

Assignment compose(const Assignment& s, const Assignment& t, const BindingSignature& sig) {
  // Positions below q map through s's prefix. Past it, s(q + j) = Var(k + j)
  // lands on t(k + j): entries of t's prefix from index k, then t's tail.
  const std::size_t q = s.prefix().size();
  const std::size_t k = s.tail_shift();
  const std::size_t q2 = t.prefix().size();
  const std::size_t k2 = t.tail_shift();
  std::vector<Term> p;
  p.reserve(q + (q2 > k ? q2 - k : 0));
  for (const auto& e : s.prefix()) p.push_back(subst(e, t, sig));
  std::size_t shift = 0;
  if (k < q2) {
    for (std::size_t i = k; i < q2; ++i) p.push_back(t.prefix()[i]);
    shift = k2;
  } else {
    shift = k2 + (k - q2);
  }
  return Assignment(std::move(p), shift);
}

Term subst1(const Term& t, const Term& u, const BindingSignature& sig) {
  return subst(t, Assignment({u}, 0), sig);
}

}  // namespace dbsyn
