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
#include <vector>

#include "dbsyn/signature.h"
#include "dbsyn/term.h"

namespace dbsyn {

/// f(i) = prefix[i] for i < q, f(q + j) = tail_shift + j.
/// Constructed values are canonical: the prefix never ends with an entry the
/// tail would reproduce, so equal denotations have equal representations.
class Renaming {
 public:
  Renaming() = default;  // identity
  Renaming(std::vector<std::size_t> prefix, std::size_t tail_shift);

  static Renaming identity() { return Renaming(); }
  static Renaming shift(std::size_t k) { return Renaming({}, k); }

  std::size_t operator()(std::size_t n) const;
  const std::vector<std::size_t>& prefix() const { return prefix_; }
  std::size_t tail_shift() const { return tail_shift_; }

  friend bool operator==(const Renaming&, const Renaming&) = default;

 private:
  std::vector<std::size_t> prefix_;
  std::size_t tail_shift_ = 0;
};

/// sigma(i) = prefix[i] for i < q, sigma(q + j) = Var(tail_shift + j).
/// Canonical on construction, like Renaming.
class Assignment {
 public:
  Assignment() = default;  // identity (the variables map)
  Assignment(std::vector<Term> prefix, std::size_t tail_shift);

  static Assignment identity() { return Assignment(); }
  static Assignment shift(std::size_t k) { return Assignment({}, k); }
  static Assignment from_renaming(const Renaming& f);

  Term operator()(std::size_t n) const;
  const std::vector<Term>& prefix() const { return prefix_; }
  std::size_t tail_shift() const { return tail_shift_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Term> prefix_;
  std::size_t tail_shift_ = 0;
};

inline std::size_t apply_renaming(const Renaming& f, std::size_t n) { return f(n); }
inline Term apply_assignment(const Assignment& s, std::size_t n) { return s(n); }

/// (lift f)(0) = 0, (lift f)(n + 1) = f(n) + 1.
Renaming lift_renaming(const Renaming& f);
Renaming lift_renaming_n(const Renaming& f, std::size_t n);

/// Var(n) -> Var(f(n)); argument i of an operation is renamed under f lifted
/// n_i times.
Term rename(const Term& t, const Renaming& f, const BindingSignature& sig);

/// rename(t, shift k): adds k to every free index.
Term shift_free(const Term& t, std::size_t k, const BindingSignature& sig);

/// (lift s)(0) = Var 0, (lift s)(n + 1) = rename(s(n), shift 1).
Assignment lift(const Assignment& s, const BindingSignature& sig);
/// n-fold iterate of lift.
Assignment lift_n(const Assignment& s, std::size_t n, const BindingSignature& sig);

/// Capture-avoiding parallel substitution: Var(n) -> s(n); argument i of an
/// operation is substituted under lift_n(s, n_i).
///
/// Implemented in one pass that tracks the binder depth d: an index k < d is
/// bound and kept, otherwise the result is s(k - d) shifted by d, which is
/// exactly lift_n(s, d)(k) with the lifts left implicit.
Term subst(const Term& t, const Assignment& s, const BindingSignature& sig);

/// Same as subst, for an assignment given as an arbitrary function.
Term subst_with(const Term& t, const std::function<Term(std::size_t)>& s,
                const BindingSignature& sig);

/// n -> subst(s(n), t), canonicalized.
Assignment compose(const Assignment& s, const Assignment& t, const BindingSignature& sig);

/// t[u . id], where (u . id)(0) = u and (u . id)(n + 1) = Var(n).
Term subst1(const Term& t, const Term& u, const BindingSignature& sig);

}  // namespace dbsyn
