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
#include <span>
#include <vector>

#include "dbsyn/model.h"
#include "dbsyn/named.h"
#include "dbsyn/rng.h"
#include "dbsyn/signature.h"
#include "dbsyn/subst.h"
#include "dbsyn/term.h"

namespace dbsyn {

/// Sampling bounds used by the law checkers.
struct GenConfig {
  std::size_t max_depth = 8;
  std::size_t free_range = 4;  // free indices drawn from [0, free_range)
  std::size_t max_prefix = 4;
  std::size_t max_shift = 3;
  std::size_t entry_depth = 3;  // depth of assignment entries
};

/// Random well-formed term of depth <= max_depth. Variable indices are drawn
/// below (enclosing binders + free_range), mixing bound and free occurrences.
Term random_term(Rng& rng, const BindingSignature& sig, std::size_t max_depth,
                 std::size_t free_range);
Assignment random_assignment(Rng& rng, const BindingSignature& sig, const GenConfig& cfg);
Renaming random_renaming(Rng& rng, const GenConfig& cfg);

/// Random named term. Binders are drawn from a small pool that includes
/// supply names, so shadowing and capture situations are frequent.
NamedTerm random_named_term(Rng& rng, const BindingSignature& sig, std::size_t max_depth,
                            const NameSupply& supply = {});

/// Smaller candidates: Var 0, each direct argument, and each argument
/// replaced by Var 0.
std::vector<Term> shrink_term(const Term& t);

/// Every term of depth <= max_depth whose variable indices are < index_bound,
/// in a fixed order.
std::vector<Term> enumerate_terms(const BindingSignature& sig, std::size_t max_depth,
                                  std::size_t index_bound);

/// Every distinct canonical assignment with prefix drawn from `pool`, prefix
/// length <= max_prefix and tail shift <= max_shift.
std::vector<Assignment> enumerate_assignments(std::span<const Term> pool, std::size_t max_prefix,
                                              std::size_t max_shift);

Sampler<Term> term_sampler(const BindingSignature& sig, const GenConfig& cfg = {});
Sampler<NamedTerm> named_sampler(const BindingSignature& sig, const GenConfig& cfg = {},
                                 const NameSupply& supply = {});
Sampler<std::size_t> nat_sampler();

}  // namespace dbsyn
