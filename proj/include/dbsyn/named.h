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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dbsyn {

struct NamedArg;

/// Term with named variables; each operation argument carries the list of
/// names it binds. Equality of interest is alpha-equivalence (alpha_equal);
/// operator== is not provided on purpose.
class NamedTerm {
 public:
  static NamedTerm variable(std::string name);
  static NamedTerm op(std::string name, std::vector<NamedArg> args);

  bool is_var() const;
  const std::string& name() const;  // variable name or operation name
  const std::vector<NamedArg>& args() const;

 private:
  struct Node;
  explicit NamedTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct NamedArg {
  // Rightmost name is the innermost binder (De Bruijn index 0).
  std::vector<std::string> binders;
  NamedTerm body;
};

/// Free variable n is written prefix + decimal(n), e.g. x0, x17.
struct NameSupply {
  std::string prefix = "x";

  std::string name(std::size_t n) const { return prefix + std::to_string(n); }
  std::optional<std::size_t> index(std::string_view s) const;
};

/// i-th candidate binder name: a, b, ..., z, a1, b1, ...; names owned by
/// `supply` are skipped.
std::string binder_name(std::size_t i, const NameSupply& supply);

/// First binder name not in `avoid`.
std::string fresh_binder(const std::set<std::string>& avoid, const NameSupply& supply);

std::set<std::string> free_names(const NamedTerm& t);

/// Equality up to consistent renaming of bound names.
bool alpha_equal(const NamedTerm& a, const NamedTerm& b);

/// Simultaneous capture-avoiding substitution. A free occurrence of the
/// supply name for n is replaced by s(n); other free names are left alone.
/// Every binder is renamed to the first binder name not free in the images
/// of the argument's free variables, so output names are deterministic.
NamedTerm named_subst(const NamedTerm& t, const std::function<NamedTerm(std::size_t)>& s,
                      const NameSupply& supply = {});

std::size_t named_size(const NamedTerm& t);

}  // namespace dbsyn
