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

#include "dbsyn/named.h"

#include <cctype>
#include <map>
#include <unordered_map>

namespace dbsyn {

struct NamedTerm::Node {
  bool is_var = false;
  std::string name;
  std::vector<NamedArg> args;
};

NamedTerm NamedTerm::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->name = std::move(name);
  return NamedTerm(std::move(n));
}

NamedTerm NamedTerm::op(std::string name, std::vector<NamedArg> args) {
  auto n = std::make_shared<Node>();
  n->name = std::move(name);
  n->args = std::move(args);
  return NamedTerm(std::move(n));
}

bool NamedTerm::is_var() const { return node_->is_var; }
const std::string& NamedTerm::name() const { return node_->name; }
const std::vector<NamedArg>& NamedTerm::args() const { return node_->args; }

std::optional<std::size_t> NameSupply::index(std::string_view s) const {
  if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) return std::nullopt;
  auto digits = s.substr(prefix.size());
  // Canonical decimal only: "x01" is not a supply name.
  if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
  std::size_t v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

std::string binder_name(std::size_t i, const NameSupply& supply) {
  // Enumerates a..z, a1..z1, ... and skips supply-owned spellings.
  for (std::size_t k = 0;; ++k) {
    std::string s(1, static_cast<char>('a' + k % 26));
    if (k >= 26) s += std::to_string(k / 26);
    if (supply.index(s)) continue;
    if (i == 0) return s;
    --i;
  }
}

std::string fresh_binder(const std::set<std::string>& avoid, const NameSupply& supply) {
  for (std::size_t i = 0;; ++i) {
    std::string s = binder_name(i, supply);
    if (!avoid.count(s)) return s;
  }
}

namespace {

void collect_free(const NamedTerm& t, std::multiset<std::string>& bound,
                  std::set<std::string>& out) {
  if (t.is_var()) {
    if (!bound.count(t.name())) out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) {
    for (const auto& b : a.binders) bound.insert(b);
    collect_free(a.body, bound, out);
    for (const auto& b : a.binders) bound.erase(bound.find(b));
  }
}

using Scope = std::unordered_map<std::string, std::vector<std::size_t>>;

std::optional<std::size_t> lookup(const Scope& scope, const std::string& name) {
  auto it = scope.find(name);
  if (it == scope.end() || it->second.empty()) return std::nullopt;
  return it->second.back();
}

bool alpha_rec(const NamedTerm& a, const NamedTerm& b, Scope& sa, Scope& sb, std::size_t& level) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    auto la = lookup(sa, a.name());
    auto lb = lookup(sb, b.name());
    if (la || lb) return la == lb;
    return a.name() == b.name();
  }
  if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    const auto& x = a.args()[i];
    const auto& y = b.args()[i];
    if (x.binders.size() != y.binders.size()) return false;
    for (std::size_t j = 0; j < x.binders.size(); ++j) {
      sa[x.binders[j]].push_back(level);
      sb[y.binders[j]].push_back(level);
      ++level;
    }
    const bool ok = alpha_rec(x.body, y.body, sa, sb, level);
    for (std::size_t j = 0; j < x.binders.size(); ++j) {
      sa[x.binders[j]].pop_back();
      sb[y.binders[j]].pop_back();
    }
    if (!ok) return false;
  }
  return true;
}

// env maps every free name of the current subterm to its replacement.
NamedTerm subst_rec(const NamedTerm& t, const std::map<std::string, NamedTerm>& env,
                    const NameSupply& supply) {
  if (t.is_var()) {
    auto it = env.find(t.name());
    return it == env.end() ? t : it->second;
  }
  std::vector<NamedArg> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) {
    if (a.binders.empty()) {
      args.push_back(NamedArg{{}, subst_rec(a.body, env, supply)});
      continue;
    }
    std::set<std::string> bound(a.binders.begin(), a.binders.end());
    std::set<std::string> avoid;
    for (const auto& y : free_names(a.body)) {
      if (bound.count(y)) continue;
      auto it = env.find(y);
      if (it == env.end()) {
        avoid.insert(y);
      } else {
        auto fv = free_names(it->second);
        avoid.insert(fv.begin(), fv.end());
      }
    }
    std::map<std::string, NamedTerm> inner = env;
    std::vector<std::string> fresh;
    for (const auto& b : a.binders) {
      std::string c = fresh_binder(avoid, supply);
      avoid.insert(c);
      inner.insert_or_assign(b, NamedTerm::variable(c));
      fresh.push_back(std::move(c));
    }
    args.push_back(NamedArg{std::move(fresh), subst_rec(a.body, inner, supply)});
  }
  return NamedTerm::op(t.name(), std::move(args));
}

}  // namespace

std::set<std::string> free_names(const NamedTerm& t) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(t, bound, out);
  return out;
}

bool alpha_equal(const NamedTerm& a, const NamedTerm& b) {
  Scope sa, sb;
  std::size_t level = 0;
  return alpha_rec(a, b, sa, sb, level);
}

NamedTerm named_subst(const NamedTerm& t, const std::function<NamedTerm(std::size_t)>& s,
                      const NameSupply& supply) {
  std::map<std::string, NamedTerm> env;
  for (const auto& y : free_names(t)) {
    if (auto n = supply.index(y)) env.emplace(y, s(*n));
  }
  return subst_rec(t, env, supply);
}

std::size_t named_size(const NamedTerm& t) {
  std::size_t n = 1;
  if (!t.is_var()) {
    for (const auto& a : t.args()) n += named_size(a.body);
  }
  return n;
}

}  // namespace dbsyn
