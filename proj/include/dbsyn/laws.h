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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dbsyn/parallel.h"
#include "dbsyn/rng.h"

namespace dbsyn {

/// Sampling budget for the law checkers.
struct LawConfig {
  std::size_t cases = 1000;
  std::uint64_t seed = 0;
  Execution exec = Execution::kParallel;
};

struct LawResult {
  std::string law;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::size_t> first_failure;  // case index
  std::string counterexample;                // shrunk, printed
};

struct LawReport {
  std::uint64_t seed = 0;
  std::vector<LawResult> results;

  bool passed() const;
  const LawResult* find(const std::string& law) const;
  void append(const LawReport& other);

  /// One line per law:
  ///   LAW <name> PASS seed=<s> case=<cases checked>
  ///   LAW <name> FAIL seed=<s> case=<first failing index> counterexample=<text>
  std::string to_string() const;

  friend bool operator==(const LawReport&, const LawReport&);
};

bool operator==(const LawResult& a, const LawResult& b);

template <class Case>
struct Law {
  std::string name;
  std::function<bool(const Case&)> holds;
};

/// Hooks for reporting a failing case; both optional.
template <class Case>
struct CaseTools {
  std::function<std::string(const Case&)> show;
  std::function<std::vector<Case>(const Case&)> shrink;
};

namespace detail {

template <class Case>
bool holds_safely(const Law<Case>& law, const Case& c) {
  try {
    return law.holds(c);
  } catch (...) {
    return false;
  }
}

template <class Case>
Case shrink_failure(const Law<Case>& law, Case cur, const CaseTools<Case>& tools) {
  if (!tools.shrink) return cur;
  for (int round = 0; round < 1000; ++round) {
    bool progressed = false;
    for (auto& cand : tools.shrink(cur)) {
      if (!holds_safely(law, cand)) {
        cur = std::move(cand);
        progressed = true;
        break;
      }
    }
    if (!progressed) break;
  }
  return cur;
}

}  // namespace detail

/// Evaluates every law on cases 0..n-1 produced by case_at(i). Case
/// generation and checking are sharded per index; the report is merged in
/// index order, so serial and parallel runs produce identical reports.
template <class Case>
LawReport run_laws_over(const std::vector<Law<Case>>& laws, std::size_t n,
                        const std::function<Case(std::size_t)>& case_at,
                        const CaseTools<Case>& tools, Execution exec, std::uint64_t seed = 0) {
  const std::size_t width = laws.size();
  std::vector<char> ok(n * width, 1);
  for_each_case(n, exec, [&](std::size_t i) {
    const Case c = case_at(i);
    for (std::size_t l = 0; l < width; ++l) ok[i * width + l] = detail::holds_safely(laws[l], c);
  });

  LawReport report;
  report.seed = seed;
  for (std::size_t l = 0; l < width; ++l) {
    LawResult r;
    r.law = laws[l].name;
    r.cases = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (ok[i * width + l]) continue;
      ++r.failures;
      if (!r.first_failure) r.first_failure = i;
    }
    r.passed = r.failures == 0;
    if (!r.passed) {
      Case shrunk = detail::shrink_failure(laws[l], case_at(*r.first_failure), tools);
      r.counterexample = tools.show ? tools.show(shrunk) : std::string("<unprintable>");
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

/// Random cases: case i is draw(case_rng(seed, i)).
template <class Case>
LawReport run_laws(const std::vector<Law<Case>>& laws, const std::function<Case(Rng&)>& draw,
                   const CaseTools<Case>& tools, const LawConfig& cfg) {
  std::function<Case(std::size_t)> at = [&](std::size_t i) {
    Rng rng = case_rng(cfg.seed, i);
    return draw(rng);
  };
  return run_laws_over(laws, cfg.cases, at, tools, cfg.exec, cfg.seed);
}

}  // namespace dbsyn
