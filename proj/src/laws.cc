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

#include "dbsyn/laws.h"

#include <sstream>

namespace dbsyn {

bool LawReport::passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

const LawResult* LawReport::find(const std::string& law) const {
  for (const auto& r : results) {
    if (r.law == law) return &r;
  }
  return nullptr;
}

void LawReport::append(const LawReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

std::string LawReport::to_string() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << "LAW " << r.law << (r.passed ? " PASS" : " FAIL") << " seed=" << seed;
    if (r.passed) {
      os << " case=" << r.cases;
    } else {
      os << " case=" << *r.first_failure << " counterexample=" << r.counterexample;
    }
    os << "\n";
  }
  return os.str();
}

bool operator==(const LawResult& a, const LawResult& b) {
  return a.law == b.law && a.passed == b.passed && a.cases == b.cases &&
         a.failures == b.failures && a.first_failure == b.first_failure &&
         a.counterexample == b.counterexample;
}

bool operator==(const LawReport& a, const LawReport& b) {
  return a.seed == b.seed && a.results == b.results;
}

}  // namespace dbsyn
