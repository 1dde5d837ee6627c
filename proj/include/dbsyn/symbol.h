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

#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace dbsyn {

/// An interned identifier. Two symbols compare equal iff their spellings do;
/// comparison is a pointer test.
class Symbol {
 public:
  Symbol() : Symbol(intern("")) {}
  explicit Symbol(std::string_view s) : Symbol(intern(s)) {}

  static Symbol intern(std::string_view s);

  const std::string& str() const { return *p_; }
  bool empty() const { return p_->empty(); }

  friend bool operator==(Symbol a, Symbol b) { return a.p_ == b.p_; }
  // Orders by spelling, so containers keyed by Symbol iterate deterministically.
  friend bool operator<(Symbol a, Symbol b) { return *a.p_ < *b.p_; }

  std::size_t hash() const { return std::hash<const void*>{}(p_); }

 private:
  struct Raw {};
  Symbol(Raw, const std::string* p) : p_(p) {}
  const std::string* p_;
};

inline std::ostream& operator<<(std::ostream& os, Symbol s) { return os << s.str(); }

}  // namespace dbsyn

template <>
struct std::hash<dbsyn::Symbol> {
  std::size_t operator()(dbsyn::Symbol s) const { return s.hash(); }
};
