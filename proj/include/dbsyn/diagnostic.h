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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dbsyn {

struct SourceSpan {
  std::size_t start = 0;  // byte offsets, start <= end
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class Severity { kError, kWarning };

/// What went wrong, used by the CLI to pick an exit code.
enum class ErrorKind {
  kParse,       // lexical or syntactic
  kValidation,  // well-formedness, arity, signature/theory consistency
  kType,        // typing judgement failed
  kBinding,     // unbound name during named->nameless conversion
  kArgument,    // bad argument to a library call
};

struct Diagnostic {
  Severity severity = Severity::kError;
  ErrorKind kind = ErrorKind::kValidation;
  std::string message;
  std::optional<SourceSpan> span;
  // Child positions from the root to the offending node, when the
  // diagnostic is about a term.
  std::optional<std::vector<std::size_t>> path;

  std::string to_string() const;
};

using Diagnostics = std::vector<Diagnostic>;

Diagnostic make_diagnostic(ErrorKind kind, std::string message,
                           std::optional<SourceSpan> span = std::nullopt,
                           std::optional<std::vector<std::size_t>> path = std::nullopt);

/// Thrown by operations that return a value or fail with diagnostics.
class Error : public std::runtime_error {
 public:
  explicit Error(Diagnostics diagnostics);
  explicit Error(Diagnostic diagnostic) : Error(Diagnostics{std::move(diagnostic)}) {}
  Error(ErrorKind kind, std::string message)
      : Error(make_diagnostic(kind, std::move(message))) {}

  const Diagnostics& diagnostics() const { return diagnostics_; }
  ErrorKind kind() const { return diagnostics_.front().kind; }

 private:
  Diagnostics diagnostics_;
};

std::string format_diagnostics(const Diagnostics& ds);

}  // namespace dbsyn
