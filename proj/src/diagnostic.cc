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

#include "dbsyn/diagnostic.h"

#include <sstream>

namespace dbsyn {

namespace {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kType: return "type";
    case ErrorKind::kBinding: return "binding";
    case ErrorKind::kArgument: return "argument";
  }
  return "error";
}

}  // namespace

std::string Diagnostic::to_string() const {
  std::ostringstream os;
  if (span) os << span->line << ":" << span->column << ": ";
  os << (severity == Severity::kError ? "error" : "warning") << " [" << kind_name(kind)
     << "]: " << message;
  if (path) {
    os << " (at path /";
    for (std::size_t i = 0; i < path->size(); ++i) {
      if (i) os << "/";
      os << (*path)[i];
    }
    os << ")";
  }
  return os.str();
}

Diagnostic make_diagnostic(ErrorKind kind, std::string message,
                           std::optional<SourceSpan> span,
                           std::optional<std::vector<std::size_t>> path) {
  Diagnostic d;
  d.kind = kind;
  d.message = message.empty() ? "unspecified error" : std::move(message);
  d.span = span;
  d.path = std::move(path);
  return d;
}

Error::Error(Diagnostics diagnostics)
    : std::runtime_error(format_diagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {
  if (diagnostics_.empty()) diagnostics_.push_back(make_diagnostic(ErrorKind::kArgument, ""));
}

std::string format_diagnostics(const Diagnostics& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += "\n";
    out += d.to_string();
  }
  return out;
}

}  // namespace dbsyn
