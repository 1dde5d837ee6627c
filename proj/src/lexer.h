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
#include <string>
#include <string_view>
#include <vector>

#include "dbsyn/diagnostic.h"

namespace dbsyn {

enum class Tok {
  kLParen, kRParen, kLBracket, kRBracket, kLBrace, kRBrace,
  kComma, kSemicolon, kColon, kCaret, kQuestion, kHash, kEquals,
  kArrow,      // ->
  kTurnstile,  // |-
  kNat,
  kIdent,
  kEnd,
};

const char* describe(Tok t);

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourceSpan span;
};

/// Splits text into tokens; `//` starts a comment that runs to the end of
/// the line. Throws Error(kParse) on an unexpected character.
std::vector<Token> tokenize(std::string_view text);

SourceSpan join(const SourceSpan& a, const SourceSpan& b);

class TokenStream {
 public:
  explicit TokenStream(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const;
  bool at(Tok k) const { return peek().kind == k; }
  bool accept(Tok k);
  Token next();
  Token expect(Tok k, std::string_view what);
  std::size_t expect_nat(std::string_view what);

  [[noreturn]] void fail(const Token& at, const std::string& message) const;
  [[noreturn]] void fail(const std::string& message) const { fail(peek(), message); }
  void expect_end();

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace dbsyn
