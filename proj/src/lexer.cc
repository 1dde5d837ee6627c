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

#include "lexer.h"

#include <cctype>
#include <limits>

namespace dbsyn {

const char* describe(Tok t) {
  switch (t) {
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kComma: return "','";
    case Tok::kSemicolon: return "';'";
    case Tok::kColon: return "':'";
    case Tok::kCaret: return "'^'";
    case Tok::kQuestion: return "'?'";
    case Tok::kHash: return "'#'";
    case Tok::kEquals: return "'='";
    case Tok::kArrow: return "'->'";
    case Tok::kTurnstile: return "'|-'";
    case Tok::kNat: return "natural number";
    case Tok::kIdent: return "name";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.span = SourceSpan{i, i, line, col};
    std::size_t len = 1;
    switch (c) {
      case '(': t.kind = Tok::kLParen; break;
      case ')': t.kind = Tok::kRParen; break;
      case '[': t.kind = Tok::kLBracket; break;
      case ']': t.kind = Tok::kRBracket; break;
      case '{': t.kind = Tok::kLBrace; break;
      case '}': t.kind = Tok::kRBrace; break;
      case ',': t.kind = Tok::kComma; break;
      case ';': t.kind = Tok::kSemicolon; break;
      case ':': t.kind = Tok::kColon; break;
      case '^': t.kind = Tok::kCaret; break;
      case '?': t.kind = Tok::kQuestion; break;
      case '#': t.kind = Tok::kHash; break;
      case '=': t.kind = Tok::kEquals; break;
      default:
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
          t.kind = Tok::kArrow;
          len = 2;
        } else if (c == '|' && i + 1 < text.size() && text[i + 1] == '-') {
          t.kind = Tok::kTurnstile;
          len = 2;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
          t.kind = Tok::kNat;
          len = 0;
          while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) {
            ++len;
          }
        } else if (ident_start(c)) {
          t.kind = Tok::kIdent;
          len = 0;
          while (i + len < text.size() && ident_char(text[i + len])) ++len;
        } else {
          std::string shown = std::isprint(static_cast<unsigned char>(c))
                                  ? std::string(1, c)
                                  : "\\x" + std::to_string(static_cast<unsigned char>(c));
          throw Error(make_diagnostic(ErrorKind::kParse, "unexpected character '" + shown + "'",
                                      SourceSpan{i, i + 1, line, col}));
        }
    }
    t.text = std::string(text.substr(i, len));
    t.span.end = i + len;
    advance(len);
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::kEnd;
  end.span = SourceSpan{text.size(), text.size(), line, col};
  out.push_back(std::move(end));
  return out;
}

SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
  return SourceSpan{a.start, b.end, a.line, a.column};
}

const Token& TokenStream::peek(std::size_t ahead) const {
  return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
}

bool TokenStream::accept(Tok k) {
  if (!at(k)) return false;
  ++pos_;
  return true;
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < toks_.size() - 1) ++pos_;
  return t;
}

Token TokenStream::expect(Tok k, std::string_view what) {
  if (!at(k)) {
    const Token& t = peek();
    fail(t, "expected " + std::string(what) + ", found " +
                (t.kind == Tok::kEnd ? std::string("end of input") : "'" + t.text + "'"));
  }
  return next();
}

std::size_t TokenStream::expect_nat(std::string_view what) {
  Token t = expect(Tok::kNat, what);
  std::size_t v = 0;
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  for (char c : t.text) {
    const auto d = static_cast<std::size_t>(c - '0');
    if (v > (kMax - d) / 10) fail(t, "number '" + t.text + "' is too large");
    v = v * 10 + d;
  }
  return v;
}

void TokenStream::fail(const Token& at, const std::string& message) const {
  throw Error(make_diagnostic(ErrorKind::kParse, message, at.span));
}

void TokenStream::expect_end() {
  if (!at(Tok::kEnd)) {
    fail("unexpected '" + peek().text + "' after the end of the input");
  }
}

}  // namespace dbsyn
