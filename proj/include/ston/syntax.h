// Copyright 2026 The STON Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Tokenizer and recursive-descent parser for STON text.
//
//   document   = "@ston" roles actions sentences "@end" ;
//   roles      = "@roles"    { "r" ":" "{" { attr } "}" } ;
//   actions    = "@actions"  { "a" ":" "{" { attr } "}" } ;
//   sentences  = "@sentences" { "s" ":" "{" { attr } "}" } ;
//   attr       = key ":" ( "{" { attr } "}" | value ";" ) ;
//   value      = scalar | "[" group { "|" group } "]" ;
//   group      = scalar { "," scalar } ;
//   scalar     = IDENT | NUMBER ;
//
// '#' starts a comment that runs to the end of the line.

#ifndef STON_SYNTAX_H_
#define STON_SYNTAX_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ston/model.h"

namespace ston {

struct SourceLocation {
  int line = 1;       // 1-based
  int column = 1;     // 1-based, in bytes
  size_t offset = 0;  // 0-based byte offset

  friend bool operator==(const SourceLocation &,
                         const SourceLocation &) = default;
};

// Stable error codes of the parser.
namespace parse_error {
inline constexpr std::string_view kUnexpectedChar = "UNEXPECTED_CHAR";
inline constexpr std::string_view kUnexpectedToken = "UNEXPECTED_TOKEN";
inline constexpr std::string_view kUnknownKey = "UNKNOWN_KEY";
inline constexpr std::string_view kUnknownCode = "UNKNOWN_CODE";
inline constexpr std::string_view kDuplicateKey = "DUPLICATE_KEY";
inline constexpr std::string_view kMissingSection = "MISSING_SECTION";
inline constexpr std::string_view kMissingKey = "MISSING_KEY";
inline constexpr std::string_view kInvalidValue = "INVALID_VALUE";
}  // namespace parse_error

struct ParseError {
  SourceLocation location;
  std::string code;
  std::string message;
  std::vector<std::string> expected;  // token classes, when known

  // "line:col: CODE: message"
  std::string ToString() const;
};

enum class TokenKind {
  kSection,  // @ston @roles @actions @sentences @end
  kIdent,
  kNumber,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kColon,
  kSemicolon,
  kComma,
  kPipe,
  kEnd,  // end of input, only produced by the parser's token stream
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string_view lexeme;  // points into the tokenized text
  SourceLocation location;
};

struct TokenizeResult {
  std::vector<Token> tokens;
  std::vector<ParseError> errors;  // UNEXPECTED_CHAR; offending bytes skipped
};

// Splits text into tokens. Lexemes reference `text`, which must outlive the
// result.
TokenizeResult Tokenize(std::string_view text);

struct ParseResult {
  std::optional<Document> document;  // set iff errors is empty
  std::vector<ParseError> errors;

  bool ok() const { return document.has_value(); }
};

// Parses a complete STON document. Never throws on malformed input; errors
// are collected with recovery at the next ';' or '}'.
ParseResult Parse(std::string_view text);

// Parses many texts. ParseAll runs the texts in parallel; ParseAllSerial is
// the single-threaded reference. Both return results in input order.
std::vector<ParseResult> ParseAll(std::span<const std::string> texts);
std::vector<ParseResult> ParseAllSerial(std::span<const std::string> texts);

}  // namespace ston

#endif  // STON_SYNTAX_H_
