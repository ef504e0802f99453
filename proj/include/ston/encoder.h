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

// Pattern-limited English to STON encoder.
//
// Recognizes simple clauses of the shape
//
//   [Det] Adj* Noun Verb [Det] Adj* Noun [Prep [Det] Noun]
//
// with the verb optionally preceded by "will". Every content word must be
// known to the lexicon. Anything else is reported as a mismatch rather than
// guessed at.

#ifndef STON_ENCODER_H_
#define STON_ENCODER_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ston/lexicon.h"
#include "ston/model.h"

namespace ston {

namespace encode_error {
inline constexpr std::string_view kPatternMismatch = "PATTERN_MISMATCH";
inline constexpr std::string_view kUnknownWord = "UNKNOWN_WORD";
inline constexpr std::string_view kAmbiguousSense = "AMBIGUOUS_SENSE";
}  // namespace encode_error

struct EncodeNote {
  std::string code;   // one of encode_error::k*
  std::string token;  // offending word, empty for pattern mismatches
  std::string message;
};

struct EncodeOptions {
  // Treat multiple candidate senses as an error instead of picking the
  // lowest offset.
  bool strict_senses = false;
};

struct EncodeResult {
  std::optional<Document> document;
  std::vector<EncodeNote> errors;
  std::vector<EncodeNote> warnings;  // sense tie-breaks

  bool ok() const { return document.has_value(); }
};

// Encodes a single sentence into a one-sentence document.
EncodeResult Encode(std::string_view sentence, const Lexicon &lex,
                    const EncodeOptions &options = {});

// Accumulates several sentences into one document with unique identifiers.
class Encoder {
 public:
  explicit Encoder(const Lexicon &lex, EncodeOptions options = {})
      : lex_(lex), options_(options) {}

  // On failure the document is left unchanged and the notes are returned.
  EncodeResult Add(std::string_view sentence);

  const Document &document() const { return doc_; }

 private:
  std::string Allocate(const std::string &base, bool action);

  const Lexicon &lex_;
  EncodeOptions options_;
  Document doc_;
  std::set<std::string> used_;
};

// Surface preposition for an adpositional code and back. "at" also maps to
// IN on input.
std::optional<AdpositionType> PrepositionToAdposition(std::string_view word);

}  // namespace ston

#endif  // STON_ENCODER_H_
