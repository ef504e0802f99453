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

// Deterministic English surface realization.
//
// Each sentence block becomes one line of text. Roles are rendered as noun
// phrases (determiner, quantity, adjectives, head, adpositional phrases,
// relative clauses), actions as clauses (subject, verb group, object,
// comparison, adverbs, adpositional phrases, adverbial clauses). Actions
// without agents are rendered in the passive voice with the theme as subject.

#ifndef STON_REALIZER_H_
#define STON_REALIZER_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ston/lexicon.h"
#include "ston/model.h"

namespace ston {

class SynsetNotFound : public std::runtime_error {
 public:
  SynsetNotFound(std::string_view lang, SynsetRef synset);

  const SynsetRef &synset() const { return synset_; }

 private:
  SynsetRef synset_;
};

struct RealizeError {
  enum class Kind { kInvalidDocument, kSynsetNotFound, kUnsupportedLanguage };

  Kind kind;
  std::optional<size_t> sentence;  // index of the failed sentence
  std::optional<SynsetRef> synset;
  std::string message;
};

struct RealizeResult {
  std::string text;  // one line per realized sentence, '\n'-terminated
  std::vector<RealizeError> errors;

  bool ok() const { return errors.empty(); }
};

// Realizes every sentence. A missing synset aborts only its own sentence;
// documents with validator ERRORs are rejected before any output.
RealizeResult RealizeDocument(const Document &doc, const Lexicon &lex,
                              std::string_view lang = "en");

enum class GrammaticalCase { kSubject, kObject };

// Subject agreement for finite verbs.
enum class Agreement { kFirstSingular, kThirdSingular, kPlural };

// The building blocks below throw SynsetNotFound.

// Modal/auxiliaries, negation and the main verb, e.g. {"did", "not", "eat"}.
// Agents absent selects the passive.
std::vector<std::string> RealizeVerbGroup(
    const Action &action, const Lexicon &lex,
    Agreement agreement = Agreement::kThirdSingular);

std::vector<std::string> RealizeRole(const Document &doc, const Role &role,
                                     const Lexicon &lex, GrammaticalCase gcase);

// Comparison, adpositional and adverbial fragments of an action, in clause
// order.
std::vector<std::vector<std::string>> RealizeLinks(const Document &doc,
                                                   const Action &action,
                                                   const Lexicon &lex);

// A single adpositional phrase, e.g. {"of", "the", "tree"}.
std::vector<std::string> RealizeAdposition(const Document &doc,
                                           const AdpositionLink &link,
                                           const Lexicon &lex);

std::string JoinWords(const std::vector<std::string> &words);

}  // namespace ston

#endif  // STON_REALIZER_H_
