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

#include "ston/encoder.h"

#include <algorithm>
#include <array>
#include <utility>

#include "ston/morphology.h"

namespace ston {

namespace en = english;

namespace {

struct PrepositionEntry {
  std::string_view word;
  AdpositionType type;
};

// Inverse of the realizer's surface map. "under" is UND, "below" is BLW.
constexpr std::array<PrepositionEntry, 21> kPrepositionTable = {{
    {"from", AdpositionType::kFrom},       {"in", AdpositionType::kIn},
    {"at", AdpositionType::kIn},           {"since", AdpositionType::kSince},
    {"to", AdpositionType::kTo},           {"for", AdpositionType::kFor},
    {"before", AdpositionType::kBefore},   {"after", AdpositionType::kAfter},
    {"by", AdpositionType::kBy},           {"inside", AdpositionType::kInside},
    {"outside", AdpositionType::kOutside}, {"below", AdpositionType::kBelow},
    {"above", AdpositionType::kAbove},     {"between", AdpositionType::kBetween},
    {"through", AdpositionType::kThrough}, {"about", AdpositionType::kOn},
    {"with", AdpositionType::kWith},       {"of", AdpositionType::kOf},
    {"as", AdpositionType::kAs},           {"under", AdpositionType::kUnder},
    {"on", AdpositionType::kOn},
}};

bool IsDeterminer(std::string_view w) { return w == "the" || w == "a" || w == "an"; }

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text, SentenceType *type) {
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r' || text.back() == '\n')) {
    text.remove_suffix(1);
  }
  *type = SentenceType::kAffirmation;
  if (!text.empty()) {
    if (text.back() == '?') *type = SentenceType::kQuestion;
    if (text.back() == '!') *type = SentenceType::kExclamation;
    if (text.back() == '.' || text.back() == '?' || text.back() == '!') {
      text.remove_suffix(1);
    }
  }
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > start) tokens.push_back(Lower(text.substr(start, i - start)));
  }
  return tokens;
}

// A noun phrase span [begin, end) with an optional leading determiner.
struct Phrase {
  bool defined = false;
  std::vector<std::string> adjectives;
  std::string noun;
};

std::optional<Phrase> SplitPhrase(const std::vector<std::string> &tokens,
                                  size_t begin, size_t end, bool allow_adjectives) {
  Phrase p;
  if (begin < end && IsDeterminer(tokens[begin])) {
    p.defined = tokens[begin] == "the";
    ++begin;
  }
  if (begin >= end) return std::nullopt;
  for (size_t i = begin; i + 1 < end; ++i) {
    if (IsDeterminer(tokens[i]) || PrepositionToAdposition(tokens[i])) {
      return std::nullopt;
    }
    p.adjectives.push_back(tokens[i]);
  }
  if (!allow_adjectives && !p.adjectives.empty()) return std::nullopt;
  p.noun = tokens[end - 1];
  if (IsDeterminer(p.noun) || PrepositionToAdposition(p.noun)) return std::nullopt;
  return p;
}

struct VerbMatch {
  size_t index = 0;  // position of the main verb
  size_t begin = 0;  // first token of the verb group ("will" included)
  std::string lemma;
  Tense tense = Tense::kPresent;
};

// Candidate verb positions, left to right.
std::vector<VerbMatch> FindVerbs(const std::vector<std::string> &tokens,
                                 const Lexicon &lex) {
  std::vector<VerbMatch> out;
  for (size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i] == "will" && i + 1 < tokens.size() &&
        !lex.ReverseLookup("en", PartOfSpeech::kVerb, tokens[i + 1]).empty()) {
      out.push_back({i + 1, i, tokens[i + 1], Tense::kFuture});
    }
    for (const auto &a : en::AnalyzeVerb(tokens[i])) {
      if (lex.ReverseLookup("en", PartOfSpeech::kVerb, a.lemma).empty()) continue;
      Tense t = a.form == en::VerbForm::kPast ? Tense::kPast : Tense::kPresent;
      out.push_back({i, i, a.lemma, t});
      break;
    }
  }
  return out;
}

std::string IdentifierBase(std::string_view lemma) {
  std::string out;
  for (char c : Lower(lemma)) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    out.push_back(ok ? c : '_');
  }
  if (out.empty() || (out[0] >= '0' && out[0] <= '9')) out.insert(0, "w");
  return out;
}

// Resolves surface words to synsets, collecting notes.
class SenseResolver {
 public:
  SenseResolver(const Lexicon &lex, const EncodeOptions &options,
                EncodeResult *result)
      : lex_(lex), options_(options), result_(result) {}

  std::optional<uint32_t> Resolve(PartOfSpeech pos, const std::string &lemma,
                                  const std::string &token) {
    auto offsets = lex_.ReverseLookup("en", pos, lemma);
    if (offsets.empty()) {
      result_->errors.push_back({std::string(encode_error::kUnknownWord), token,
                                 "no lexicon entry for '" + token + "'"});
      return std::nullopt;
    }
    if (offsets.size() > 1) {
      EncodeNote note{std::string(encode_error::kAmbiguousSense), token,
                      "'" + token + "' has " + std::to_string(offsets.size()) +
                          " senses"};
      if (options_.strict_senses) {
        result_->errors.push_back(std::move(note));
        return std::nullopt;
      }
      note.message += "; using the lowest offset";
      result_->warnings.push_back(std::move(note));
    }
    return offsets.front();
  }

  // Returns (offset, plural) for a noun token.
  std::optional<std::pair<uint32_t, bool>> Noun(const std::string &token) {
    for (const auto &a : en::AnalyzeNoun(token)) {
      if (lex_.ReverseLookup("en", PartOfSpeech::kNoun, a.lemma).empty()) continue;
      auto offset = Resolve(PartOfSpeech::kNoun, a.lemma, token);
      if (!offset) return std::nullopt;
      lemma_ = a.lemma;
      return std::make_pair(*offset, a.plural);
    }
    Resolve(PartOfSpeech::kNoun, token, token);
    return std::nullopt;
  }

  const std::string &last_lemma() const { return lemma_; }

 private:
  const Lexicon &lex_;
  const EncodeOptions &options_;
  EncodeResult *result_;
  std::string lemma_;
};

}  // namespace

std::optional<AdpositionType> PrepositionToAdposition(std::string_view word) {
  for (const auto &e : kPrepositionTable) {
    if (e.word == word) return e.type;
  }
  return std::nullopt;
}

std::string Encoder::Allocate(const std::string &base, bool action) {
  for (int n = action ? 1 : 0;; ++n) {
    std::string id = n == 0 ? base : base + std::to_string(n);
    if (!action && n == 1) continue;
    if (used_.insert(id).second) return id;
  }
}

EncodeResult Encoder::Add(std::string_view sentence) {
  EncodeResult result;
  SentenceType type;
  std::vector<std::string> tokens = Tokenize(sentence, &type);
  auto mismatch = [&](const std::string &why) {
    result.errors.push_back(
        {std::string(encode_error::kPatternMismatch), "", why});
    return result;
  };
  if (tokens.empty()) return mismatch("empty sentence");

  auto candidates = FindVerbs(tokens, lex_);
  if (candidates.empty()) return mismatch("no known verb");
  std::optional<VerbMatch> verb;
  std::optional<Phrase> subject, object, oblique;
  AdpositionType adposition = AdpositionType::kIn;
  std::string failure;
  for (const auto &candidate : candidates) {
    subject = SplitPhrase(tokens, 0, candidate.begin, true);
    if (!subject) {
      failure = "subject is not [Det] Adj* Noun";
      continue;
    }
    size_t after = candidate.index + 1;
    size_t prep = after;
    while (prep < tokens.size() && !PrepositionToAdposition(tokens[prep])) ++prep;
    object = SplitPhrase(tokens, after, prep, true);
    if (!object) {
      failure = "object is not [Det] Adj* Noun";
      continue;
    }
    oblique.reset();
    if (prep < tokens.size()) {
      adposition = *PrepositionToAdposition(tokens[prep]);
      oblique = SplitPhrase(tokens, prep + 1, tokens.size(), false);
      if (!oblique) {
        failure = "prepositional object is not [Det] Noun";
        continue;
      }
    }
    verb = candidate;
    break;
  }
  if (!verb) return mismatch(failure);

  // Lexicon lookups last, so shape errors win over vocabulary errors.
  SenseResolver senses(lex_, options_, &result);
  struct Resolved {
    Role role;
    std::string lemma;
    bool ok = true;
  };
  auto resolve_phrase = [&](const Phrase &p) {
    Resolved r;
    r.role.defined = p.defined;
    for (const auto &adj : p.adjectives) {
      auto offset = senses.Resolve(PartOfSpeech::kAdjective, adj, adj);
      if (!offset) {
        r.ok = false;
        continue;
      }
      r.role.adjectives.push_back({{PartOfSpeech::kAdjective, *offset}, {}});
    }
    auto noun = senses.Noun(p.noun);
    if (!noun) {
      r.ok = false;
      return r;
    }
    r.lemma = senses.last_lemma();
    r.role.syn = SynsetRef{PartOfSpeech::kNoun, noun->first};
    if (noun->second) r.role.quantity = Quantity::Plural();
    return r;
  };
  Resolved subj = resolve_phrase(*subject);
  auto verb_offset = senses.Resolve(PartOfSpeech::kVerb, verb->lemma,
                                    tokens[verb->index]);
  Resolved obj = resolve_phrase(*object);
  std::optional<Resolved> obl;
  if (oblique) obl = resolve_phrase(*oblique);
  if (!subj.ok || !obj.ok || !verb_offset || (obl && !obl->ok)) {
    result.warnings.clear();
    return result;
  }

  // Commit: identifiers are only reserved once everything resolved.
  auto commit = [&](Resolved &r) {
    r.role.id = Identifier(Allocate(IdentifierBase(r.lemma), false));
    doc_.roles.push_back(r.role);
    return r.role.id;
  };
  Action action;
  action.syn = {PartOfSpeech::kVerb, *verb_offset};
  action.tense = verb->tense;
  action.agents = ReferenceGroups::Single({commit(subj)});
  action.themes = ReferenceGroups::Single({commit(obj)});
  if (obl) {
    action.adpositions.push_back(
        {adposition, ReferenceGroups::Single({commit(*obl)})});
  }
  action.id = Identifier(Allocate(IdentifierBase(verb->lemma), true));
  doc_.actions.push_back(action);
  doc_.sentences.push_back({type, {action.id}});
  result.document = doc_;
  return result;
}

EncodeResult Encode(std::string_view sentence, const Lexicon &lex,
                    const EncodeOptions &options) {
  Encoder encoder(lex, options);
  return encoder.Add(sentence);
}

}  // namespace ston
