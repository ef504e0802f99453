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

// Language-neutral document model for STON (SenTences Object Notation).
//
// A document is three ordered lists: roles (nominal phrases), actions (verbs)
// and sentences (typed lists of action references). Roles and actions share a
// single identifier namespace and reference each other freely, so the model
// stores references by identifier and leaves resolution to the validator.
// All types are plain values; equality is structural.

#ifndef STON_MODEL_H_
#define STON_MODEL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ston {

// Name of a role or action. Case-sensitive; valid names match
// [A-Za-z_][A-Za-z0-9_]*.
class Identifier {
 public:
  Identifier() = default;
  explicit Identifier(std::string text) : text_(std::move(text)) {}

  const std::string &str() const { return text_; }
  bool valid() const { return IsValid(text_); }

  static bool IsValid(std::string_view text);

  friend bool operator==(const Identifier &, const Identifier &) = default;
  friend auto operator<=>(const Identifier &, const Identifier &) = default;

 private:
  std::string text_;
};

enum class PartOfSpeech { kNoun, kVerb, kAdjective, kAdverb };

// Largest offset a synset reference may carry (eight decimal digits).
inline constexpr uint32_t kMaxSynsetOffset = 99999999;

// Lexicon concept. The part of speech is never written in STON text; it is
// implied by where the reference appears.
struct SynsetRef {
  PartOfSpeech pos = PartOfSpeech::kNoun;
  uint32_t offset = 0;

  friend bool operator==(const SynsetRef &, const SynsetRef &) = default;
  friend auto operator<=>(const SynsetRef &, const SynsetRef &) = default;
};

// Amount of a noun: "3", "O2" (second) or "PL".
struct Quantity {
  enum class Kind { kCardinal, kOrdinal, kPlural };

  Kind kind = Kind::kCardinal;
  uint32_t value = 1;  // 0 for kPlural

  static Quantity Cardinal(uint32_t n) { return {Kind::kCardinal, n}; }
  static Quantity Ordinal(uint32_t n) { return {Kind::kOrdinal, n}; }
  static Quantity Plural() { return {Kind::kPlural, 0}; }

  bool is_default() const { return kind == Kind::kCardinal && value == 1; }

  friend bool operator==(const Quantity &, const Quantity &) = default;
};

class InvalidQuantity : public std::invalid_argument {
 public:
  explicit InvalidQuantity(const std::string &text)
      : std::invalid_argument("invalid quantity '" + text + "'") {}
};

// Parses "PL", "O<n>" or "<n>" with n >= 1. Throws InvalidQuantity.
Quantity ParseQuantity(std::string_view text);
std::string FormatQuantity(const Quantity &q);

// Pronoun features, each stored as the letter used in the 6-character code.
enum class PronounKind : char {
  kDemonstrative = 'D',
  kSubjective = 'S',
  kObjective = 'O',
  kPossessive = 'P',
};
enum class Person : char { kFirst = 'F', kSecond = 'S', kThird = 'T' };
enum class GrammaticalNumber : char {
  kSingular = 'S',
  kDual = 'D',
  kPlural = 'P',
  kUndefined = 'N',
};
enum class Gender : char { kFemale = 'F', kMale = 'M', kNeuter = 'N' };
enum class Formality : char {
  kRude = 'R',
  kCasual = 'C',
  kFormal = 'F',
  kPolite = 'P',
};
enum class Proximity : char {
  kDistal = 'D',
  kMedial = 'M',
  kProximal = 'P',
  kUndefined = 'N',
};

struct Pronoun {
  PronounKind kind = PronounKind::kSubjective;
  Person person = Person::kThird;
  GrammaticalNumber number = GrammaticalNumber::kSingular;
  Gender gender = Gender::kNeuter;
  Formality formality = Formality::kFormal;
  Proximity proximity = Proximity::kUndefined;
  std::vector<Identifier> refs;  // antecedent roles, possibly empty

  friend bool operator==(const Pronoun &, const Pronoun &) = default;
};

class InvalidPronounCode : public std::invalid_argument {
 public:
  // position is 1-based; 0 means the code has the wrong length.
  InvalidPronounCode(int position, char character);

  int position() const { return position_; }
  char character() const { return character_; }

 private:
  int position_;
  char character_;
};

// Decodes a 6-character pronoun code such as "PTSMFN". The result has no refs.
Pronoun DecodePronoun(std::string_view code);
std::string EncodePronoun(const Pronoun &p);

// Adpositional relations, in their canonical order.
enum class AdpositionType {
  kAgo, kFrom, kIn, kSince, kTo, kFor, kBefore, kAfter, kBy, kInside,
  kOutside, kBelow, kAbove, kBetween, kThrough, kOn, kWith, kOf, kAs, kUnder,
};
inline constexpr int kNumAdpositionTypes = 20;

enum class AdverbialType {
  kWhen, kWhile, kWhere, kIf, kSo, kBecause, kThough, kLike, kAfter, kBefore,
};
inline constexpr int kNumAdverbialTypes = 10;

enum class RelativeBase { kSubject, kPossessive, kObject, kReason, kIndirect };

struct RelativeType {
  RelativeBase base = RelativeBase::kSubject;
  AdpositionType adposition = AdpositionType::kAgo;  // meaningful for kIndirect

  friend bool operator==(const RelativeType &a, const RelativeType &b) {
    return a.base == b.base &&
           (a.base != RelativeBase::kIndirect || a.adposition == b.adposition);
  }
};

enum class ComparisonType { kLess, kMore, kLeast, kMost, kEqual };
enum class Tense { kPast, kPresent, kFuture };
enum class Modality { kMay, kCan, kMust };
enum class SentenceType { kAffirmation, kExclamation, kQuestion, kImperative };

// Disjunction of conjunctions: [a, b | c, b] is (a and b) or (c and b).
struct ReferenceGroups {
  std::vector<std::vector<Identifier>> groups;

  bool empty() const { return groups.empty(); }
  size_t size() const { return groups.size(); }
  std::vector<Identifier> Flatten() const;
  // Number of identifiers across all groups.
  size_t CountReferences() const;

  static ReferenceGroups Single(std::vector<Identifier> ids) {
    return {{std::move(ids)}};
  }

  friend bool operator==(const ReferenceGroups &,
                         const ReferenceGroups &) = default;
};

struct AdjectiveBlock {
  SynsetRef syn{PartOfSpeech::kAdjective, 0};
  std::vector<SynsetRef> adverbs;

  friend bool operator==(const AdjectiveBlock &,
                         const AdjectiveBlock &) = default;
};

struct AdverbBlock {
  SynsetRef syn{PartOfSpeech::kAdverb, 0};
  std::vector<SynsetRef> adverbs;

  friend bool operator==(const AdverbBlock &, const AdverbBlock &) = default;
};

// Role -> action link modelling a relative clause.
struct RelativeLink {
  RelativeType type;
  std::vector<Identifier> refs;

  friend bool operator==(const RelativeLink &, const RelativeLink &) = default;
};

struct AdpositionLink {
  AdpositionType type = AdpositionType::kIn;
  ReferenceGroups refs;

  friend bool operator==(const AdpositionLink &,
                         const AdpositionLink &) = default;
};

// Action -> action link modelling an adverbial clause.
struct AdverbialLink {
  AdverbialType type = AdverbialType::kWhen;
  std::vector<Identifier> refs;

  friend bool operator==(const AdverbialLink &,
                         const AdverbialLink &) = default;
};

// The first compared participant is the agent; refs hold the second.
struct Comparison {
  ComparisonType type = ComparisonType::kMore;
  std::vector<Identifier> refs;
  std::optional<SynsetRef> adjective;

  bool is_superlative() const {
    return type == ComparisonType::kLeast || type == ComparisonType::kMost;
  }

  friend bool operator==(const Comparison &, const Comparison &) = default;
};

struct Role {
  Identifier id;
  std::optional<SynsetRef> syn;
  std::optional<std::string> name;  // proper name, underscores for spaces
  std::optional<Pronoun> pronoun;
  Quantity quantity;
  bool defined = false;
  std::vector<AdjectiveBlock> adjectives;
  std::vector<RelativeLink> relatives;
  std::vector<AdpositionLink> adpositions;

  friend bool operator==(const Role &, const Role &) = default;
};

struct Action {
  Identifier id;
  SynsetRef syn{PartOfSpeech::kVerb, 0};
  std::optional<ReferenceGroups> agents;  // absent: passive-only
  std::optional<ReferenceGroups> themes;
  std::optional<Tense> tense;  // absent: tense-free
  bool progressive = false;
  bool perfect = false;
  bool negated = false;
  std::optional<Modality> modality;
  std::vector<AdverbBlock> adverbs;
  std::optional<Comparison> comparison;
  std::vector<AdpositionLink> adpositions;
  std::vector<AdverbialLink> adverbials;

  friend bool operator==(const Action &, const Action &) = default;
};

struct Sentence {
  SentenceType type = SentenceType::kAffirmation;
  std::vector<Identifier> actions;  // consecutive actions, in order

  friend bool operator==(const Sentence &, const Sentence &) = default;
};

struct Document {
  std::vector<Role> roles;
  std::vector<Action> actions;
  std::vector<Sentence> sentences;

  bool empty() const {
    return roles.empty() && actions.empty() && sentences.empty();
  }

  const Role *FindRole(const Identifier &id) const;
  const Action *FindAction(const Identifier &id) const;

  friend bool operator==(const Document &, const Document &) = default;
};

// Enumeration spellings used by every text format.
std::string_view AdpositionCode(AdpositionType t);
std::optional<AdpositionType> ParseAdpositionCode(std::string_view code);
std::string_view AdverbialCode(AdverbialType t);
std::optional<AdverbialType> ParseAdverbialCode(std::string_view code);
std::string RelativeCode(const RelativeType &t);
std::optional<RelativeType> ParseRelativeCode(std::string_view code);
std::string_view ComparisonCode(ComparisonType t);
std::optional<ComparisonType> ParseComparisonCode(std::string_view code);
std::string_view TenseCode(Tense t);
std::optional<Tense> ParseTenseCode(std::string_view code);
std::string_view ModalityCode(Modality m);
std::optional<Modality> ParseModalityCode(std::string_view code);
std::string_view SentenceTypeCode(SentenceType t);
std::optional<SentenceType> ParseSentenceTypeCode(std::string_view code);

}  // namespace ston

template <>
struct std::hash<ston::Identifier> {
  size_t operator()(const ston::Identifier &id) const noexcept {
    return std::hash<std::string>()(id.str());
  }
};

#endif  // STON_MODEL_H_
