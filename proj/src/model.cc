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

#include "ston/model.h"

#include <array>
#include <charconv>

namespace ston {

namespace {

bool IsIdentStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// Parses a non-empty all-digit string into [1, UINT32_MAX].
std::optional<uint32_t> ParsePositive(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  for (char c : digits) {
    if (!IsDigit(c)) return std::nullopt;
  }
  uint32_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  if (value == 0) return std::nullopt;
  return value;
}

template <typename E, size_t N>
std::optional<E> Lookup(const std::array<std::string_view, N> &codes,
                        std::string_view code) {
  for (size_t i = 0; i < N; ++i) {
    if (codes[i] == code) return static_cast<E>(i);
  }
  return std::nullopt;
}

constexpr std::array<std::string_view, kNumAdpositionTypes> kAdpositionCodes = {
    "AGO", "FRM", "IN",  "SNC", "TO",  "FOR", "BEF", "AFT", "BY", "INS",
    "OUT", "BLW", "ABV", "BTW", "THR", "ON",  "WTH", "OF",  "AS", "UND",
};

constexpr std::array<std::string_view, kNumAdverbialTypes> kAdverbialCodes = {
    "WHN", "WHL", "WHR", "IF", "SO", "BCS", "THG", "LIK", "FTR", "BFR",
};

constexpr std::array<std::string_view, 5> kComparisonCodes = {"L", "M", "LT",
                                                              "MT", "EQ"};
constexpr std::array<std::string_view, 3> kTenseCodes = {"PA", "PR", "FU"};
constexpr std::array<std::string_view, 3> kModalityCodes = {"MAY", "CAN",
                                                            "MUST"};
constexpr std::array<std::string_view, 4> kSentenceTypeCodes = {"AFF", "EXC",
                                                                "QST", "IMP"};
constexpr std::array<std::string_view, 4> kRelativeBaseCodes = {"SBJ", "POS",
                                                                "OBJ", "RSN"};

// Legal letters at each position of a pronoun code.
constexpr std::array<std::string_view, 6> kPronounAlphabet = {
    "DSOP", "FST", "SDPN", "FMN", "RCFP", "DMPN",
};

}  // namespace

bool Identifier::IsValid(std::string_view text) {
  if (text.empty() || !IsIdentStart(text[0])) return false;
  for (char c : text) {
    if (!IsIdentStart(c) && !IsDigit(c)) return false;
  }
  return true;
}

Quantity ParseQuantity(std::string_view text) {
  if (text == "PL") return Quantity::Plural();
  if (!text.empty() && text[0] == 'O') {
    if (auto n = ParsePositive(text.substr(1))) return Quantity::Ordinal(*n);
  } else if (auto n = ParsePositive(text)) {
    return Quantity::Cardinal(*n);
  }
  throw InvalidQuantity(std::string(text));
}

std::string FormatQuantity(const Quantity &q) {
  switch (q.kind) {
    case Quantity::Kind::kPlural:
      return "PL";
    case Quantity::Kind::kOrdinal:
      return "O" + std::to_string(q.value);
    case Quantity::Kind::kCardinal:
      break;
  }
  return std::to_string(q.value);
}

InvalidPronounCode::InvalidPronounCode(int position, char character)
    : std::invalid_argument(
          position == 0
              ? std::string("pronoun code must have exactly 6 characters")
              : "illegal pronoun code character '" + std::string(1, character) +
                    "' at position " + std::to_string(position)),
      position_(position),
      character_(character) {}

Pronoun DecodePronoun(std::string_view code) {
  if (code.size() != kPronounAlphabet.size()) throw InvalidPronounCode(0, 0);
  for (size_t i = 0; i < code.size(); ++i) {
    if (kPronounAlphabet[i].find(code[i]) == std::string_view::npos) {
      throw InvalidPronounCode(static_cast<int>(i) + 1, code[i]);
    }
  }
  Pronoun p;
  p.kind = static_cast<PronounKind>(code[0]);
  p.person = static_cast<Person>(code[1]);
  p.number = static_cast<GrammaticalNumber>(code[2]);
  p.gender = static_cast<Gender>(code[3]);
  p.formality = static_cast<Formality>(code[4]);
  p.proximity = static_cast<Proximity>(code[5]);
  return p;
}

std::string EncodePronoun(const Pronoun &p) {
  return {static_cast<char>(p.kind),   static_cast<char>(p.person),
          static_cast<char>(p.number), static_cast<char>(p.gender),
          static_cast<char>(p.formality), static_cast<char>(p.proximity)};
}

std::vector<Identifier> ReferenceGroups::Flatten() const {
  std::vector<Identifier> out;
  for (const auto &group : groups) out.insert(out.end(), group.begin(), group.end());
  return out;
}

size_t ReferenceGroups::CountReferences() const {
  size_t n = 0;
  for (const auto &group : groups) n += group.size();
  return n;
}

const Role *Document::FindRole(const Identifier &id) const {
  for (const auto &r : roles) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

const Action *Document::FindAction(const Identifier &id) const {
  for (const auto &a : actions) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

std::string_view AdpositionCode(AdpositionType t) {
  return kAdpositionCodes[static_cast<size_t>(t)];
}

std::optional<AdpositionType> ParseAdpositionCode(std::string_view code) {
  return Lookup<AdpositionType>(kAdpositionCodes, code);
}

std::string_view AdverbialCode(AdverbialType t) {
  return kAdverbialCodes[static_cast<size_t>(t)];
}

std::optional<AdverbialType> ParseAdverbialCode(std::string_view code) {
  return Lookup<AdverbialType>(kAdverbialCodes, code);
}

std::string RelativeCode(const RelativeType &t) {
  if (t.base == RelativeBase::kIndirect) {
    return "IO_" + std::string(AdpositionCode(t.adposition));
  }
  return std::string(kRelativeBaseCodes[static_cast<size_t>(t.base)]);
}

std::optional<RelativeType> ParseRelativeCode(std::string_view code) {
  constexpr std::string_view kIndirectPrefix = "IO_";
  if (code.substr(0, kIndirectPrefix.size()) == kIndirectPrefix) {
    auto adp = ParseAdpositionCode(code.substr(kIndirectPrefix.size()));
    if (!adp) return std::nullopt;
    return RelativeType{RelativeBase::kIndirect, *adp};
  }
  auto base = Lookup<RelativeBase>(kRelativeBaseCodes, code);
  if (!base) return std::nullopt;
  return RelativeType{*base, AdpositionType::kAgo};
}

std::string_view ComparisonCode(ComparisonType t) {
  return kComparisonCodes[static_cast<size_t>(t)];
}

std::optional<ComparisonType> ParseComparisonCode(std::string_view code) {
  return Lookup<ComparisonType>(kComparisonCodes, code);
}

std::string_view TenseCode(Tense t) {
  return kTenseCodes[static_cast<size_t>(t)];
}

std::optional<Tense> ParseTenseCode(std::string_view code) {
  return Lookup<Tense>(kTenseCodes, code);
}

std::string_view ModalityCode(Modality m) {
  return kModalityCodes[static_cast<size_t>(m)];
}

std::optional<Modality> ParseModalityCode(std::string_view code) {
  return Lookup<Modality>(kModalityCodes, code);
}

std::string_view SentenceTypeCode(SentenceType t) {
  return kSentenceTypeCodes[static_cast<size_t>(t)];
}

std::optional<SentenceType> ParseSentenceTypeCode(std::string_view code) {
  return Lookup<SentenceType>(kSentenceTypeCodes, code);
}

}  // namespace ston
