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

// English inflection rule tables used by the realizer and the encoder.
// All functions take and return lower-case single words.

#ifndef STON_MORPHOLOGY_H_
#define STON_MORPHOLOGY_H_

#include <string>
#include <string_view>
#include <vector>

namespace ston::english {

std::string Plural(std::string_view noun);
bool IsMassNoun(std::string_view noun);
bool IsPersonNoun(std::string_view noun);

std::string ThirdSingular(std::string_view verb);
std::string Past(std::string_view verb);  // "was" for be
std::string PastParticiple(std::string_view verb);
std::string PresentParticiple(std::string_view verb);

int CountSyllables(std::string_view word);
// Monosyllabic adjectives take -er / -est.
bool TakesSuffixComparison(std::string_view adjective);
std::string Comparative(std::string_view adjective);
std::string Superlative(std::string_view adjective);

// "a" or "an" for the word that follows the article.
std::string_view IndefiniteArticle(std::string_view next_word);

std::string OrdinalWord(unsigned n);
std::string CardinalWord(unsigned n);

enum class VerbForm { kBase, kThirdSingular, kPast };

struct VerbAnalysis {
  std::string lemma;
  VerbForm form;
};

// Lemma candidates whose regenerated form equals `word`.
std::vector<VerbAnalysis> AnalyzeVerb(std::string_view word);

struct NounAnalysis {
  std::string lemma;
  bool plural;
};

std::vector<NounAnalysis> AnalyzeNoun(std::string_view word);

}  // namespace ston::english

#endif  // STON_MORPHOLOGY_H_
