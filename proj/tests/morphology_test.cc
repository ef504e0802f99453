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

#include "ston/morphology.h"

#include <gtest/gtest.h>

#include <algorithm>

namespace ston::english {
namespace {

TEST(MorphologyTest, Plurals) {
  EXPECT_EQ(Plural("tree"), "trees");
  EXPECT_EQ(Plural("box"), "boxes");
  EXPECT_EQ(Plural("city"), "cities");
  EXPECT_EQ(Plural("day"), "days");
  EXPECT_EQ(Plural("leaf"), "leaves");
  EXPECT_EQ(Plural("man"), "men");
  EXPECT_EQ(Plural("child"), "children");
  EXPECT_EQ(Plural("student"), "students");
}

TEST(MorphologyTest, NounClasses) {
  EXPECT_TRUE(IsMassNoun("water"));
  EXPECT_FALSE(IsMassNoun("apple"));
  EXPECT_TRUE(IsPersonNoun("man"));
  EXPECT_FALSE(IsPersonNoun("tree"));
}

TEST(MorphologyTest, VerbForms) {
  EXPECT_EQ(ThirdSingular("eat"), "eats");
  EXPECT_EQ(ThirdSingular("watch"), "watches");
  EXPECT_EQ(ThirdSingular("study"), "studies");
  EXPECT_EQ(ThirdSingular("have"), "has");
  EXPECT_EQ(ThirdSingular("be"), "is");
  EXPECT_EQ(Past("eat"), "ate");
  EXPECT_EQ(Past("be"), "was");
  EXPECT_EQ(Past("study"), "studied");
  EXPECT_EQ(Past("live"), "lived");
  EXPECT_EQ(PastParticiple("eat"), "eaten");
  EXPECT_EQ(PastParticiple("publish"), "published");
  EXPECT_EQ(PresentParticiple("eat"), "eating");
  EXPECT_EQ(PresentParticiple("live"), "living");
  EXPECT_EQ(PresentParticiple("be"), "being");
}

TEST(MorphologyTest, Comparison) {
  EXPECT_TRUE(TakesSuffixComparison("tall"));
  EXPECT_FALSE(TakesSuffixComparison("famous"));
  EXPECT_TRUE(TakesSuffixComparison("happy"));
  EXPECT_EQ(Comparative("tall"), "taller");
  EXPECT_EQ(Comparative("big"), "bigger");
  EXPECT_EQ(Comparative("happy"), "happier");
  EXPECT_EQ(Comparative("good"), "better");
  EXPECT_EQ(Superlative("tall"), "tallest");
  EXPECT_EQ(Superlative("famous"), "most famous");
  EXPECT_EQ(Comparative("famous"), "more famous");
}

TEST(MorphologyTest, Articles) {
  EXPECT_EQ(IndefiniteArticle("apple"), "an");
  EXPECT_EQ(IndefiniteArticle("gift"), "a");
  EXPECT_EQ(IndefiniteArticle("hour"), "an");
  EXPECT_EQ(IndefiniteArticle("university"), "a");
}

TEST(MorphologyTest, Numerals) {
  EXPECT_EQ(OrdinalWord(1), "first");
  EXPECT_EQ(OrdinalWord(2), "second");
  EXPECT_EQ(OrdinalWord(3), "third");
  EXPECT_EQ(CardinalWord(2), "two");
  EXPECT_EQ(CardinalWord(350), "350");
}

TEST(MorphologyTest, Syllables) {
  EXPECT_EQ(CountSyllables("tall"), 1);
  EXPECT_EQ(CountSyllables("famous"), 2);
}

TEST(MorphologyTest, AnalyzeVerbInvertsInflection) {
  for (std::string_view lemma : {"eat", "give", "live", "study", "watch", "go"}) {
    auto has = [&](const std::string &word, VerbForm form) {
      auto a = AnalyzeVerb(word);
      return std::any_of(a.begin(), a.end(), [&](const VerbAnalysis &v) {
        return v.lemma == lemma && v.form == form;
      });
    };
    EXPECT_TRUE(has(ThirdSingular(lemma), VerbForm::kThirdSingular)) << lemma;
    EXPECT_TRUE(has(Past(lemma), VerbForm::kPast)) << lemma;
    EXPECT_TRUE(has(std::string(lemma), VerbForm::kBase)) << lemma;
  }
}

TEST(MorphologyTest, AnalyzeNounInvertsPlural) {
  for (std::string_view lemma : {"tree", "box", "city", "man", "leaf", "novel"}) {
    auto a = AnalyzeNoun(Plural(lemma));
    EXPECT_TRUE(std::any_of(a.begin(), a.end(), [&](const NounAnalysis &n) {
      return n.lemma == lemma && n.plural;
    })) << lemma;
  }
}

}  // namespace
}  // namespace ston::english
