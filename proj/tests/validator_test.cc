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

#include "ston/validator.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "ston/syntax.h"
#include "support/generator.h"

namespace ston {
namespace {

Document ParseOrDie(const std::string &text) {
  auto r = Parse(text);
  if (!r.ok()) {
    ADD_FAILURE() << r.errors[0].ToString();
    return {};
  }
  return *r.document;
}

std::vector<std::string> Codes(const std::string &text) {
  std::vector<std::string> out;
  for (const auto &d : Validate(ParseOrDie(text))) out.push_back(d.code);
  return out;
}

// A clean baseline: "The man eats food."
std::string Doc(const std::string &roles, const std::string &actions,
                const std::string &sentences) {
  return "@ston @roles " + roles + " @actions " + actions + " @sentences " +
         sentences + " @end";
}

const std::string kMan = "r:{ id: man; syn: 10287213; }";
const std::string kFood = "r:{ id: food; syn: 07555863; }";
const std::string kEat =
    "a:{ id: eat; syn: 01168468; tns: PR; agt: [man]; thm: [food]; }";
const std::string kSay = "s:{ typ: AFF; act: [eat]; }";

using CodeList = std::vector<std::string>;

TEST(ValidatorTest, CleanDocument) {
  EXPECT_EQ(Codes(Doc(kMan + kFood, kEat, kSay)), CodeList{});
  EXPECT_FALSE(HasErrors(Validate(Document{})));
}

TEST(ValidatorTest, DuplicateIdentifier) {
  // The first declaration wins, so the sentence now names a role.
  auto codes = Codes(Doc(kMan + kFood + "r:{ id: eat; syn: 1; }", kEat, kSay));
  EXPECT_EQ(codes, CodeList({"E01", "E03"}));
}

TEST(ValidatorTest, DanglingReference) {
  auto doc = ParseOrDie(Doc(kMan, kEat, kSay));
  auto d = Validate(doc);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E02");
  EXPECT_EQ(d[0].subject, "eat");
  EXPECT_EQ(d[0].severity, Severity::kError);
  EXPECT_NE(d[0].message.find("'food'"), std::string::npos);
}

TEST(ValidatorTest, KindMismatch) {
  // An adposition must name a role.
  auto codes = Codes(Doc(
      kMan + kFood,
      "a:{ id: eat; syn: 1; agt: [man]; thm: [food]; adp:{ typ: IN; ref: [eat]; } }",
      kSay));
  EXPECT_EQ(codes, CodeList{"E03"});
  // A relative clause must name an action.
  codes = Codes(Doc(
      "r:{ id: man; syn: 1; rel:{ typ: SBJ; ref: [food]; } }" + kFood, kEat, kSay));
  EXPECT_EQ(codes, CodeList{"E03"});
  // Agents and themes may name either kind.
  codes = Codes(Doc(kMan + kFood,
                    kEat + "a:{ id: see; syn: 2; agt: [man]; thm: [eat]; }",
                    "s:{ typ: AFF; act: [see]; }"));
  EXPECT_EQ(codes, CodeList{});
}

TEST(ValidatorTest, RoleWithoutHead) {
  auto codes = Codes(Doc("r:{ id: man; def: Y; }" + kFood, kEat, kSay));
  EXPECT_EQ(codes, CodeList{"E04"});
}

TEST(ValidatorTest, PronounIsAHead) {
  auto codes = Codes(Doc("r:{ id: man; pro:{ typ: SSSMFN; } }" + kFood, kEat, kSay));
  EXPECT_EQ(codes, CodeList{});
}

TEST(ValidatorTest, NameNeedsSynset) {
  auto codes = Codes(
      Doc("r:{ id: man; nam: Karim; pro:{ typ: STSMFN; } }" + kFood, kEat, kSay));
  EXPECT_EQ(codes, CodeList({"E05", "W02"}));
}

TEST(ValidatorTest, NameWithPronounWarns) {
  auto d = Validate(ParseOrDie(Doc(
      "r:{ id: man; syn: 1; nam: Karim; pro:{ typ: STSMFN; } }" + kFood, kEat, kSay)));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "W02");
  EXPECT_FALSE(HasErrors(d));
}

TEST(ValidatorTest, ComparisonNeedsReference) {
  auto act = [](const std::string &cmp) {
    return "a:{ id: eat; syn: 1; agt: [man]; thm: [food]; cmp:{ " + cmp + " } }";
  };
  EXPECT_EQ(Codes(Doc(kMan + kFood, act("typ: M;"), kSay)), CodeList{"E06"});
  EXPECT_EQ(Codes(Doc(kMan + kFood, act("typ: L;"), kSay)), CodeList{"E06"});
  EXPECT_EQ(Codes(Doc(kMan + kFood, act("typ: EQ;"), kSay)), CodeList{"E06"});
  EXPECT_EQ(Codes(Doc(kMan + kFood, act("typ: MT;"), kSay)), CodeList{});
  EXPECT_EQ(Codes(Doc(kMan + kFood, act("typ: M; ref: [food];"), kSay)),
            CodeList{});
}

TEST(ValidatorTest, SentenceWithoutActions) {
  Document doc = ParseOrDie(Doc(kMan + kFood, kEat, kSay));
  doc.sentences.push_back(Sentence{});
  auto d = Validate(doc);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].code, "E07");
  EXPECT_EQ(d[0].subject, "sentence[1]");
}

TEST(ValidatorTest, UnreferencedRoleAndOrphanAction) {
  auto codes = Codes(Doc(kMan + kFood + "r:{ id: tree; syn: 3; }",
                         kEat + "a:{ id: run; syn: 4; agt: [man]; }", kSay));
  EXPECT_EQ(codes, CodeList({"W01", "W03"}));
}

TEST(ValidatorTest, ActionReachedThroughLinkIsNotOrphan) {
  auto codes = Codes(Doc(
      kMan + kFood,
      kEat + "a:{ id: talk; syn: 4; agt: [man]; cls:{ typ: WHN; ref: [eat]; } }",
      "s:{ typ: AFF; act: [talk]; }"));
  EXPECT_EQ(codes, CodeList{});
}

TEST(ValidatorTest, OrderFollowsDeclarations) {
  // Errors are grouped by the block they concern: roles, actions, sentences.
  auto d = Validate(ParseOrDie(Doc("r:{ id: a; } r:{ id: b; syn: 1; }",
                                   "a:{ id: x; syn: 1; agt: [q]; }",
                                   "s:{ typ: AFF; act: [x, y]; }")));
  std::vector<std::string> got;
  for (const auto &x : d) got.push_back(x.code + ":" + x.subject);
  EXPECT_EQ(got, CodeList({"E04:a", "W01:a", "W01:b", "E02:x",
                          "E02:sentence[0]"}));
}

TEST(ValidatorTest, RequireValidThrowsWithDiagnostics) {
  Document doc = ParseOrDie(Doc(kMan, kEat, kSay));
  try {
    RequireValid(doc);
    FAIL() << "expected InvalidDocumentError";
  } catch (const InvalidDocumentError &e) {
    ASSERT_EQ(e.diagnostics().size(), 1u);
    EXPECT_EQ(e.diagnostics()[0].code, "E02");
  }
  EXPECT_NO_THROW(RequireValid(ParseOrDie(Doc(kMan + kFood, kEat, kSay))));
}

TEST(ValidatorTest, DiagnosticToString) {
  Diagnostic d{Severity::kWarning, "W01", "tree", "role 'tree' is never referenced"};
  EXPECT_EQ(d.ToString(), "warning W01 [tree]: role 'tree' is never referenced");
}

TEST(ValidatorTest, RandomDocumentsHaveNoErrors) {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Document doc = testing::RandomDocument(rng);
    auto d = Validate(doc);
    ASSERT_FALSE(HasErrors(d)) << d[0].ToString();
  }
}

TEST(ValidateAllTest, MatchesSerial) {
  testing::Rng rng(5);
  std::vector<Document> docs;
  for (int i = 0; i < 100; ++i) {
    Document doc = testing::RandomDocument(rng);
    if (i % 4 == 0 && !doc.roles.empty()) {
      doc.roles[0].syn.reset();
      doc.roles[0].pronoun.reset();
    }
    docs.push_back(std::move(doc));
  }
  EXPECT_EQ(ValidateAll(docs), ValidateAllSerial(docs));
}

}  // namespace
}  // namespace ston
