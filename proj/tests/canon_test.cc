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

#include "ston/canon.h"

#include <gtest/gtest.h>

#include <string>

#include "ston/syntax.h"
#include "ston/validator.h"
#include "support/generator.h"

namespace ston {
namespace {

// Non-canonical spelling of the passive fixture: odd spacing, unpadded
// synsets, explicit defaults and a comment.
constexpr std::string_view kMessy =
    "@ston @roles r:{id:apple;syn:7739125;qnt:1;def:N;} # fruit\n"
    "@actions a:{ id : eaten ; syn : 1168468 ; tns : PA ; neg: N; thm : [ apple ] ; }"
    "\n\n@sentences s:{typ:AFF;act:[eaten];}@end";

constexpr std::string_view kCanonical = R"(@ston
@roles
r:{
  id: apple;
  syn: 07739125;
}
@actions
a:{
  id: eaten;
  syn: 01168468;
  tns: PA;
  thm: [apple];
}
@sentences
s:{
  typ: AFF;
  act: [eaten];
}
@end
)";

Document ParseOrDie(std::string_view text) {
  auto r = Parse(text);
  if (!r.ok()) {
    ADD_FAILURE() << r.errors[0].ToString();
    return {};
  }
  return *r.document;
}

TEST(CanonTest, NormalizesLayoutAndDefaults) {
  EXPECT_EQ(SerializeCanonical(ParseOrDie(kMessy)), kCanonical);
}

TEST(CanonTest, MinifiedForm) {
  EXPECT_EQ(SerializeMin(ParseOrDie(kMessy)),
            "@ston @roles r:{id:apple;syn:7739125;} @actions "
            "a:{id:eaten;syn:1168468;tns:PA;thm:[apple];} @sentences "
            "s:{typ:AFF;act:[eaten];} @end");
}

TEST(CanonTest, EmptyDocument) {
  EXPECT_EQ(SerializeCanonical(Document{}),
            "@ston\n@roles\n@actions\n@sentences\n@end\n");
  EXPECT_EQ(SerializeMin(Document{}), "@ston @roles @actions @sentences @end");
}

TEST(CanonTest, GroupsAndNestedBlocks) {
  constexpr std::string_view text =
      "@ston @roles r:{id:m;syn:1;adj:{syn:2;adv:[3];}} r:{id:c;syn:4;} "
      "r:{id:f;syn:5;} @actions "
      "a:{id:ate;syn:6;tns:PA;prg:Y;agt:[m,c|f,c];cmp:{typ:MT;adj:7;}} "
      "@sentences s:{typ:QST;act:[ate];} @end";
  std::string canonical = SerializeCanonical(ParseOrDie(text));
  EXPECT_NE(canonical.find("  agt: [m, c | f, c];\n"), std::string::npos)
      << canonical;
  EXPECT_NE(canonical.find("  adj:{\n    syn: 00000002;\n    adv: [00000003];\n  }\n"),
            std::string::npos)
      << canonical;
  EXPECT_NE(canonical.find("  cmp:{\n    typ: MT;\n    adj: 00000007;\n  }\n"),
            std::string::npos)
      << canonical;
  EXPECT_EQ(SerializeCanonical(ParseOrDie(canonical)), canonical);
}

TEST(CanonTest, RequireValidRejectsErrors) {
  Document doc = ParseOrDie(kMessy);
  doc.actions[0].themes = ReferenceGroups::Single({Identifier("pear")});
  EXPECT_THROW(SerializeCanonical(doc), InvalidDocumentError);
  EXPECT_THROW(SerializeMin(doc), InvalidDocumentError);
  std::string text = SerializeCanonical(doc, {.require_valid = false});
  EXPECT_NE(text.find("thm: [pear];"), std::string::npos);
}

TEST(CanonTest, Idempotent) {
  testing::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    Document doc = testing::RandomDocument(rng);
    std::string once = SerializeCanonical(doc);
    Document again = ParseOrDie(once);
    ASSERT_EQ(SerializeCanonical(again), once);
    std::string min = SerializeMin(doc);
    ASSERT_EQ(SerializeMin(ParseOrDie(min)), min);
    ASSERT_EQ(SerializeCanonical(ParseOrDie(min)), once);
  }
}

}  // namespace
}  // namespace ston
