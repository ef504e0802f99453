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

// Runs the ston binary through the shell and checks output and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = -1;
  std::string out;  // stdout only
};

// `args` is passed through /bin/sh; stderr goes to /dev/null unless the
// arguments redirect it.
CliRun Ston(const std::string &args) {
  std::string cmd = std::string("'") + STON_CLI_PATH + "' " + args;
  if (args.find("2>") == std::string::npos) cmd += " 2>/dev/null";
  CliRun r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string Fixture(const std::string &name) {
  return std::string(STON_FIXTURE_DIR) + "/" + name + ".ston";
}

std::string ReadFile(const fs::path &p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ston_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string &name, const std::string &text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

constexpr const char *kDangling =
    "@ston @roles r:{id:man;syn:10287213;} @actions "
    "a:{id:eat;syn:1168468;tns:PR;agt:[man];thm:[food];} "
    "@sentences s:{typ:AFF;act:[eat];} @end\n";

TEST_F(CliTest, ValidateClean) {
  CliRun r = Ston("validate " + Fixture("role-action") + " " + Fixture("biography"));
  EXPECT_EQ(r.status, 0);
}

TEST_F(CliTest, ValidateReportsErrors) {
  std::string f = Write("bad.ston", kDangling);
  CliRun r = Ston("validate " + f + " 2>&1");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("E02"), std::string::npos) << r.out;
}

TEST_F(CliTest, ValidateTreeFormat) {
  std::string f = Write("bad.ston", kDangling);
  CliRun r = Ston("validate --format tree " + f);
  EXPECT_EQ(r.status, 1);
  auto tree = nlohmann::json::parse(r.out);
  EXPECT_EQ(tree[f][0]["code"], "E02");
  EXPECT_EQ(tree[f][0]["severity"], "ERROR");
}

TEST_F(CliTest, ParseErrorExitCode) {
  std::string f = Write("broken.ston", "@ston @roles r:{ id: ; } @end");
  CliRun r = Ston("validate " + f + " 2>&1");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find(f + ":1:"), std::string::npos) << r.out;
}

TEST_F(CliTest, MissingFile) {
  EXPECT_EQ(Ston("validate " + (dir_ / "nope.ston").string()).status, 3);
}

TEST_F(CliTest, FormatWorksOnInvalidDocuments) {
  std::string f = Write("bad.ston", kDangling);
  CliRun r = Ston("fmt " + f);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("  thm: [food];\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("  syn: 01168468;\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, FormatFromStdinAndInPlace) {
  std::string canonical = ReadFile(Fixture("passive"));
  CliRun piped = Ston("min - < " + Fixture("passive"));
  EXPECT_EQ(piped.status, 0);
  EXPECT_EQ(piped.out.find('\n'), piped.out.size() - 1);

  std::string f = Write("doc.ston", piped.out);
  EXPECT_EQ(Ston("fmt -w " + f).status, 0);
  std::string rewritten = ReadFile(f);
  EXPECT_NE(rewritten.find("@ston\n@roles\nr:{\n  id: apple;\n"), std::string::npos)
      << rewritten;
  EXPECT_EQ(Ston("fmt " + f).out, rewritten);
  EXPECT_EQ(Ston("fmt -w -").status, 64);
}

TEST_F(CliTest, StatsOnBiography) {
  CliRun r = Ston("stats --format tree " + Fixture("biography"));
  ASSERT_EQ(r.status, 0);
  auto tree = nlohmann::json::parse(r.out);
  EXPECT_EQ(tree["sentences"], 12);
  EXPECT_EQ(tree["avg_actions_per_sentence"], "7/6");
  CliRun text = Ston("stats " + Fixture("biography"));
  EXPECT_NE(text.out.find("7/6"), std::string::npos);
}

TEST_F(CliTest, ExportImportRoundTrip) {
  CliRun exported = Ston("export " + Fixture("coordination"));
  ASSERT_EQ(exported.status, 0);
  std::string json = Write("doc.json", exported.out);
  CliRun imported = Ston("import " + json);
  ASSERT_EQ(imported.status, 0);
  EXPECT_EQ(imported.out, Ston("fmt " + Fixture("coordination")).out);
  std::string bad = Write("bad.json", R"({"roles": 3})");
  EXPECT_EQ(Ston("import " + bad).status, 2);
}

TEST_F(CliTest, Realize) {
  CliRun r = Ston("realize " + Fixture("two-objects"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "The man gave a gift to the boy.\n");
  EXPECT_EQ(Ston("realize --lang fr " + Fixture("two-objects")).status, 64);
  EXPECT_EQ(Ston("realize --lexicon /nonexistent.tsv " + Fixture("two-objects")).status, 3);
  std::string lex = Write("tiny.tsv", "en\tn\t10287213\tman\n");
  EXPECT_EQ(Ston("realize --lexicon " + lex + " " + Fixture("two-objects")).status, 3);
}

TEST_F(CliTest, LexiconFromEnvironment) {
  std::string lex = Write("tiny.tsv", "en\tn\t10287213\tman\n");
  std::string cmd = "env STON_LEXICON=" + lex + " '" + STON_CLI_PATH +
                    "' realize " + Fixture("two-objects") + " >/dev/null 2>&1";
  int raw = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(raw), 3);
}

TEST_F(CliTest, EncodeRoundTrip) {
  std::string text = Write("in.txt", "The man gave a gift to the boy.\n");
  CliRun encoded = Ston("encode " + text);
  ASSERT_EQ(encoded.status, 0);
  std::string doc = Write("out.ston", encoded.out);
  EXPECT_EQ(Ston("validate " + doc).status, 0);
  EXPECT_EQ(Ston("realize " + doc).out, "The man gave a gift to the boy.\n");
  CliRun piped = Ston("encode < " + text);
  EXPECT_EQ(piped.out, encoded.out);
}

TEST_F(CliTest, EncodeFailure) {
  std::string text = Write("in.txt", "Karim lives at Jijel.\n");
  CliRun r = Ston("encode " + text + " 2>&1");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("PATTERN_MISMATCH"), std::string::npos) << r.out;
}

TEST_F(CliTest, Bench) {
  CliRun r = Ston("bench --iterations 3 " + Fixture("biography"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("iteration 3:"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("per_sentence_ms="), std::string::npos) << r.out;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Ston("").status, 64);
  EXPECT_EQ(Ston("frobnicate").status, 64);
  EXPECT_EQ(Ston("validate").status, 64);
  EXPECT_EQ(Ston("stats --format xml " + Fixture("biography")).status, 64);
  EXPECT_EQ(Ston("--help").status, 0);
}

}  // namespace
