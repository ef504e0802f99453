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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ston/bench.h"
#include "ston/canon.h"
#include "ston/encoder.h"
#include "ston/fixtures.h"
#include "ston/lexicon.h"
#include "ston/model.h"
#include "ston/realizer.h"
#include "ston/stats.h"
#include "ston/syntax.h"
#include "ston/validator.h"
#include "support/generator.h"
#include "support/stats_oracle.h"

namespace ston {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string &why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string ReadFile(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome RoundTrip() {
  Outcome o;
  testing::Rng rng(20260101);
  auto start = std::chrono::steady_clock::now();
  int passed = 0;
  for (int i = 0; i < 1000; ++i) {
    Document doc = testing::RandomDocument(rng);
    ParseResult canonical = Parse(SerializeCanonical(doc));
    ParseResult minified = Parse(SerializeMin(doc));
    if (canonical.ok() && minified.ok() && *canonical.document == doc &&
        *minified.document == doc) {
      ++passed;
    } else {
      o.Fail("document " + std::to_string(i) + " did not round-trip");
    }
  }
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start).count();
  if (seconds >= 10) o.Fail("took " + std::to_string(seconds) + " s");
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d/1000 documents in %.2f s", passed, seconds);
    o.detail = buf;
  }
  return o;
}

Outcome FixtureSuite() {
  Outcome o;
  std::vector<Fixture> fixtures = FixtureInventory(STON_FIXTURE_DIR);
  if (fixtures.size() < 12) o.Fail("only " + std::to_string(fixtures.size()) + " fixtures");
  int realized = 0;
  std::string taller, less, passive;
  for (const Fixture &f : fixtures) {
    ParseResult parsed = Parse(f.text);
    if (!parsed.ok()) {
      o.Fail(f.name + ": " + parsed.errors[0].ToString());
      continue;
    }
    std::vector<std::string> codes;
    for (const auto &d : Validate(*parsed.document)) codes.push_back(d.code);
    if (codes != f.expect.diagnostics) o.Fail(f.name + ": unexpected diagnostics");
    std::string canonical = SerializeCanonical(*parsed.document, {.require_valid = false});
    ParseResult again = Parse(canonical);
    if (!again.ok() || *again.document != *parsed.document) {
      o.Fail(f.name + ": canonical form does not reparse");
    }
    if (!f.expect.realize_tagged() && f.expect.realize_contains.empty()) continue;
    RealizeResult r = RealizeDocument(*parsed.document, Lexicon::Bundled());
    std::string want;
    for (const auto &s : f.expect.realize) want += s + "\n";
    if (!r.ok() || (f.expect.realize_tagged() && r.text != want)) {
      o.Fail(f.name + ": realized '" + r.text + "'");
    }
    for (const auto &frag : f.expect.realize_contains) {
      if (r.text.find(frag) == std::string::npos) o.Fail(f.name + ": missing '" + frag + "'");
    }
    ++realized;
    if (f.name == "comparison-taller") taller = r.text;
    if (f.name == "comparison-less") less = r.text;
    if (f.name == "passive") passive = r.text;
  }
  if (taller.find("taller than his brother") == std::string::npos) {
    o.Fail("comparison-taller lacks 'taller than his brother'");
  }
  if (less.find("less than his brother") == std::string::npos) {
    o.Fail("comparison-less lacks 'less than his brother'");
  }
  if (passive != "An apple was eaten.\n") o.Fail("passive realized '" + passive + "'");
  if (o.pass) {
    o.detail = std::to_string(fixtures.size()) + " fixtures, " +
               std::to_string(realized) + " realized";
  }
  return o;
}

Outcome MutationKillRate() {
  Outcome o;
  std::vector<Document> bases;
  for (const Fixture &f : FixtureInventory(STON_FIXTURE_DIR)) {
    ParseResult parsed = Parse(f.text);
    if (parsed.ok() && !parsed.document->empty()) bases.push_back(*parsed.document);
  }
  testing::Rng rng(404);
  int made = 0, killed = 0;
  for (int i = 0; made < 200 && i < 10000; ++i) {
    const Document &base = bases[static_cast<size_t>(i) % bases.size()];
    auto kind = static_cast<testing::MutationKind>(i % testing::kNumMutationKinds);
    auto mutant = testing::Mutate(base, kind, rng);
    if (!mutant) continue;
    ++made;
    if (testing::MutantDetected(*mutant)) {
      ++killed;
    } else {
      o.Fail(std::string(testing::MutationName(kind)) + " mutant missed " +
             mutant->expected_code);
    }
  }
  if (made < 200) o.Fail("only " + std::to_string(made) + " mutants");
  if (o.pass) {
    o.detail = std::to_string(killed) + "/" + std::to_string(made) + " mutants detected";
  }
  return o;
}

Outcome PronounCodec() {
  Outcome o;
  constexpr std::string_view kAlphabets[] = {"DSOP", "FST", "SDPN", "FMN", "RCFP", "DMPN"};
  int legal = 0;
  for (char a : kAlphabets[0])
    for (char b : kAlphabets[1])
      for (char c : kAlphabets[2])
        for (char d : kAlphabets[3])
          for (char e : kAlphabets[4])
            for (char f : kAlphabets[5]) {
              std::string code = {a, b, c, d, e, f};
              if (EncodePronoun(DecodePronoun(code)) != code) o.Fail(code + " changed");
              ++legal;
            }
  int rejected = 0, expected = 0;
  for (int pos = 0; pos < 6; ++pos) {
    for (int ch = 0; ch < 256; ++ch) {
      if (kAlphabets[pos].find(static_cast<char>(ch)) != std::string_view::npos) continue;
      ++expected;
      std::string code = "PTSMFN";
      code[static_cast<size_t>(pos)] = static_cast<char>(ch);
      try {
        DecodePronoun(code);
        o.Fail("accepted illegal code at position " + std::to_string(pos + 1));
      } catch (const InvalidPronounCode &) {
        ++rejected;
      }
    }
  }
  if (legal != 2304) o.Fail(std::to_string(legal) + " legal codes");
  if (o.pass) {
    o.detail = "2304 codes round-trip, " + std::to_string(rejected) + "/" +
               std::to_string(expected) + " substitutions rejected";
  }
  return o;
}

Outcome ParsePerformance() {
  Outcome o;
  ParseTiming t = MeasureParse(ReadFile(STON_DATA_DIR "/synthetic-100.ston"), 10);
  if (!t.parsed) o.Fail("synthetic corpus does not parse");
  if (t.sentences != 100) o.Fail(std::to_string(t.sentences) + " sentences");
  if (t.per_sentence_ms > 5.0) o.Fail("too slow");
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.4f ms/sentence over %zu sentences",
                t.per_sentence_ms, t.sentences);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome StatsOracle() {
  Outcome o;
  ParseResult parsed = Parse(ReadFile(STON_FIXTURE_DIR "/biography.ston"));
  if (!parsed.ok()) {
    o.Fail("biography does not parse");
    return o;
  }
  std::vector<Document> docs = {*parsed.document};
  CorpusStats s = ComputeStats(docs);
  testing::OracleCounts c = testing::CountByTraversal(docs);
  if (s.sentences != 12) o.Fail("biography has " + std::to_string(s.sentences) + " sentences");
  if (s.sentences != c.sentences) o.Fail("sentences differ");
  if (s.roles != c.roles) o.Fail("roles differ");
  if (s.actions != c.actions) o.Fail("actions differ");
  if (s.distinct_synsets != c.distinct_synsets) o.Fail("distinct synsets differ");
  if (s.relations != c.relations) o.Fail("relations differ");
  if (s.avg_actions_per_sentence != Ratio::Of(c.avg_num, c.avg_den)) {
    o.Fail("average differs");
  }
  if (o.pass) o.detail = "six fields equal the traversal count";
  return o;
}

Outcome EncoderEndToEnd() {
  Outcome o;
  const std::string sentence = "The man gave a gift to the boy.";
  EncodeResult r = Encode(sentence, Lexicon::Bundled());
  if (!r.ok()) {
    o.Fail("encoding failed");
    return o;
  }
  if (!Validate(*r.document).empty()) o.Fail("diagnostics on the encoded document");
  const auto &adps = r.document->actions.at(0).adpositions;
  if (adps.size() != 1 || adps[0].type != AdpositionType::kTo) o.Fail("no TO link");
  RealizeResult back = RealizeDocument(*r.document, Lexicon::Bundled());
  if (back.text != sentence + "\n") o.Fail("realized '" + back.text + "'");
  if (o.pass) o.detail = "encode, validate and realize agree";
  return o;
}

}  // namespace
}  // namespace ston

int main() {
  struct Criterion {
    const char *name;
    ston::Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"round-trip of 1000 generated documents", ston::RoundTrip},
      {"fixture suite", ston::FixtureSuite},
      {"validator mutation kill-rate", ston::MutationKillRate},
      {"pronoun codec", ston::PronounCodec},
      {"parse time per sentence", ston::ParsePerformance},
      {"stats against traversal oracle", ston::StatsOracle},
      {"encoder end to end", ston::EncoderEndToEnd},
  };
  int failures = 0;
  int n = 0;
  for (const Criterion &c : criteria) {
    ston::Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s: %s (%s)\n", ++n, o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
