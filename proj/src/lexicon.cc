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

#include "ston/lexicon.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ston {

// Defined in the generated bundled_lexicon.cc.
extern const char kBundledLexiconTsv[];

namespace {

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
}

}  // namespace

LexiconError::LexiconError(std::string source, int line,
                           const std::string &message)
    : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " +
                                        message
                                  : source + ": " + message),
      source_(std::move(source)),
      line_(line) {}

char PosLetter(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun: return 'n';
    case PartOfSpeech::kVerb: return 'v';
    case PartOfSpeech::kAdjective: return 'a';
    case PartOfSpeech::kAdverb: return 'r';
  }
  return '?';
}

std::optional<PartOfSpeech> PosFromLetter(char letter) {
  switch (letter) {
    case 'n': return PartOfSpeech::kNoun;
    case 'v': return PartOfSpeech::kVerb;
    case 'a': return PartOfSpeech::kAdjective;
    case 'r': return PartOfSpeech::kAdverb;
  }
  return std::nullopt;
}

std::string Lexicon::NormalizeLemma(std::string_view lemma) {
  std::string out;
  out.reserve(lemma.size());
  for (char c : lemma) {
    if (c == ' ') c = '_';
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

void Lexicon::Add(std::string_view lang, PartOfSpeech pos, uint32_t offset,
                  std::string_view lemma) {
  auto &lemmas = entries_[{std::string(lang), pos, offset}];
  if (std::find(lemmas.begin(), lemmas.end(), lemma) != lemmas.end()) return;
  lemmas.emplace_back(lemma);
  auto &offsets = reverse_[{std::string(lang), pos, NormalizeLemma(lemma)}];
  auto it = std::lower_bound(offsets.begin(), offsets.end(), offset);
  if (it == offsets.end() || *it != offset) offsets.insert(it, offset);
}

Lexicon Lexicon::Parse(std::string_view tsv, const std::string &source) {
  Lexicon lex;
  int line_no = 0;
  for (std::string_view line : Split(tsv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line[0] == '#') continue;
    auto cols = Split(line, '\t');
    if (cols.size() != 4) {
      throw LexiconError(source, line_no,
                         "expected 4 tab-separated columns, found " +
                             std::to_string(cols.size()));
    }
    if (cols[0].empty()) throw LexiconError(source, line_no, "empty language tag");
    auto pos = cols[1].size() == 1 ? PosFromLetter(cols[1][0]) : std::nullopt;
    if (!pos) {
      throw LexiconError(source, line_no,
                         "part of speech must be one of n, v, a, r; found '" +
                             std::string(cols[1]) + "'");
    }
    uint32_t offset = 0;
    std::string_view digits = cols[2];
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), offset);
    if (digits.empty() || ec != std::errc() ||
        ptr != digits.data() + digits.size() || offset > kMaxSynsetOffset) {
      throw LexiconError(source, line_no,
                         "synset offset '" + std::string(digits) +
                             "' is not a number of at most 8 digits");
    }
    auto lemmas = Split(cols[3], '|');
    for (std::string_view lemma : lemmas) {
      if (lemma.empty()) throw LexiconError(source, line_no, "empty lemma");
    }
    for (std::string_view lemma : lemmas) lex.Add(cols[0], *pos, offset, lemma);
  }
  return lex;
}

Lexicon Lexicon::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError(path, 0, "cannot open lexicon file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), path);
}

std::string_view Lexicon::BundledText() { return kBundledLexiconTsv; }

const Lexicon &Lexicon::Bundled() {
  static const Lexicon kBundled = Parse(kBundledLexiconTsv, "<bundled>");
  return kBundled;
}

std::optional<std::vector<std::string>> Lexicon::Lookup(std::string_view lang,
                                                        PartOfSpeech pos,
                                                        uint32_t offset) const {
  auto it = entries_.find({std::string(lang), pos, offset});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Lexicon::Preferred(std::string_view lang,
                                              PartOfSpeech pos,
                                              uint32_t offset) const {
  auto it = entries_.find({std::string(lang), pos, offset});
  if (it == entries_.end()) return std::nullopt;
  return it->second.front();
}

std::vector<uint32_t> Lexicon::ReverseLookup(std::string_view lang,
                                             PartOfSpeech pos,
                                             std::string_view lemma) const {
  auto it = reverse_.find({std::string(lang), pos, NormalizeLemma(lemma)});
  if (it == reverse_.end()) return {};
  return it->second;
}

}  // namespace ston
