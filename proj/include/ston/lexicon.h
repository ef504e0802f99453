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

// Synset -> lemma store.
//
// The on-disk format is UTF-8 TSV with one synset per row:
//
//   lang <TAB> pos <TAB> offset <TAB> lemma1|lemma2|...
//
// pos is one of n, v, a, r. Lines starting with '#' and blank lines are
// ignored. The first lemma of a row is the preferred surface form; rows that
// repeat a (lang, pos, offset) key append their new lemmas.

#ifndef STON_LEXICON_H_
#define STON_LEXICON_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ston/model.h"

namespace ston {

class LexiconError : public std::runtime_error {
 public:
  LexiconError(std::string source, int line, const std::string &message);

  const std::string &source() const { return source_; }
  int line() const { return line_; }  // 0 when not tied to a line

 private:
  std::string source_;
  int line_;
};

char PosLetter(PartOfSpeech pos);
std::optional<PartOfSpeech> PosFromLetter(char letter);

class Lexicon {
 public:
  // Throws LexiconError on unreadable files or malformed rows.
  static Lexicon Load(const std::string &path);
  static Lexicon Parse(std::string_view tsv, const std::string &source = "<memory>");
  // The mini-lexicon shipped with the toolkit.
  static const Lexicon &Bundled();
  static std::string_view BundledText();

  void Add(std::string_view lang, PartOfSpeech pos, uint32_t offset,
           std::string_view lemma);

  // Lemmas for a synset, preferred first; nullopt when the synset is unknown
  // in that language.
  std::optional<std::vector<std::string>> Lookup(std::string_view lang,
                                                 PartOfSpeech pos,
                                                 uint32_t offset) const;
  std::optional<std::string> Preferred(std::string_view lang, PartOfSpeech pos,
                                       uint32_t offset) const;

  // Offsets whose lemma list contains `lemma`, ascending. Matching ignores
  // case and treats '_' and ' ' as equal.
  std::vector<uint32_t> ReverseLookup(std::string_view lang, PartOfSpeech pos,
                                      std::string_view lemma) const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Normalized form used for reverse matching.
  static std::string NormalizeLemma(std::string_view lemma);

 private:
  using Key = std::tuple<std::string, PartOfSpeech, uint32_t>;
  using ReverseKey = std::tuple<std::string, PartOfSpeech, std::string>;

  std::map<Key, std::vector<std::string>> entries_;
  std::map<ReverseKey, std::vector<uint32_t>> reverse_;
};

}  // namespace ston

#endif  // STON_LEXICON_H_
