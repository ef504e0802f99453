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

// Corpus statistics.
//
// A relation is an adpositional link (on a role or an action), a relative
// link, an adverbial link, or one identifier inside an agent or theme group.
// Pronoun antecedents are not relations. Distinct synsets are counted as
// (part of speech, offset) pairs across the whole corpus.

#ifndef STON_STATS_H_
#define STON_STATS_H_

#include <cstdint>
#include <span>
#include <string>

#include "ston/model.h"

namespace ston {

// Non-negative fraction kept in lowest terms.
struct Ratio {
  uint64_t num = 0;
  uint64_t den = 1;

  static Ratio Of(uint64_t num, uint64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string ToString() const;  // "7/3", or "2" when den == 1

  friend bool operator==(const Ratio &, const Ratio &) = default;
};

struct CorpusStats {
  uint64_t sentences = 0;
  uint64_t roles = 0;
  uint64_t actions = 0;
  uint64_t distinct_synsets = 0;
  uint64_t relations = 0;
  // Declared actions per sentence; 0 when there are no sentences.
  Ratio avg_actions_per_sentence;

  friend bool operator==(const CorpusStats &, const CorpusStats &) = default;
};

// Documents are counted in parallel and merged.
CorpusStats ComputeStats(std::span<const Document> docs);
// Single-threaded reference used to check the parallel path.
CorpusStats ComputeStatsSerial(std::span<const Document> docs);

// Aligned "name  value" lines.
std::string FormatStatsText(const CorpusStats &stats);
// Interchange (JSON) object with the six fields; the average is a string.
std::string FormatStatsTree(const CorpusStats &stats);

}  // namespace ston

#endif  // STON_STATS_H_
