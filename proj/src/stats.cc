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

#include "ston/stats.h"

#include <omp.h>

#include <cstdio>
#include <numeric>
#include <set>
#include <vector>

#include "json.hpp"

namespace ston {

namespace {

using SynsetSet = std::set<SynsetRef>;

// Per-document counters before the synset sets are merged.
struct Partial {
  uint64_t sentences = 0;
  uint64_t roles = 0;
  uint64_t actions = 0;
  uint64_t relations = 0;
  SynsetSet synsets;

  void Merge(Partial &&other) {
    sentences += other.sentences;
    roles += other.roles;
    actions += other.actions;
    relations += other.relations;
    synsets.merge(other.synsets);
  }
};

void CountDocument(const Document &doc, Partial *p) {
  p->sentences += doc.sentences.size();
  p->roles += doc.roles.size();
  p->actions += doc.actions.size();
  for (const auto &role : doc.roles) {
    if (role.syn) p->synsets.insert(*role.syn);
    for (const auto &adj : role.adjectives) {
      p->synsets.insert(adj.syn);
      p->synsets.insert(adj.adverbs.begin(), adj.adverbs.end());
    }
    p->relations += role.relatives.size() + role.adpositions.size();
  }
  for (const auto &action : doc.actions) {
    p->synsets.insert(action.syn);
    for (const auto &adv : action.adverbs) {
      p->synsets.insert(adv.syn);
      p->synsets.insert(adv.adverbs.begin(), adv.adverbs.end());
    }
    if (action.comparison && action.comparison->adjective) {
      p->synsets.insert(*action.comparison->adjective);
    }
    p->relations += action.adpositions.size() + action.adverbials.size();
    if (action.agents) p->relations += action.agents->CountReferences();
    if (action.themes) p->relations += action.themes->CountReferences();
  }
}

CorpusStats Finish(const Partial &p) {
  CorpusStats s;
  s.sentences = p.sentences;
  s.roles = p.roles;
  s.actions = p.actions;
  s.relations = p.relations;
  s.distinct_synsets = p.synsets.size();
  s.avg_actions_per_sentence =
      p.sentences == 0 ? Ratio{} : Ratio::Of(p.actions, p.sentences);
  return s;
}

}  // namespace

Ratio Ratio::Of(uint64_t num, uint64_t den) {
  if (den == 0) return {};
  uint64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

std::string Ratio::ToString() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

CorpusStats ComputeStatsSerial(std::span<const Document> docs) {
  Partial total;
  for (const auto &doc : docs) CountDocument(doc, &total);
  return Finish(total);
}

CorpusStats ComputeStats(std::span<const Document> docs) {
  const int n = static_cast<int>(docs.size());
  std::vector<Partial> partials(static_cast<size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    Partial &mine = partials[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
    for (int i = 0; i < n; ++i) CountDocument(docs[static_cast<size_t>(i)], &mine);
  }
  Partial total;
  for (auto &p : partials) total.Merge(std::move(p));
  return Finish(total);
}

std::string FormatStatsText(const CorpusStats &stats) {
  const std::pair<const char *, std::string> rows[] = {
      {"sentences", std::to_string(stats.sentences)},
      {"roles", std::to_string(stats.roles)},
      {"actions", std::to_string(stats.actions)},
      {"distinct_synsets", std::to_string(stats.distinct_synsets)},
      {"relations", std::to_string(stats.relations)},
      {"avg_actions_per_sentence", stats.avg_actions_per_sentence.ToString()},
  };
  std::string out;
  char line[96];
  for (const auto &[name, value] : rows) {
    std::snprintf(line, sizeof(line), "%-26s%s\n", name, value.c_str());
    out += line;
  }
  return out;
}

std::string FormatStatsTree(const CorpusStats &stats) {
  nlohmann::ordered_json j;
  j["sentences"] = stats.sentences;
  j["roles"] = stats.roles;
  j["actions"] = stats.actions;
  j["distinct_synsets"] = stats.distinct_synsets;
  j["relations"] = stats.relations;
  j["avg_actions_per_sentence"] = stats.avg_actions_per_sentence.ToString();
  return j.dump(2) + "\n";
}

}  // namespace ston
