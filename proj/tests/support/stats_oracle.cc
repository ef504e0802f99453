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

#include "support/stats_oracle.h"

#include <set>
#include <string>
#include <utility>

#include "json.hpp"
#include "ston/interchange.h"

namespace ston::testing {

namespace {

using Json = nlohmann::json;
using Concept = std::pair<char, uint64_t>;

uint64_t CountGroupMembers(const Json &groups) {
  uint64_t n = 0;
  for (const auto &g : groups) n += g.size();
  return n;
}

void AddModifiers(const Json &block, const char *key, char pos,
                  std::set<Concept> *concepts) {
  if (!block.contains(key)) return;
  for (const auto &m : block[key]) {
    concepts->insert({pos, m["syn"].get<uint64_t>()});
    if (m.contains("adv")) {
      for (const auto &adv : m["adv"]) concepts->insert({'r', adv.get<uint64_t>()});
    }
  }
}

}  // namespace

OracleCounts CountByTraversal(const std::vector<Document> &docs) {
  OracleCounts c;
  std::set<Concept> concepts;
  for (const auto &doc : docs) {
    Json tree = Json::parse(ToTree(doc));
    for (const auto &role : tree["roles"]) {
      ++c.roles;
      if (role.contains("syn")) concepts.insert({'n', role["syn"].get<uint64_t>()});
      AddModifiers(role, "adj", 'a', &concepts);
      if (role.contains("rel")) c.relations += role["rel"].size();
      if (role.contains("adp")) c.relations += role["adp"].size();
    }
    for (const auto &action : tree["actions"]) {
      ++c.actions;
      concepts.insert({'v', action["syn"].get<uint64_t>()});
      AddModifiers(action, "advb", 'r', &concepts);
      if (action.contains("cmp") && action["cmp"].contains("adj")) {
        concepts.insert({'a', action["cmp"]["adj"].get<uint64_t>()});
      }
      if (action.contains("adp")) c.relations += action["adp"].size();
      if (action.contains("cls")) c.relations += action["cls"].size();
      if (action.contains("agt")) c.relations += CountGroupMembers(action["agt"]);
      if (action.contains("thm")) c.relations += CountGroupMembers(action["thm"]);
    }
    c.sentences += tree["sentences"].size();
  }
  c.distinct_synsets = concepts.size();
  if (c.sentences == 0) return c;
  // Reduce by trial division rather than std::gcd, to stay independent.
  uint64_t num = c.actions, den = c.sentences;
  for (uint64_t d = 2; d <= den; ++d) {
    while (num % d == 0 && den % d == 0) {
      num /= d;
      den /= d;
    }
  }
  c.avg_num = num;
  c.avg_den = den;
  return c;
}

}  // namespace ston::testing
