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

// JSON interchange for programs that do not read STON.
//
//   {"roles": [...], "actions": [...], "sentences": [...]}
//
// Entry names mirror STON keys (id, syn, nam, qnt, def, adj, adv, rel, adp,
// pro, typ, ref, tns, prg, prf, neg, mod, agt, thm, advb, cmp, cls, act).
// Enumerations keep their STON spellings, synsets are integers, boolean flags
// are `true`, reference groups are arrays of arrays. Absent and default
// values are omitted, as in canonical STON.

#ifndef STON_INTERCHANGE_H_
#define STON_INTERCHANGE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ston/model.h"

namespace ston {

// Deterministic, two-space indented JSON. Throws InvalidDocumentError for
// documents with validator ERRORs.
std::string ToTree(const Document &doc);

struct TreeError {
  std::string path;  // JSON pointer-like, e.g. "/actions/0/tns"
  std::string message;

  std::string ToString() const { return path + ": " + message; }
};

struct TreeResult {
  std::optional<Document> document;  // set iff errors is empty
  std::vector<TreeError> errors;

  bool ok() const { return document.has_value(); }
};

TreeResult FromTree(std::string_view text);

}  // namespace ston

#endif  // STON_INTERCHANGE_H_
