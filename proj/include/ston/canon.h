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

// Canonical and minified STON writers.
//
// Canonical form has a fixed key order per block, two-space indentation, one
// attribute per line, default values omitted and synset offsets zero-padded
// to eight digits. Minified form drops every separator that is not needed to
// keep two tokens apart. Both parse back to the same Document.

#ifndef STON_CANON_H_
#define STON_CANON_H_

#include <string>

#include "ston/model.h"

namespace ston {

struct SerializeOptions {
  // When set, documents with validator ERRORs are rejected with
  // InvalidDocumentError. Formatting tools clear it to print any parsed text.
  bool require_valid = true;
};

std::string SerializeCanonical(const Document &doc,
                               const SerializeOptions &options = {});
std::string SerializeMin(const Document &doc,
                         const SerializeOptions &options = {});

}  // namespace ston

#endif  // STON_CANON_H_
