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

#ifndef STON_VALIDATOR_H_
#define STON_VALIDATOR_H_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ston/model.h"

namespace ston {

enum class Severity { kError, kWarning };

// Validator codes. These are stable public identifiers.
//
//   E01 duplicate identifier          W01 unreferenced role
//   E02 dangling reference            W02 role with both nam and pronoun
//   E03 reference of the wrong kind   W03 orphan action
//   E04 role without syn or pronoun
//   E05 nam without syn
//   E06 L/M/EQ comparison without refs
//   E07 sentence without actions
struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string subject;  // identifier, or "sentence[i]"
  std::string message;

  std::string ToString() const;

  friend bool operator==(const Diagnostic &, const Diagnostic &) = default;
};

// Checks references, kinds and attribute constraints. Diagnostics are ordered
// by the declaration order of their subject (roles, actions, sentences), then
// by code.
std::vector<Diagnostic> Validate(const Document &doc);

bool HasErrors(std::span<const Diagnostic> diagnostics);

// Thrown by operations that require an exchange-valid document.
class InvalidDocumentError : public std::invalid_argument {
 public:
  explicit InvalidDocumentError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic> &diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Throws InvalidDocumentError when Validate reports an ERROR.
void RequireValid(const Document &doc);

// Validates many documents in parallel; ValidateAllSerial is the reference.
std::vector<std::vector<Diagnostic>> ValidateAll(std::span<const Document> docs);
std::vector<std::vector<Diagnostic>> ValidateAllSerial(
    std::span<const Document> docs);

}  // namespace ston

#endif  // STON_VALIDATOR_H_
