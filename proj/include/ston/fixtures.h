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

// Hand-written corpus with expected outcomes.
//
// A fixture is a pair of files in one directory:
//
//   name.ston     the document
//   name.expect   expectations, one "key: value" per line
//
// Recognized keys:
//
//   diagnostics: none | CODE CODE ...   validator codes in report order
//   realize: <line>                     expected output line, repeatable
//   realize_contains: <fragment>        substring of the realized text
//
// A fixture without realize lines is not realization-tagged. '#' starts a
// comment line in the sidecar.

#ifndef STON_FIXTURES_H_
#define STON_FIXTURES_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace ston {

struct FixtureExpectation {
  std::vector<std::string> diagnostics;  // empty means clean
  std::vector<std::string> realize;
  std::vector<std::string> realize_contains;

  bool realize_tagged() const { return !realize.empty(); }
};

struct Fixture {
  std::string name;
  std::string text;
  FixtureExpectation expect;
};

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Loads every *.ston in `dir` with its sidecar, sorted by name. Throws
// FixtureError when a sidecar is missing or malformed.
std::vector<Fixture> FixtureInventory(const std::filesystem::path &dir);

FixtureExpectation ParseExpectation(const std::string &text,
                                    const std::string &source);

}  // namespace ston

#endif  // STON_FIXTURES_H_
