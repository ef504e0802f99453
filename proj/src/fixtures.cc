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

#include "ston/fixtures.h"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ston {

namespace {

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string Trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

FixtureExpectation ParseExpectation(const std::string &text,
                                    const std::string &source) {
  FixtureExpectation out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool saw_diagnostics = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    size_t colon = trimmed.find(':');
    if (colon == std::string::npos) {
      throw FixtureError(source + ":" + std::to_string(line_no) +
                         ": expected 'key: value'");
    }
    std::string key = Trim(trimmed.substr(0, colon));
    std::string value = Trim(trimmed.substr(colon + 1));
    if (key == "diagnostics") {
      saw_diagnostics = true;
      if (value == "none") continue;
      std::istringstream codes(value);
      std::string code;
      while (codes >> code) out.diagnostics.push_back(code);
    } else if (key == "realize") {
      out.realize.push_back(value);
    } else if (key == "realize_contains") {
      out.realize_contains.push_back(value);
    } else {
      throw FixtureError(source + ":" + std::to_string(line_no) +
                         ": unknown key '" + key + "'");
    }
  }
  if (!saw_diagnostics) throw FixtureError(source + ": missing 'diagnostics'");
  return out;
}

std::vector<Fixture> FixtureInventory(const std::filesystem::path &dir) {
  std::vector<Fixture> out;
  std::error_code ec;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw FixtureError("cannot list " + dir.string() + ": " + ec.message());
  for (const auto &entry : it) {
    if (entry.path().extension() != ".ston") continue;
    Fixture f;
    f.name = entry.path().stem().string();
    f.text = ReadFile(entry.path());
    auto sidecar = entry.path();
    sidecar.replace_extension(".expect");
    if (!std::filesystem::exists(sidecar)) {
      throw FixtureError("missing sidecar " + sidecar.string());
    }
    f.expect = ParseExpectation(ReadFile(sidecar), sidecar.string());
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const Fixture &a, const Fixture &b) { return a.name < b.name; });
  return out;
}

}  // namespace ston
