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

#include "ston/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "ston/syntax.h"

namespace ston {

ParseTiming MeasureParse(std::string_view text, int iterations) {
  ParseTiming t;
  iterations = std::max(iterations, 1);
  for (int i = 0; i < iterations; ++i) {
    auto start = std::chrono::steady_clock::now();
    ParseResult r = Parse(text);
    auto stop = std::chrono::steady_clock::now();
    t.iteration_ms.push_back(
        std::chrono::duration<double, std::milli>(stop - start).count());
    if (i == 0) {
      t.parsed = r.ok();
      t.sentences = r.document ? r.document->sentences.size() : 0;
    }
  }
  for (double ms : t.iteration_ms) t.total_ms += ms;
  t.mean_ms = t.total_ms / static_cast<double>(iterations);
  if (t.sentences > 0) t.per_sentence_ms = t.mean_ms / static_cast<double>(t.sentences);
  return t;
}

std::string FormatTiming(const ParseTiming &t) {
  std::string out;
  char line[128];
  for (size_t i = 0; i < t.iteration_ms.size(); ++i) {
    std::snprintf(line, sizeof(line), "iteration %zu: %.3f ms\n", i + 1,
                  t.iteration_ms[i]);
    out += line;
  }
  std::snprintf(line, sizeof(line),
                "total_ms=%.3f mean_ms=%.3f per_sentence_ms=%.4f\n", t.total_ms,
                t.mean_ms, t.per_sentence_ms);
  out += line;
  return out;
}

}  // namespace ston
