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

// Wall-clock parse timing, repeated over a fixed number of iterations.

#ifndef STON_BENCH_H_
#define STON_BENCH_H_

#include <string>
#include <string_view>
#include <vector>

namespace ston {

struct ParseTiming {
  std::vector<double> iteration_ms;
  double total_ms = 0;
  double mean_ms = 0;
  double per_sentence_ms = 0;  // mean_ms / sentences, 0 without sentences
  size_t sentences = 0;
  bool parsed = false;  // false when the text has parse errors
};

// Parses `text` `iterations` times (at least once).
ParseTiming MeasureParse(std::string_view text, int iterations);

// "iteration 1: 0.123 ms" lines followed by the summary line
// "total_ms=... mean_ms=... per_sentence_ms=...".
std::string FormatTiming(const ParseTiming &t);

}  // namespace ston

#endif  // STON_BENCH_H_
