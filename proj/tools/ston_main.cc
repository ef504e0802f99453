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

// Command-line front end for the STON toolkit.
//
// Exit codes: 0 success, 1 validation errors, 2 parse errors, 3 I/O or
// lexicon errors, 64 usage errors. Every file argument accepts "-" for
// standard input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ston/bench.h"
#include "ston/canon.h"
#include "ston/encoder.h"
#include "ston/interchange.h"
#include "ston/lexicon.h"
#include "ston/realizer.h"
#include "ston/stats.h"
#include "ston/syntax.h"
#include "ston/validator.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitIo = 3;
constexpr int kExitUsage = 64;

// Thrown to unwind with an exit code after a message has been printed.
struct Exit {
  int code;
};

std::string ReadInput(const std::string &path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": cannot open file\n";
    throw Exit{kExitIo};
  }
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) {
    std::cerr << path << ": cannot write file\n";
    throw Exit{kExitIo};
  }
}

// Prints parse errors prefixed by the file name; returns false on errors.
bool ReportParse(const std::string &path, const ston::ParseResult &r) {
  for (const auto &e : r.errors) std::cerr << path << ":" << e.ToString() << "\n";
  return r.ok();
}

ston::Document ParseOrExit(const std::string &path, const std::string &text) {
  ston::ParseResult r = ston::Parse(text);
  if (!ReportParse(path, r)) throw Exit{kExitParse};
  return std::move(*r.document);
}

void RequireValidOrExit(const std::string &path, const ston::Document &doc) {
  auto diagnostics = ston::Validate(doc);
  if (!ston::HasErrors(diagnostics)) return;
  for (const auto &d : diagnostics) std::cerr << path << ": " << d.ToString() << "\n";
  throw Exit{kExitInvalid};
}

const ston::Lexicon &ResolveLexicon(const std::string &flag,
                                    std::optional<ston::Lexicon> *storage) {
  std::string path = flag;
  if (path.empty()) {
    if (const char *env = std::getenv("STON_LEXICON"); env && *env) path = env;
  }
  if (path.empty()) return ston::Lexicon::Bundled();
  try {
    storage->emplace(ston::Lexicon::Load(path));
  } catch (const ston::LexiconError &e) {
    std::cerr << e.what() << "\n";
    throw Exit{kExitIo};
  }
  return **storage;
}

int RunValidate(const std::vector<std::string> &files, const std::string &format) {
  std::vector<std::string> texts;
  for (const auto &f : files) texts.push_back(ReadInput(f));
  auto parsed = ston::ParseAll(texts);
  int code = kExitOk;
  nlohmann::ordered_json tree = nlohmann::ordered_json::object();
  for (size_t i = 0; i < files.size(); ++i) {
    if (!ReportParse(files[i], parsed[i])) {
      code = kExitParse;
      continue;
    }
    auto diagnostics = ston::Validate(*parsed[i].document);
    if (ston::HasErrors(diagnostics) && code == kExitOk) code = kExitInvalid;
    if (format == "tree") {
      auto &list = tree[files[i]] = nlohmann::ordered_json::array();
      for (const auto &d : diagnostics) {
        list.push_back({{"severity", d.severity == ston::Severity::kError
                                         ? "ERROR"
                                         : "WARNING"},
                        {"code", d.code},
                        {"subject", d.subject},
                        {"message", d.message}});
      }
    } else {
      for (const auto &d : diagnostics) {
        std::cerr << files[i] << ": " << d.ToString() << "\n";
      }
    }
  }
  if (format == "tree") std::cout << tree.dump(2) << "\n";
  return code;
}

int RunFormat(const std::string &file, bool minified, bool in_place) {
  if (in_place && file == "-") {
    std::cerr << "-w needs a file, not standard input\n";
    return kExitUsage;
  }
  ston::Document doc = ParseOrExit(file, ReadInput(file));
  ston::SerializeOptions options{.require_valid = false};
  std::string text = minified ? ston::SerializeMin(doc, options) + "\n"
                              : ston::SerializeCanonical(doc, options);
  if (in_place) {
    WriteFile(file, text);
  } else {
    std::cout << text;
  }
  return kExitOk;
}

int RunStats(const std::vector<std::string> &files, const std::string &format) {
  std::vector<ston::Document> docs;
  for (const auto &f : files) {
    docs.push_back(ParseOrExit(f, ReadInput(f)));
    RequireValidOrExit(f, docs.back());
  }
  ston::CorpusStats stats = ston::ComputeStats(docs);
  std::cout << (format == "tree" ? ston::FormatStatsTree(stats)
                                 : ston::FormatStatsText(stats));
  return kExitOk;
}

int RunExport(const std::string &file) {
  ston::Document doc = ParseOrExit(file, ReadInput(file));
  RequireValidOrExit(file, doc);
  std::cout << ston::ToTree(doc);
  return kExitOk;
}

int RunImport(const std::string &file) {
  ston::TreeResult r = ston::FromTree(ReadInput(file));
  if (!r.ok()) {
    for (const auto &e : r.errors) std::cerr << file << ":" << e.ToString() << "\n";
    return kExitParse;
  }
  RequireValidOrExit(file, *r.document);
  std::cout << ston::SerializeCanonical(*r.document);
  return kExitOk;
}

int RunRealize(const std::string &file, const std::string &lexicon_path,
               const std::string &lang) {
  ston::Document doc = ParseOrExit(file, ReadInput(file));
  std::optional<ston::Lexicon> storage;
  const ston::Lexicon &lex = ResolveLexicon(lexicon_path, &storage);
  ston::RealizeResult r = ston::RealizeDocument(doc, lex, lang);
  std::cout << r.text;
  int code = kExitOk;
  for (const auto &e : r.errors) {
    std::cerr << file << ": ";
    if (e.sentence) std::cerr << "sentence " << *e.sentence << ": ";
    std::cerr << e.message << "\n";
    switch (e.kind) {
      case ston::RealizeError::Kind::kInvalidDocument: code = kExitInvalid; break;
      case ston::RealizeError::Kind::kSynsetNotFound: code = kExitIo; break;
      case ston::RealizeError::Kind::kUnsupportedLanguage: code = kExitUsage; break;
    }
  }
  return code;
}

int RunEncode(const std::string &file, const std::string &lexicon_path,
              bool strict) {
  std::optional<ston::Lexicon> storage;
  const ston::Lexicon &lex = ResolveLexicon(lexicon_path, &storage);
  ston::Encoder encoder(lex, {.strict_senses = strict});
  std::istringstream lines(ReadInput(file));
  std::string line;
  int line_no = 0;
  int code = kExitOk;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ston::EncodeResult r = encoder.Add(line);
    for (const auto &w : r.warnings) {
      std::cerr << file << ":" << line_no << ": warning: " << w.code << ": "
                << w.message << "\n";
    }
    for (const auto &e : r.errors) {
      std::cerr << file << ":" << line_no << ": " << e.code << ": " << e.message
                << "\n";
      code = kExitParse;
    }
  }
  std::cout << ston::SerializeCanonical(encoder.document(),
                                        {.require_valid = false});
  return code;
}

int RunBench(const std::string &file, int iterations) {
  std::string text = ReadInput(file);
  ston::ParseTiming t = ston::MeasureParse(text, iterations);
  if (!t.parsed) {
    ParseOrExit(file, text);
    return kExitParse;
  }
  std::cout << ston::FormatTiming(t);
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "STON toolkit: parse, validate, format, convert, realize and encode "
      "STON documents.\n\n"
      "Lexicon resolution for realize/encode: --lexicon PATH, then the "
      "STON_LEXICON environment variable, then the bundled mini-lexicon.",
      "ston"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string file = "-";
  std::string format = "text";
  std::string lexicon;
  std::string lang = "en";
  bool in_place = false;
  bool strict = false;
  int iterations = 10;

  auto add_format = [&](CLI::App *cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "tree"}));
  };

  auto *validate = app.add_subcommand("validate", "Report diagnostics; exit 1 on errors");
  validate->add_option("files", files, "STON files")->required();
  add_format(validate);

  auto *fmt = app.add_subcommand("fmt", "Print the canonical form");
  fmt->add_option("file", file, "STON file")->required();
  fmt->add_flag("-w", in_place, "Rewrite the file in place");

  auto *min = app.add_subcommand("min", "Print the minified form");
  min->add_option("file", file, "STON file")->required();
  min->add_flag("-w", in_place, "Rewrite the file in place");

  auto *stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("files", files, "STON files")->required();
  add_format(stats);

  auto *exp = app.add_subcommand("export", "Convert STON to the JSON interchange form");
  exp->add_option("file", file, "STON file")->required();

  auto *imp = app.add_subcommand("import", "Convert the JSON interchange form to STON");
  imp->add_option("file", file, "JSON file")->required();

  auto *realize = app.add_subcommand("realize", "Render sentences as English text");
  realize->add_option("file", file, "STON file")->required();
  realize->add_option("--lexicon", lexicon, "Lexicon TSV");
  realize->add_option("--lang", lang, "Output language")->default_val("en");

  auto *encode = app.add_subcommand(
      "encode", "Encode simple English sentences, one per line, into STON");
  encode->add_option("file", file, "Text file (default: standard input)");
  encode->add_option("--lexicon", lexicon, "Lexicon TSV");
  encode->add_flag("--strict", strict, "Reject words with several senses");

  auto *bench = app.add_subcommand("bench", "Time the parser");
  bench->add_option("file", file, "STON file")->required();
  bench->add_option("--iterations", iterations, "Parse repetitions")
      ->default_val(10)
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return RunValidate(files, format);
    if (*fmt) return RunFormat(file, false, in_place);
    if (*min) return RunFormat(file, true, in_place);
    if (*stats) return RunStats(files, format);
    if (*exp) return RunExport(file);
    if (*imp) return RunImport(file);
    if (*realize) return RunRealize(file, lexicon, lang);
    if (*encode) return RunEncode(file, lexicon, strict);
    if (*bench) return RunBench(file, iterations);
  } catch (const Exit &e) {
    return e.code;
  }
  return kExitUsage;
}
