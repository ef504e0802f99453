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

#include "ston/validator.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ston {

namespace {

enum class Kind { kRole, kAction };

// What a reference field may name.
enum class Accepts { kRoles, kActions, kEither };

struct Entry {
  Diagnostic diagnostic;
  size_t position;  // roles first, then actions, then sentences
};

class Validator {
 public:
  explicit Validator(const Document &doc) : doc_(doc) {}

  std::vector<Diagnostic> Run() {
    CollectDeclarations();
    for (size_t i = 0; i < doc_.roles.size(); ++i) CheckRole(i);
    for (size_t i = 0; i < doc_.actions.size(); ++i) CheckAction(i);
    for (size_t i = 0; i < doc_.sentences.size(); ++i) CheckSentence(i);
    CheckUsage();

    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const Entry &a, const Entry &b) {
                       if (a.position != b.position) return a.position < b.position;
                       return a.diagnostic.code < b.diagnostic.code;
                     });
    std::vector<Diagnostic> out;
    out.reserve(entries_.size());
    for (auto &e : entries_) out.push_back(std::move(e.diagnostic));
    return out;
  }

 private:
  size_t RolePosition(size_t i) const { return i; }
  size_t ActionPosition(size_t i) const { return doc_.roles.size() + i; }
  size_t SentencePosition(size_t i) const {
    return doc_.roles.size() + doc_.actions.size() + i;
  }

  void Add(Severity severity, std::string code, std::string subject,
           std::string message, size_t position) {
    entries_.push_back({{severity, std::move(code), std::move(subject),
                         std::move(message)},
                        position});
  }

  void CollectDeclarations() {
    auto declare = [&](const Identifier &id, Kind kind, size_t position) {
      auto [it, inserted] = kinds_.emplace(id, kind);
      if (!inserted) {
        Add(Severity::kError, "E01", id.str(),
            "identifier '" + id.str() + "' is declared more than once", position);
      }
    };
    for (size_t i = 0; i < doc_.roles.size(); ++i) {
      declare(doc_.roles[i].id, Kind::kRole, RolePosition(i));
    }
    for (size_t i = 0; i < doc_.actions.size(); ++i) {
      declare(doc_.actions[i].id, Kind::kAction, ActionPosition(i));
    }
  }

  void CheckRef(const Identifier &ref, Accepts accepts, std::string_view field,
                const std::string &subject, size_t position) {
    auto it = kinds_.find(ref);
    if (it == kinds_.end()) {
      Add(Severity::kError, "E02", subject,
          std::string(field) + " references undeclared '" + ref.str() + "'",
          position);
      return;
    }
    if (it->second == Kind::kRole) {
      referenced_roles_.insert(ref);
    } else {
      referenced_actions_.insert(ref);
    }
    bool ok = accepts == Accepts::kEither ||
              (accepts == Accepts::kRoles) == (it->second == Kind::kRole);
    if (!ok) {
      Add(Severity::kError, "E03", subject,
          std::string(field) + " must reference " +
              (accepts == Accepts::kRoles ? "a role" : "an action") + ", but '" +
              ref.str() + "' is " +
              (it->second == Kind::kRole ? "a role" : "an action"),
          position);
    }
  }

  template <typename Range>
  void CheckRefs(const Range &refs, Accepts accepts, std::string_view field,
                 const std::string &subject, size_t position) {
    for (const Identifier &ref : refs) {
      CheckRef(ref, accepts, field, subject, position);
    }
  }

  void CheckGroups(const ReferenceGroups &groups, Accepts accepts,
                   std::string_view field, const std::string &subject,
                   size_t position) {
    for (const auto &group : groups.groups) {
      CheckRefs(group, accepts, field, subject, position);
    }
  }

  void CheckRole(size_t i) {
    const Role &r = doc_.roles[i];
    const std::string &subject = r.id.str();
    size_t pos = RolePosition(i);
    if (!r.syn && !r.pronoun) {
      Add(Severity::kError, "E04", subject,
          "role '" + subject + "' has neither a synset nor a pronoun", pos);
    }
    if (r.name && !r.syn) {
      Add(Severity::kError, "E05", subject,
          "role '" + subject + "' has a proper name but no hypernym synset", pos);
    }
    if (r.name && r.pronoun) {
      Add(Severity::kWarning, "W02", subject,
          "role '" + subject + "' carries both a proper name and a pronoun", pos);
    }
    for (const auto &rel : r.relatives) {
      CheckRefs(rel.refs, Accepts::kActions, "rel.ref", subject, pos);
    }
    for (const auto &adp : r.adpositions) {
      CheckGroups(adp.refs, Accepts::kRoles, "adp.ref", subject, pos);
    }
    if (r.pronoun) {
      CheckRefs(r.pronoun->refs, Accepts::kRoles, "pro.ref", subject, pos);
    }
  }

  void CheckAction(size_t i) {
    const Action &a = doc_.actions[i];
    const std::string &subject = a.id.str();
    size_t pos = ActionPosition(i);
    if (a.agents) CheckGroups(*a.agents, Accepts::kEither, "agt", subject, pos);
    if (a.themes) CheckGroups(*a.themes, Accepts::kEither, "thm", subject, pos);
    for (const auto &adp : a.adpositions) {
      CheckGroups(adp.refs, Accepts::kRoles, "adp.ref", subject, pos);
    }
    for (const auto &cls : a.adverbials) {
      CheckRefs(cls.refs, Accepts::kActions, "cls.ref", subject, pos);
    }
    if (a.comparison) {
      CheckRefs(a.comparison->refs, Accepts::kRoles, "cmp.ref", subject, pos);
      if (!a.comparison->is_superlative() && a.comparison->refs.empty()) {
        Add(Severity::kError, "E06", subject,
            "comparison '" + std::string(ComparisonCode(a.comparison->type)) +
                "' of action '" + subject + "' needs a reference",
            pos);
      }
    }
  }

  void CheckSentence(size_t i) {
    const Sentence &s = doc_.sentences[i];
    std::string subject = "sentence[" + std::to_string(i) + "]";
    size_t pos = SentencePosition(i);
    if (s.actions.empty()) {
      Add(Severity::kError, "E07", subject, subject + " lists no actions", pos);
    }
    CheckRefs(s.actions, Accepts::kActions, "act", subject, pos);
    for (const auto &id : s.actions) sentence_actions_.insert(id);
  }

  void CheckUsage() {
    for (size_t i = 0; i < doc_.roles.size(); ++i) {
      const Identifier &id = doc_.roles[i].id;
      if (!referenced_roles_.contains(id)) {
        Add(Severity::kWarning, "W01", id.str(),
            "role '" + id.str() + "' is never referenced", RolePosition(i));
      }
    }
    for (size_t i = 0; i < doc_.actions.size(); ++i) {
      const Identifier &id = doc_.actions[i].id;
      if (!referenced_actions_.contains(id) && !sentence_actions_.contains(id)) {
        Add(Severity::kWarning, "W03", id.str(),
            "action '" + id.str() + "' is used by no sentence and no link",
            ActionPosition(i));
      }
    }
  }

  const Document &doc_;
  std::unordered_map<Identifier, Kind> kinds_;
  // Filled by links between blocks; sentence references are tracked apart.
  std::unordered_set<Identifier> referenced_roles_;
  std::unordered_set<Identifier> referenced_actions_;
  std::unordered_set<Identifier> sentence_actions_;
  std::vector<Entry> entries_;
};

}  // namespace

std::string Diagnostic::ToString() const {
  return std::string(severity == Severity::kError ? "error" : "warning") + " " +
         code + " [" + subject + "]: " + message;
}

std::vector<Diagnostic> Validate(const Document &doc) {
  return Validator(doc).Run();
}

bool HasErrors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic &d) { return d.severity == Severity::kError; });
}

InvalidDocumentError::InvalidDocumentError(std::vector<Diagnostic> diagnostics)
    : std::invalid_argument(
          diagnostics.empty()
              ? std::string("document is not exchange-valid")
              : "document is not exchange-valid: " + diagnostics.front().ToString()),
      diagnostics_(std::move(diagnostics)) {}

void RequireValid(const Document &doc) {
  auto diagnostics = Validate(doc);
  if (HasErrors(diagnostics)) throw InvalidDocumentError(std::move(diagnostics));
}

std::vector<std::vector<Diagnostic>> ValidateAllSerial(
    std::span<const Document> docs) {
  std::vector<std::vector<Diagnostic>> out;
  out.reserve(docs.size());
  for (const auto &d : docs) out.push_back(Validate(d));
  return out;
}

std::vector<std::vector<Diagnostic>> ValidateAll(std::span<const Document> docs) {
  std::vector<std::vector<Diagnostic>> out(docs.size());
  const auto n = static_cast<std::ptrdiff_t>(docs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = Validate(docs[i]);
  return out;
}

}  // namespace ston
