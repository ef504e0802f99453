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

#include "ston/canon.h"

#include <cstdio>

#include "ston/validator.h"

namespace ston {

namespace {

class Writer {
 public:
  explicit Writer(bool pretty) : pretty_(pretty) {}

  void Section(std::string_view name) {
    if (pretty_) {
      out_.append(name);
      out_.push_back('\n');
    } else {
      if (!out_.empty() && out_.back() != ' ') out_.push_back(' ');
      out_.append(name);
      out_.push_back(' ');
    }
  }

  void Open(std::string_view key) {
    Indent();
    out_.append(key);
    out_.append(":{");
    Newline();
    ++depth_;
  }

  void Close() {
    --depth_;
    Indent();
    out_.push_back('}');
    Newline();
  }

  void Attr(std::string_view key, std::string_view value) {
    Indent();
    out_.append(key);
    out_.append(pretty_ ? ": " : ":");
    out_.append(value);
    out_.push_back(';');
    Newline();
  }

  std::string Synset(const SynsetRef &s) const {
    if (!pretty_) return std::to_string(s.offset);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%08u", s.offset);
    return buf;
  }

  std::string List(const std::vector<std::vector<std::string>> &groups) const {
    std::string out = "[";
    for (size_t g = 0; g < groups.size(); ++g) {
      if (g > 0) out.append(pretty_ ? " | " : "|");
      for (size_t i = 0; i < groups[g].size(); ++i) {
        if (i > 0) out.append(pretty_ ? ", " : ",");
        out.append(groups[g][i]);
      }
    }
    out.push_back(']');
    return out;
  }

  std::string IdList(const std::vector<Identifier> &ids) const {
    std::vector<std::string> names;
    for (const auto &id : ids) names.push_back(id.str());
    return List({names});
  }

  std::string Groups(const ReferenceGroups &refs) const {
    std::vector<std::vector<std::string>> groups;
    for (const auto &group : refs.groups) {
      auto &names = groups.emplace_back();
      for (const auto &id : group) names.push_back(id.str());
    }
    return List(groups);
  }

  std::string SynsetList(const std::vector<SynsetRef> &synsets) const {
    std::vector<std::string> values;
    for (const auto &s : synsets) values.push_back(Synset(s));
    return List({values});
  }

  std::string Finish() {
    if (!pretty_ && !out_.empty() && out_.back() == ' ') out_.pop_back();
    return std::move(out_);
  }

 private:
  void Indent() {
    if (pretty_) out_.append(2 * depth_, ' ');
  }
  void Newline() {
    if (pretty_) out_.push_back('\n');
  }

  bool pretty_;
  int depth_ = 0;
  std::string out_;
};

void WriteModifier(Writer &w, std::string_view key, const SynsetRef &syn,
                   const std::vector<SynsetRef> &adverbs) {
  w.Open(key);
  w.Attr("syn", w.Synset(syn));
  if (!adverbs.empty()) w.Attr("adv", w.SynsetList(adverbs));
  w.Close();
}

void WriteAdposition(Writer &w, const AdpositionLink &adp) {
  w.Open("adp");
  w.Attr("typ", AdpositionCode(adp.type));
  w.Attr("ref", w.Groups(adp.refs));
  w.Close();
}

void WriteRole(Writer &w, const Role &r) {
  w.Open("r");
  w.Attr("id", r.id.str());
  if (r.syn) w.Attr("syn", w.Synset(*r.syn));
  if (r.name) w.Attr("nam", *r.name);
  if (!r.quantity.is_default()) w.Attr("qnt", FormatQuantity(r.quantity));
  if (r.defined) w.Attr("def", "Y");
  for (const auto &adj : r.adjectives) {
    WriteModifier(w, "adj", adj.syn, adj.adverbs);
  }
  for (const auto &rel : r.relatives) {
    w.Open("rel");
    w.Attr("typ", RelativeCode(rel.type));
    w.Attr("ref", w.IdList(rel.refs));
    w.Close();
  }
  for (const auto &adp : r.adpositions) WriteAdposition(w, adp);
  if (r.pronoun) {
    w.Open("pro");
    w.Attr("typ", EncodePronoun(*r.pronoun));
    if (!r.pronoun->refs.empty()) w.Attr("ref", w.IdList(r.pronoun->refs));
    w.Close();
  }
  w.Close();
}

void WriteAction(Writer &w, const Action &a) {
  w.Open("a");
  w.Attr("id", a.id.str());
  w.Attr("syn", w.Synset(a.syn));
  if (a.tense) w.Attr("tns", TenseCode(*a.tense));
  if (a.progressive) w.Attr("prg", "Y");
  if (a.perfect) w.Attr("prf", "Y");
  if (a.negated) w.Attr("neg", "Y");
  if (a.modality) w.Attr("mod", ModalityCode(*a.modality));
  if (a.agents) w.Attr("agt", w.Groups(*a.agents));
  if (a.themes) w.Attr("thm", w.Groups(*a.themes));
  for (const auto &advb : a.adverbs) {
    WriteModifier(w, "advb", advb.syn, advb.adverbs);
  }
  if (a.comparison) {
    const Comparison &c = *a.comparison;
    w.Open("cmp");
    w.Attr("typ", ComparisonCode(c.type));
    if (!c.refs.empty()) w.Attr("ref", w.IdList(c.refs));
    if (c.adjective) w.Attr("adj", w.Synset(*c.adjective));
    w.Close();
  }
  for (const auto &adp : a.adpositions) WriteAdposition(w, adp);
  for (const auto &cls : a.adverbials) {
    w.Open("cls");
    w.Attr("typ", AdverbialCode(cls.type));
    w.Attr("ref", w.IdList(cls.refs));
    w.Close();
  }
  w.Close();
}

void WriteSentence(Writer &w, const Sentence &s) {
  w.Open("s");
  w.Attr("typ", SentenceTypeCode(s.type));
  if (!s.actions.empty()) w.Attr("act", w.IdList(s.actions));
  w.Close();
}

std::string Serialize(const Document &doc, const SerializeOptions &options,
                      bool pretty) {
  if (options.require_valid) RequireValid(doc);
  Writer w(pretty);
  w.Section("@ston");
  w.Section("@roles");
  for (const auto &r : doc.roles) WriteRole(w, r);
  w.Section("@actions");
  for (const auto &a : doc.actions) WriteAction(w, a);
  w.Section("@sentences");
  for (const auto &s : doc.sentences) WriteSentence(w, s);
  w.Section("@end");
  return w.Finish();
}

}  // namespace

std::string SerializeCanonical(const Document &doc,
                               const SerializeOptions &options) {
  return Serialize(doc, options, true);
}

std::string SerializeMin(const Document &doc, const SerializeOptions &options) {
  return Serialize(doc, options, false);
}

}  // namespace ston
