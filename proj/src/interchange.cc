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

#include "ston/interchange.h"

#include <algorithm>
#include <initializer_list>

#include "json.hpp"
#include "ston/validator.h"

namespace ston {

namespace {

using Json = nlohmann::ordered_json;

// ---- export ----------------------------------------------------------------

Json IdArray(const std::vector<Identifier> &ids) {
  Json out = Json::array();
  for (const auto &id : ids) out.push_back(id.str());
  return out;
}

Json GroupArray(const ReferenceGroups &refs) {
  Json out = Json::array();
  for (const auto &group : refs.groups) out.push_back(IdArray(group));
  return out;
}

Json SynsetArray(const std::vector<SynsetRef> &synsets) {
  Json out = Json::array();
  for (const auto &s : synsets) out.push_back(s.offset);
  return out;
}

Json Modifier(const SynsetRef &syn, const std::vector<SynsetRef> &adverbs) {
  Json out = Json::object();
  out["syn"] = syn.offset;
  if (!adverbs.empty()) out["adv"] = SynsetArray(adverbs);
  return out;
}

Json Adpositions(const std::vector<AdpositionLink> &links) {
  Json out = Json::array();
  for (const auto &adp : links) {
    out.push_back(
        {{"typ", AdpositionCode(adp.type)}, {"ref", GroupArray(adp.refs)}});
  }
  return out;
}

Json ExportRole(const Role &r) {
  Json out = Json::object();
  out["id"] = r.id.str();
  if (r.syn) out["syn"] = r.syn->offset;
  if (r.name) out["nam"] = *r.name;
  if (!r.quantity.is_default()) out["qnt"] = FormatQuantity(r.quantity);
  if (r.defined) out["def"] = true;
  if (!r.adjectives.empty()) {
    Json adj = Json::array();
    for (const auto &a : r.adjectives) adj.push_back(Modifier(a.syn, a.adverbs));
    out["adj"] = std::move(adj);
  }
  if (!r.relatives.empty()) {
    Json rel = Json::array();
    for (const auto &link : r.relatives) {
      rel.push_back({{"typ", RelativeCode(link.type)}, {"ref", IdArray(link.refs)}});
    }
    out["rel"] = std::move(rel);
  }
  if (!r.adpositions.empty()) out["adp"] = Adpositions(r.adpositions);
  if (r.pronoun) {
    Json pro = Json::object();
    pro["typ"] = EncodePronoun(*r.pronoun);
    if (!r.pronoun->refs.empty()) pro["ref"] = IdArray(r.pronoun->refs);
    out["pro"] = std::move(pro);
  }
  return out;
}

Json ExportAction(const Action &a) {
  Json out = Json::object();
  out["id"] = a.id.str();
  out["syn"] = a.syn.offset;
  if (a.tense) out["tns"] = TenseCode(*a.tense);
  if (a.progressive) out["prg"] = true;
  if (a.perfect) out["prf"] = true;
  if (a.negated) out["neg"] = true;
  if (a.modality) out["mod"] = ModalityCode(*a.modality);
  if (a.agents) out["agt"] = GroupArray(*a.agents);
  if (a.themes) out["thm"] = GroupArray(*a.themes);
  if (!a.adverbs.empty()) {
    Json advb = Json::array();
    for (const auto &b : a.adverbs) advb.push_back(Modifier(b.syn, b.adverbs));
    out["advb"] = std::move(advb);
  }
  if (a.comparison) {
    Json cmp = Json::object();
    cmp["typ"] = ComparisonCode(a.comparison->type);
    if (!a.comparison->refs.empty()) cmp["ref"] = IdArray(a.comparison->refs);
    if (a.comparison->adjective) cmp["adj"] = a.comparison->adjective->offset;
    out["cmp"] = std::move(cmp);
  }
  if (!a.adpositions.empty()) out["adp"] = Adpositions(a.adpositions);
  if (!a.adverbials.empty()) {
    Json cls = Json::array();
    for (const auto &link : a.adverbials) {
      cls.push_back({{"typ", AdverbialCode(link.type)}, {"ref", IdArray(link.refs)}});
    }
    out["cls"] = std::move(cls);
  }
  return out;
}

// ---- import ----------------------------------------------------------------

class Reader {
 public:
  std::vector<TreeError> errors;

  void Error(const std::string &path, std::string message) {
    errors.push_back({path.empty() ? "/" : path, std::move(message)});
  }

  bool Object(const Json &j, const std::string &path,
              std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) {
      Error(path, "expected an object");
      return false;
    }
    bool ok = true;
    for (const auto &[key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        Error(path + "/" + key, "unknown key '" + key + "'");
        ok = false;
      }
    }
    return ok;
  }

  const Json *Field(const Json &obj, const std::string &path, const char *key,
                    bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) Error(path + "/" + key, "missing required entry");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> String(const Json &j, const std::string &path) {
    if (!j.is_string()) {
      Error(path, "expected a string");
      return std::nullopt;
    }
    return j.get<std::string>();
  }

  std::optional<Identifier> Ident(const Json &j, const std::string &path) {
    auto s = String(j, path);
    if (!s) return std::nullopt;
    if (!Identifier::IsValid(*s)) {
      Error(path, "'" + *s + "' is not a valid identifier");
      return std::nullopt;
    }
    return Identifier(std::move(*s));
  }

  std::optional<SynsetRef> Synset(const Json &j, const std::string &path,
                                  PartOfSpeech pos) {
    if (!j.is_number_unsigned() || j.get<uint64_t>() > kMaxSynsetOffset) {
      Error(path, "expected a synset offset in [0, 99999999]");
      return std::nullopt;
    }
    return SynsetRef{pos, static_cast<uint32_t>(j.get<uint64_t>())};
  }

  std::optional<bool> Flag(const Json &j, const std::string &path) {
    if (!j.is_boolean()) {
      Error(path, "expected a boolean");
      return std::nullopt;
    }
    return j.get<bool>();
  }

  template <typename T, typename ParseFn>
  std::optional<T> Code(const Json &j, const std::string &path, ParseFn parse) {
    auto s = String(j, path);
    if (!s) return std::nullopt;
    std::optional<T> out = parse(*s);
    if (!out) Error(path, "code '" + *s + "' is not in the registry");
    return out;
  }

  std::optional<std::vector<Identifier>> IdList(const Json &j,
                                                const std::string &path,
                                                bool allow_empty) {
    if (!j.is_array() || (!allow_empty && j.empty())) {
      Error(path, allow_empty ? "expected an array of identifiers"
                              : "expected a non-empty array of identifiers");
      return std::nullopt;
    }
    std::vector<Identifier> out;
    bool ok = true;
    for (size_t i = 0; i < j.size(); ++i) {
      auto id = Ident(j[i], path + "/" + std::to_string(i));
      if (id) {
        out.push_back(std::move(*id));
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<ReferenceGroups> Groups(const Json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
      Error(path, "expected a non-empty array of identifier arrays");
      return std::nullopt;
    }
    ReferenceGroups out;
    bool ok = true;
    for (size_t i = 0; i < j.size(); ++i) {
      auto group = IdList(j[i], path + "/" + std::to_string(i), false);
      if (group) {
        out.groups.push_back(std::move(*group));
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<std::vector<SynsetRef>> SynsetList(const Json &j,
                                                   const std::string &path) {
    if (!j.is_array()) {
      Error(path, "expected an array of synset offsets");
      return std::nullopt;
    }
    std::vector<SynsetRef> out;
    bool ok = true;
    for (size_t i = 0; i < j.size(); ++i) {
      auto s = Synset(j[i], path + "/" + std::to_string(i), PartOfSpeech::kAdverb);
      if (s) {
        out.push_back(*s);
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

  // Runs `each` over the elements of an array entry.
  template <typename Fn>
  bool Array(const Json &j, const std::string &path, Fn each) {
    if (!j.is_array()) {
      Error(path, "expected an array");
      return false;
    }
    bool ok = true;
    for (size_t i = 0; i < j.size(); ++i) {
      ok &= each(j[i], path + "/" + std::to_string(i));
    }
    return ok;
  }

  template <typename Block>
  std::optional<Block> Modifier(const Json &j, const std::string &path,
                                PartOfSpeech pos) {
    if (!Object(j, path, {"syn", "adv"})) return std::nullopt;
    Block out;
    const Json *syn = Field(j, path, "syn", true);
    if (!syn) return std::nullopt;
    auto s = Synset(*syn, path + "/syn", pos);
    if (!s) return std::nullopt;
    out.syn = *s;
    if (const Json *adv = Field(j, path, "adv", false)) {
      auto list = SynsetList(*adv, path + "/adv");
      if (!list) return std::nullopt;
      out.adverbs = std::move(*list);
    }
    return out;
  }

  std::optional<AdpositionLink> Adposition(const Json &j, const std::string &path) {
    if (!Object(j, path, {"typ", "ref"})) return std::nullopt;
    const Json *typ = Field(j, path, "typ", true);
    const Json *ref = Field(j, path, "ref", true);
    if (!typ || !ref) return std::nullopt;
    auto type = Code<AdpositionType>(*typ, path + "/typ", ParseAdpositionCode);
    auto refs = Groups(*ref, path + "/ref");
    if (!type || !refs) return std::nullopt;
    return AdpositionLink{*type, std::move(*refs)};
  }

  std::optional<Role> ReadRole(const Json &j, const std::string &path) {
    if (!Object(j, path, {"id", "syn", "nam", "qnt", "def", "adj", "rel", "adp",
                          "pro"})) {
      return std::nullopt;
    }
    Role r;
    bool ok = true;
    if (const Json *id = Field(j, path, "id", true)) {
      auto v = Ident(*id, path + "/id");
      ok &= v.has_value();
      if (v) r.id = std::move(*v);
    } else {
      ok = false;
    }
    if (const Json *syn = Field(j, path, "syn", false)) {
      r.syn = Synset(*syn, path + "/syn", PartOfSpeech::kNoun);
      ok &= r.syn.has_value();
    }
    if (const Json *nam = Field(j, path, "nam", false)) {
      auto s = String(*nam, path + "/nam");
      // A name must be writable as a single STON scalar.
      bool scalar = s && !s->empty() &&
                    (Identifier::IsValid(*s) ||
                     std::all_of(s->begin(), s->end(),
                                 [](char c) { return c >= '0' && c <= '9'; }));
      if (s && !scalar) {
        Error(path + "/nam", "name must use underscores for spaces and contain "
                             "only letters, digits and '_'");
      }
      ok &= scalar;
      if (scalar) r.name = std::move(*s);
    }
    if (const Json *qnt = Field(j, path, "qnt", false)) {
      auto s = String(*qnt, path + "/qnt");
      ok &= s.has_value();
      if (s) {
        try {
          r.quantity = ParseQuantity(*s);
        } catch (const InvalidQuantity &e) {
          Error(path + "/qnt", e.what());
          ok = false;
        }
      }
    }
    if (const Json *def = Field(j, path, "def", false)) {
      auto f = Flag(*def, path + "/def");
      ok &= f.has_value();
      r.defined = f.value_or(false);
    }
    if (const Json *adj = Field(j, path, "adj", false)) {
      ok &= Array(*adj, path + "/adj", [&](const Json &e, const std::string &p) {
        auto b = Modifier<AdjectiveBlock>(e, p, PartOfSpeech::kAdjective);
        if (b) r.adjectives.push_back(std::move(*b));
        return b.has_value();
      });
    }
    if (const Json *rel = Field(j, path, "rel", false)) {
      ok &= Array(*rel, path + "/rel", [&](const Json &e, const std::string &p) {
        if (!Object(e, p, {"typ", "ref"})) return false;
        const Json *typ = Field(e, p, "typ", true);
        const Json *ref = Field(e, p, "ref", true);
        if (!typ || !ref) return false;
        auto type = Code<RelativeType>(*typ, p + "/typ", ParseRelativeCode);
        auto refs = IdList(*ref, p + "/ref", false);
        if (!type || !refs) return false;
        r.relatives.push_back({*type, std::move(*refs)});
        return true;
      });
    }
    if (const Json *adp = Field(j, path, "adp", false)) {
      ok &= Array(*adp, path + "/adp", [&](const Json &e, const std::string &p) {
        auto link = Adposition(e, p);
        if (link) r.adpositions.push_back(std::move(*link));
        return link.has_value();
      });
    }
    if (const Json *pro = Field(j, path, "pro", false)) {
      std::string p = path + "/pro";
      bool pro_ok = Object(*pro, p, {"typ", "ref"});
      const Json *typ = pro_ok ? Field(*pro, p, "typ", true) : nullptr;
      if (typ) {
        auto code = String(*typ, p + "/typ");
        if (code) {
          try {
            r.pronoun = DecodePronoun(*code);
          } catch (const InvalidPronounCode &e) {
            Error(p + "/typ", "code '" + *code + "' is not in the registry: " + e.what());
          }
        }
      }
      if (r.pronoun) {
        if (const Json *ref = Field(*pro, p, "ref", false)) {
          auto refs = IdList(*ref, p + "/ref", true);
          if (refs) {
            r.pronoun->refs = std::move(*refs);
          } else {
            r.pronoun.reset();
          }
        }
      }
      ok &= r.pronoun.has_value();
    }
    if (!ok) return std::nullopt;
    return r;
  }

  std::optional<Action> ReadAction(const Json &j, const std::string &path) {
    if (!Object(j, path, {"id", "syn", "tns", "prg", "prf", "neg", "mod", "agt",
                          "thm", "advb", "cmp", "adp", "cls"})) {
      return std::nullopt;
    }
    Action a;
    bool ok = true;
    if (const Json *id = Field(j, path, "id", true)) {
      auto v = Ident(*id, path + "/id");
      ok &= v.has_value();
      if (v) a.id = std::move(*v);
    } else {
      ok = false;
    }
    if (const Json *syn = Field(j, path, "syn", true)) {
      auto s = Synset(*syn, path + "/syn", PartOfSpeech::kVerb);
      ok &= s.has_value();
      if (s) a.syn = *s;
    } else {
      ok = false;
    }
    if (const Json *tns = Field(j, path, "tns", false)) {
      a.tense = Code<Tense>(*tns, path + "/tns", ParseTenseCode);
      ok &= a.tense.has_value();
    }
    for (auto [key, flag] : {std::pair{"prg", &a.progressive},
                             std::pair{"prf", &a.perfect},
                             std::pair{"neg", &a.negated}}) {
      if (const Json *v = Field(j, path, key, false)) {
        auto f = Flag(*v, path + "/" + key);
        ok &= f.has_value();
        *flag = f.value_or(false);
      }
    }
    if (const Json *mod = Field(j, path, "mod", false)) {
      a.modality = Code<Modality>(*mod, path + "/mod", ParseModalityCode);
      ok &= a.modality.has_value();
    }
    if (const Json *agt = Field(j, path, "agt", false)) {
      a.agents = Groups(*agt, path + "/agt");
      ok &= a.agents.has_value();
    }
    if (const Json *thm = Field(j, path, "thm", false)) {
      a.themes = Groups(*thm, path + "/thm");
      ok &= a.themes.has_value();
    }
    if (const Json *advb = Field(j, path, "advb", false)) {
      ok &= Array(*advb, path + "/advb", [&](const Json &e, const std::string &p) {
        auto b = Modifier<AdverbBlock>(e, p, PartOfSpeech::kAdverb);
        if (b) a.adverbs.push_back(std::move(*b));
        return b.has_value();
      });
    }
    if (const Json *cmp = Field(j, path, "cmp", false)) {
      std::string p = path + "/cmp";
      bool cmp_ok = Object(*cmp, p, {"typ", "ref", "adj"});
      Comparison c;
      const Json *typ = cmp_ok ? Field(*cmp, p, "typ", true) : nullptr;
      cmp_ok = cmp_ok && typ;
      if (typ) {
        auto type = Code<ComparisonType>(*typ, p + "/typ", ParseComparisonCode);
        cmp_ok &= type.has_value();
        if (type) c.type = *type;
      }
      if (cmp_ok) {
        if (const Json *ref = Field(*cmp, p, "ref", false)) {
          auto refs = IdList(*ref, p + "/ref", true);
          cmp_ok &= refs.has_value();
          if (refs) c.refs = std::move(*refs);
        }
        if (const Json *adj = Field(*cmp, p, "adj", false)) {
          c.adjective = Synset(*adj, p + "/adj", PartOfSpeech::kAdjective);
          cmp_ok &= c.adjective.has_value();
        }
      }
      ok &= cmp_ok;
      if (cmp_ok) a.comparison = std::move(c);
    }
    if (const Json *adp = Field(j, path, "adp", false)) {
      ok &= Array(*adp, path + "/adp", [&](const Json &e, const std::string &p) {
        auto link = Adposition(e, p);
        if (link) a.adpositions.push_back(std::move(*link));
        return link.has_value();
      });
    }
    if (const Json *cls = Field(j, path, "cls", false)) {
      ok &= Array(*cls, path + "/cls", [&](const Json &e, const std::string &p) {
        if (!Object(e, p, {"typ", "ref"})) return false;
        const Json *typ = Field(e, p, "typ", true);
        const Json *ref = Field(e, p, "ref", true);
        if (!typ || !ref) return false;
        auto type = Code<AdverbialType>(*typ, p + "/typ", ParseAdverbialCode);
        auto refs = IdList(*ref, p + "/ref", false);
        if (!type || !refs) return false;
        a.adverbials.push_back({*type, std::move(*refs)});
        return true;
      });
    }
    if (!ok) return std::nullopt;
    return a;
  }

  std::optional<Sentence> ReadSentence(const Json &j, const std::string &path) {
    if (!Object(j, path, {"typ", "act"})) return std::nullopt;
    Sentence s;
    const Json *typ = Field(j, path, "typ", true);
    if (!typ) return std::nullopt;
    auto type = Code<SentenceType>(*typ, path + "/typ", ParseSentenceTypeCode);
    if (!type) return std::nullopt;
    s.type = *type;
    if (const Json *act = Field(j, path, "act", false)) {
      auto ids = IdList(*act, path + "/act", true);
      if (!ids) return std::nullopt;
      s.actions = std::move(*ids);
    }
    return s;
  }
};

}  // namespace

std::string ToTree(const Document &doc) {
  RequireValid(doc);
  Json root = Json::object();
  root["roles"] = Json::array();
  root["actions"] = Json::array();
  root["sentences"] = Json::array();
  for (const auto &r : doc.roles) root["roles"].push_back(ExportRole(r));
  for (const auto &a : doc.actions) root["actions"].push_back(ExportAction(a));
  for (const auto &s : doc.sentences) {
    Json sentence = Json::object();
    sentence["typ"] = SentenceTypeCode(s.type);
    if (!s.actions.empty()) sentence["act"] = IdArray(s.actions);
    root["sentences"].push_back(std::move(sentence));
  }
  return root.dump(2) + "\n";
}

TreeResult FromTree(std::string_view text) {
  TreeResult result;
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error &e) {
    result.errors.push_back({"/", std::string("malformed tree: ") + e.what()});
    return result;
  }
  Reader reader;
  Document doc;
  if (reader.Object(root, "", {"roles", "actions", "sentences"})) {
    auto section = [&](const char *key, auto read, auto &out) {
      std::string path = std::string("/") + key;
      const Json *list = reader.Field(root, "", key, true);
      if (!list) return;
      reader.Array(*list, path, [&](const Json &e, const std::string &p) {
        auto item = read(e, p);
        if (item) out.push_back(std::move(*item));
        return item.has_value();
      });
    };
    section("roles",
            [&](const Json &e, const std::string &p) { return reader.ReadRole(e, p); },
            doc.roles);
    section("actions",
            [&](const Json &e, const std::string &p) { return reader.ReadAction(e, p); },
            doc.actions);
    section("sentences",
            [&](const Json &e, const std::string &p) {
              return reader.ReadSentence(e, p);
            },
            doc.sentences);
  }
  result.errors = std::move(reader.errors);
  if (result.errors.empty()) result.document = std::move(doc);
  return result;
}

}  // namespace ston
