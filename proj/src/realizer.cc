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

#include "ston/realizer.h"

#include <algorithm>
#include <array>

#include "ston/morphology.h"
#include "ston/validator.h"

namespace ston {

namespace en = english;

namespace {

using Words = std::vector<std::string>;

constexpr std::array<std::string_view, kNumAdpositionTypes> kPrepositions = {
    "ago",  "from",    "in",    "since", "to",      "for",     "before",
    "after", "by",     "inside", "outside", "under", "above",   "between",
    "through", "about", "with", "of",     "as",      "under",
};

constexpr std::array<std::string_view, kNumAdverbialTypes> kConjunctions = {
    "when", "while", "where", "if", "so", "because", "although", "as",
    "after", "before",
};

std::string_view Preposition(AdpositionType t) {
  return kPrepositions[static_cast<size_t>(t)];
}

void Append(Words &out, const Words &more) {
  out.insert(out.end(), more.begin(), more.end());
}

// Splits a lexicon lemma ("adult_male") into surface words.
Words SplitLemma(std::string_view lemma) {
  Words out(1);
  for (char c : lemma) {
    if (c == '_' || c == ' ') {
      if (!out.back().empty()) out.emplace_back();
    } else {
      out.back().push_back(c);
    }
  }
  if (out.back().empty()) out.pop_back();
  return out;
}

Words Conjoin(std::vector<Words> items, std::string_view conjunction) {
  Words out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0 && i + 1 == items.size()) {
      out.emplace_back(conjunction);
    } else if (i > 0) {
      out.emplace_back(",");
    }
    Append(out, items[i]);
  }
  return out;
}

bool IsPluralQuantity(const Quantity &q) {
  return q.kind == Quantity::Kind::kPlural ||
         (q.kind == Quantity::Kind::kCardinal && q.value > 1);
}

std::string_view PersonalPronoun(const Pronoun &p, GrammaticalCase gcase) {
  // Rows: subject, object, possessive determiner, possessive pronoun.
  struct Forms {
    std::string_view subject, object, determiner, standalone;
  };
  static constexpr Forms kFirstSingular = {"I", "me", "my", "mine"};
  static constexpr Forms kFirstPlural = {"we", "us", "our", "ours"};
  static constexpr Forms kSecond = {"you", "you", "your", "yours"};
  static constexpr Forms kMale = {"he", "him", "his", "his"};
  static constexpr Forms kFemale = {"she", "her", "her", "hers"};
  static constexpr Forms kNeuter = {"it", "it", "its", "its"};
  static constexpr Forms kThirdPlural = {"they", "them", "their", "theirs"};

  bool plural = p.number == GrammaticalNumber::kPlural ||
                p.number == GrammaticalNumber::kDual;
  const Forms *forms = &kNeuter;
  switch (p.person) {
    case Person::kFirst: forms = plural ? &kFirstPlural : &kFirstSingular; break;
    case Person::kSecond: forms = &kSecond; break;
    case Person::kThird:
      if (plural) {
        forms = &kThirdPlural;
      } else if (p.gender == Gender::kMale) {
        forms = &kMale;
      } else if (p.gender == Gender::kFemale) {
        forms = &kFemale;
      }
      break;
  }
  if (p.kind == PronounKind::kPossessive) return forms->standalone;
  return gcase == GrammaticalCase::kSubject ? forms->subject : forms->object;
}

std::string_view PossessiveDeterminer(const Pronoun &p) {
  Pronoun copy = p;
  copy.kind = PronounKind::kSubjective;
  std::string_view subject = PersonalPronoun(copy, GrammaticalCase::kSubject);
  if (subject == "I") return "my";
  if (subject == "we") return "our";
  if (subject == "you") return "your";
  if (subject == "he") return "his";
  if (subject == "she") return "her";
  if (subject == "they") return "their";
  return "its";
}

std::string_view Demonstrative(const Pronoun &p, bool plural) {
  bool near = p.proximity == Proximity::kProximal ||
              p.proximity == Proximity::kUndefined;
  if (near) return plural ? "these" : "this";
  return plural ? "those" : "that";
}

// Clause-level settings for one rendering of an action.
struct ClauseOptions {
  bool with_subject = true;
  bool imperative = false;
  // Relative clause head: removed from agents, themes and adpositions.
  const Identifier *gap = nullptr;
  bool infinitive_marker = true;  // "to" in front of tense-free verbs
};

class Realizer {
 public:
  Realizer(const Document &doc, const Lexicon &lex) : doc_(doc), lex_(lex) {}

  std::string Lemma(SynsetRef syn) const {
    auto lemma = lex_.Preferred("en", syn.pos, syn.offset);
    if (!lemma) throw SynsetNotFound("en", syn);
    return *lemma;
  }

  Agreement AgreementOf(const Role &role) const {
    if (role.pronoun && !role.syn && !role.name) {
      const Pronoun &p = *role.pronoun;
      if (p.number == GrammaticalNumber::kPlural ||
          p.number == GrammaticalNumber::kDual || p.person == Person::kSecond) {
        return Agreement::kPlural;
      }
      if (p.person == Person::kFirst) return Agreement::kFirstSingular;
      if (p.kind == PronounKind::kDemonstrative) return Agreement::kThirdSingular;
      return Agreement::kThirdSingular;
    }
    return IsPluralQuantity(role.quantity) ? Agreement::kPlural
                                           : Agreement::kThirdSingular;
  }

  Agreement AgreementOf(const ReferenceGroups &groups) const {
    for (const auto &g : groups.groups) {
      if (g.size() > 1) return Agreement::kPlural;
    }
    if (groups.empty() || groups.groups[0].empty()) {
      return Agreement::kThirdSingular;
    }
    if (const Role *r = doc_.FindRole(groups.groups[0][0])) return AgreementOf(*r);
    return Agreement::kThirdSingular;
  }

  bool IsAnimate(const Role &role) const {
    if (role.name) return true;
    if (role.pronoun && !role.syn) {
      return role.pronoun->gender != Gender::kNeuter ||
             role.pronoun->person != Person::kThird;
    }
    if (role.syn) return en::IsPersonNoun(Lemma(*role.syn));
    return false;
  }

  Words VerbGroup(const Action &action, Agreement agreement, bool passive,
                  bool imperative, bool infinitive_marker) const {
    Words main = SplitLemma(Lemma(action.syn));
    std::string verb = main.front();
    Words particles(main.begin() + 1, main.end());

    if (imperative) {
      Words out;
      if (action.negated) out = {"do", "not"};
      out.push_back(verb);
      Append(out, particles);
      return out;
    }

    // Non-finite chain: each element fixes the form of the next one.
    enum class Form { kFinite, kBase, kParticiple, kIng };
    struct Link {
      std::string lemma;
      Form form;
    };
    std::vector<Link> chain;
    Words lead;  // modal or "will", already inflected
    if (action.modality) {
      bool past = action.tense == Tense::kPast;
      switch (*action.modality) {
        case Modality::kMay: lead = {past ? "might" : "may"}; break;
        case Modality::kCan: lead = {past ? "could" : "can"}; break;
        case Modality::kMust:
          lead = past ? Words{"had", "to"} : Words{"must"};
          break;
      }
    } else if (action.tense == Tense::kFuture) {
      lead = {"will"};
    }
    Form next = lead.empty() ? Form::kFinite : Form::kBase;
    if (!action.tense) next = Form::kBase;
    if (action.perfect) {
      chain.push_back({"have", next});
      next = Form::kParticiple;
    }
    if (action.progressive) {
      chain.push_back({"be", next});
      next = Form::kIng;
    }
    if (passive) {
      chain.push_back({"be", next});
      next = Form::kParticiple;
    }
    chain.push_back({verb, next});

    bool past = action.tense == Tense::kPast;
    auto inflect = [&](const std::string &lemma, Form form) -> std::string {
      switch (form) {
        case Form::kBase: return lemma;
        case Form::kParticiple: return en::PastParticiple(lemma);
        case Form::kIng: return en::PresentParticiple(lemma);
        case Form::kFinite: break;
      }
      if (lemma == "be") {
        if (past) return agreement == Agreement::kPlural ? "were" : "was";
        if (agreement == Agreement::kFirstSingular) return "am";
        return agreement == Agreement::kPlural ? "are" : "is";
      }
      if (past) return en::Past(lemma);
      return agreement == Agreement::kThirdSingular ? en::ThirdSingular(lemma)
                                                    : lemma;
    };

    Words out = lead;
    if (!action.tense) {
      if (action.negated) out.push_back("not");
      if (infinitive_marker) out.push_back("to");
      for (const auto &link : chain) out.push_back(inflect(link.lemma, link.form));
      Append(out, particles);
      return out;
    }
    bool has_auxiliary = !lead.empty() || chain.size() > 1 || verb == "be";
    if (action.negated && !has_auxiliary) {
      out.push_back(inflect("do", Form::kFinite));
      out.push_back("not");
      out.push_back(verb);
    } else {
      // "not" follows the first auxiliary.
      if (action.negated && !lead.empty()) out.push_back("not");
      for (const auto &link : chain) {
        out.push_back(inflect(link.lemma, link.form));
        if (action.negated && lead.empty() && out.size() == 1) {
          out.push_back("not");
        }
      }
    }
    Append(out, particles);
    return out;
  }

  Words NounPhrase(const ston::Role &role, GrammaticalCase gcase) {
    bool nested = std::find(role_stack_.begin(), role_stack_.end(), &role) !=
                  role_stack_.end();
    role_stack_.push_back(&role);
    Words out = RoleHead(role, gcase);
    if (!nested) {
      for (const auto &adp : role.adpositions) Append(out, Adposition(adp));
      Append(out, Relatives(role));
    }
    role_stack_.pop_back();
    return out;
  }

  Words RoleHead(const ston::Role &role, GrammaticalCase gcase) {
    Words out;
    bool plural = IsPluralQuantity(role.quantity);
    if (role.pronoun && !role.syn && !role.name) {
      const Pronoun &p = *role.pronoun;
      if (p.kind == PronounKind::kDemonstrative) {
        out.emplace_back(Demonstrative(p, p.number == GrammaticalNumber::kPlural ||
                                              p.number == GrammaticalNumber::kDual));
      } else {
        out.emplace_back(PersonalPronoun(p, gcase));
      }
      return out;
    }

    Words modifiers;
    if (role.quantity.kind == Quantity::Kind::kOrdinal) {
      modifiers.push_back(en::OrdinalWord(role.quantity.value));
    } else if (role.quantity.kind == Quantity::Kind::kCardinal &&
               role.quantity.value > 1) {
      modifiers.push_back(en::CardinalWord(role.quantity.value));
    }
    for (const auto &adj : role.adjectives) {
      for (const auto &adv : adj.adverbs) Append(modifiers, SplitLemma(Lemma(adv)));
      Append(modifiers, SplitLemma(Lemma(adj.syn)));
    }

    Words head;
    bool mass = false;
    if (role.name) {
      head = SplitLemma(*role.name);
    } else if (role.syn) {
      Words noun = SplitLemma(Lemma(*role.syn));
      mass = noun.size() == 1 && en::IsMassNoun(noun.front());
      if (plural) noun.back() = en::Plural(noun.back());
      head = std::move(noun);
    }

    if (role.pronoun) {
      const Pronoun &p = *role.pronoun;
      if (p.kind == PronounKind::kDemonstrative) {
        out.emplace_back(Demonstrative(p, plural));
      } else {
        out.emplace_back(PossessiveDeterminer(p));
      }
    } else if (role.defined) {
      out.emplace_back("the");
    } else if (role.name) {
      // Proper names carry no article.
    } else if (role.quantity.kind == Quantity::Kind::kOrdinal) {
      out.emplace_back("the");
    } else if (!plural && !mass) {
      const std::string &next = modifiers.empty() ? head.front() : modifiers.front();
      out.emplace_back(en::IndefiniteArticle(next));
    }
    Append(out, modifiers);
    Append(out, head);
    return out;
  }

  Words Relatives(const ston::Role &role) {
    std::vector<Words> clauses;
    for (const auto &rel : role.relatives) {
      for (const auto &ref : rel.refs) {
        const Action *action = doc_.FindAction(ref);
        if (action == nullptr || InActionStack(action)) continue;
        Words clause;
        ClauseOptions opts;
        opts.gap = &role.id;
        switch (rel.type.base) {
          case RelativeBase::kSubject:
            clause.emplace_back(IsAnimate(role) ? "who" : "which");
            opts.with_subject = false;
            break;
          case RelativeBase::kObject:
            clause.emplace_back(IsAnimate(role) ? "whom" : "which");
            break;
          case RelativeBase::kPossessive:
            clause.emplace_back("whose");
            break;
          case RelativeBase::kReason:
            clause.emplace_back("why");
            break;
          case RelativeBase::kIndirect:
            clause.emplace_back(Preposition(rel.type.adposition));
            clause.emplace_back(IsAnimate(role) ? "whom" : "which");
            break;
        }
        Append(clause, Clause(*action, opts, AgreementOf(role)));
        clauses.push_back(std::move(clause));
      }
    }
    return Conjoin(std::move(clauses), "and");
  }

  bool InActionStack(const Action *a) const {
    return std::find(action_stack_.begin(), action_stack_.end(), a) !=
           action_stack_.end();
  }

  // One participant: a role as a noun phrase, an action as a complement.
  Words Participant(const Identifier &id, GrammaticalCase gcase,
                    bool *first_infinitive) {
    if (const ston::Role *r = doc_.FindRole(id)) return NounPhrase(*r, gcase);
    const Action *a = doc_.FindAction(id);
    if (a == nullptr || InActionStack(a)) return {};
    ClauseOptions opts;
    if (!a->tense) {
      // Later infinitives of the same group share the first "to".
      opts.infinitive_marker = *first_infinitive;
      *first_infinitive = false;
      return Clause(*a, opts, Agreement::kThirdSingular);
    }
    Words out = {"that"};
    Append(out, Clause(*a, opts, Agreement::kThirdSingular));
    return out;
  }

  Words Groups(const ReferenceGroups &groups, GrammaticalCase gcase,
               const Identifier *gap) {
    std::vector<Words> alternatives;
    for (const auto &group : groups.groups) {
      std::vector<Words> members;
      bool first_infinitive = true;
      for (const auto &id : group) {
        if (gap != nullptr && id == *gap) continue;
        Words w = Participant(id, gcase, &first_infinitive);
        if (!w.empty()) members.push_back(std::move(w));
      }
      if (!members.empty()) alternatives.push_back(Conjoin(std::move(members), "and"));
    }
    return Conjoin(std::move(alternatives), "or");
  }

  Words RefList(const std::vector<Identifier> &ids, GrammaticalCase gcase) {
    return Groups(ReferenceGroups::Single(ids), gcase, nullptr);
  }

  Words Adposition(const AdpositionLink &link, const Identifier *gap = nullptr) {
    Words object = Groups(link.refs, GrammaticalCase::kObject, gap);
    if (object.empty()) return {};
    Words out;
    if (link.type == AdpositionType::kAgo) {
      out = std::move(object);
      out.emplace_back("ago");
    } else {
      out.emplace_back(Preposition(link.type));
      Append(out, object);
    }
    return out;
  }

  Words ComparisonFragment(const Comparison &cmp) {
    Words out;
    std::optional<std::string> adj;
    if (cmp.adjective) adj = Lemma(*cmp.adjective);
    Words refs = RefList(cmp.refs, GrammaticalCase::kObject);
    switch (cmp.type) {
      case ComparisonType::kMore:
        out = adj ? SplitLemma(en::Comparative(*adj)) : Words{"more"};
        break;
      case ComparisonType::kLess:
        out = {"less"};
        if (adj) Append(out, SplitLemma(*adj));
        break;
      case ComparisonType::kMost:
        out = {"the"};
        Append(out, adj ? SplitLemma(en::Superlative(*adj)) : Words{"most"});
        break;
      case ComparisonType::kLeast:
        out = {"the", "least"};
        if (adj) Append(out, SplitLemma(*adj));
        break;
      case ComparisonType::kEqual:
        out = {"as"};
        if (adj) {
          Append(out, SplitLemma(*adj));
        } else {
          out.emplace_back("much");
        }
        break;
    }
    if (refs.empty()) return out;
    if (cmp.is_superlative()) {
      out.emplace_back("of");
    } else {
      out.emplace_back(cmp.type == ComparisonType::kEqual ? "as" : "than");
    }
    Append(out, refs);
    return out;
  }

  std::vector<Words> Links(const Action &action, const Identifier *gap) {
    std::vector<Words> out;
    if (action.comparison) out.push_back(ComparisonFragment(*action.comparison));
    for (const auto &adv : action.adverbs) {
      Words w;
      for (const auto &a : adv.adverbs) Append(w, SplitLemma(Lemma(a)));
      Append(w, SplitLemma(Lemma(adv.syn)));
      out.push_back(std::move(w));
    }
    for (const auto &adp : action.adpositions) {
      Words w = Adposition(adp, gap);
      if (!w.empty()) out.push_back(std::move(w));
    }
    for (const auto &advbl : action.adverbials) {
      std::vector<Words> clauses;
      for (const auto &ref : advbl.refs) {
        const Action *sub = doc_.FindAction(ref);
        if (sub == nullptr || InActionStack(sub)) continue;
        clauses.push_back(Clause(*sub, ClauseOptions{}, Agreement::kThirdSingular));
      }
      if (clauses.empty()) continue;
      Words w = {std::string(kConjunctions[static_cast<size_t>(advbl.type)])};
      Append(w, Conjoin(std::move(clauses), "and"));
      out.push_back(std::move(w));
    }
    return out;
  }

  // `head_agreement` is used when the subject is the gapped relative head.
  Words Clause(const Action &action, const ClauseOptions &opts,
               Agreement head_agreement) {
    action_stack_.push_back(&action);
    // Tense-free complements are rendered active ("to teach physics").
    bool passive = !action.agents && action.tense.has_value();
    const std::optional<ReferenceGroups> &subject_refs =
        passive ? action.themes : action.agents;

    Words subject;
    Agreement agreement = head_agreement;
    bool subject_is_gap = false;
    if (subject_refs) {
      subject = Groups(*subject_refs, GrammaticalCase::kSubject, opts.gap);
      subject_is_gap = subject.empty() && opts.gap != nullptr;
      if (!subject_is_gap) agreement = AgreementOf(*subject_refs);
    }

    Words out;
    if (opts.with_subject && !opts.imperative && action.tense) Append(out, subject);
    Append(out, VerbGroup(action, agreement, passive, opts.imperative,
                          opts.infinitive_marker));
    if (!passive && action.themes) {
      Append(out, Groups(*action.themes, GrammaticalCase::kObject, opts.gap));
    }
    for (auto &fragment : Links(action, opts.gap)) Append(out, fragment);
    action_stack_.pop_back();
    return out;
  }

  Words SentenceWords(const Sentence &sentence) {
    bool imperative = sentence.type == SentenceType::kImperative;
    std::vector<Words> parts;
    const Action *first = nullptr;
    for (const auto &id : sentence.actions) {
      const Action *action = doc_.FindAction(id);
      if (action == nullptr) continue;
      ClauseOptions opts;
      opts.imperative = imperative;
      if (first != nullptr && action->agents && first->agents &&
          *action->agents == *first->agents) {
        opts.with_subject = false;
      }
      if (first == nullptr) first = action;
      parts.push_back(Clause(*action, opts, Agreement::kThirdSingular));
    }
    return Conjoin(std::move(parts), "and");
  }

 private:
  const Document &doc_;
  const Lexicon &lex_;
  std::vector<const ston::Role *> role_stack_;
  std::vector<const Action *> action_stack_;
};

std::string_view Terminator(SentenceType t) {
  switch (t) {
    case SentenceType::kExclamation: return "!";
    case SentenceType::kQuestion: return "?";
    case SentenceType::kAffirmation:
    case SentenceType::kImperative: break;
  }
  return ".";
}

}  // namespace

SynsetNotFound::SynsetNotFound(std::string_view lang, SynsetRef synset)
    : std::runtime_error("synset " + std::string(1, PosLetter(synset.pos)) + ":" +
                         std::to_string(synset.offset) + " not found for '" +
                         std::string(lang) + "'"),
      synset_(synset) {}

std::string JoinWords(const std::vector<std::string> &words) {
  std::string out;
  for (const auto &w : words) {
    if (w.empty()) continue;
    if (!out.empty() && w != ",") out.push_back(' ');
    out += w;
  }
  return out;
}

RealizeResult RealizeDocument(const Document &doc, const Lexicon &lex,
                              std::string_view lang) {
  RealizeResult result;
  if (lang != "en") {
    result.errors.push_back({RealizeError::Kind::kUnsupportedLanguage,
                             std::nullopt, std::nullopt,
                             "realization is only available for 'en', not '" +
                                 std::string(lang) + "'"});
    return result;
  }
  auto diagnostics = Validate(doc);
  if (HasErrors(diagnostics)) {
    std::string message = "document has validation errors";
    for (const auto &d : diagnostics) {
      if (d.severity == Severity::kError) {
        message += "; " + d.ToString();
        break;
      }
    }
    result.errors.push_back({RealizeError::Kind::kInvalidDocument, std::nullopt,
                             std::nullopt, message});
    return result;
  }
  for (size_t i = 0; i < doc.sentences.size(); ++i) {
    Realizer realizer(doc, lex);
    try {
      std::string line = JoinWords(realizer.SentenceWords(doc.sentences[i]));
      if (!line.empty() && line[0] >= 'a' && line[0] <= 'z') {
        line[0] = static_cast<char>(line[0] - 'a' + 'A');
      }
      line += Terminator(doc.sentences[i].type);
      result.text += line + "\n";
    } catch (const SynsetNotFound &e) {
      result.errors.push_back({RealizeError::Kind::kSynsetNotFound, i,
                               e.synset(), e.what()});
    }
  }
  return result;
}

std::vector<std::string> RealizeVerbGroup(const Action &action,
                                          const Lexicon &lex,
                                          Agreement agreement) {
  static const Document kEmpty;
  Realizer r(kEmpty, lex);
  bool passive = !action.agents && action.tense.has_value();
  return r.VerbGroup(action, agreement, passive, false, true);
}

std::vector<std::string> RealizeRole(const Document &doc, const Role &role,
                                     const Lexicon &lex, GrammaticalCase gcase) {
  Realizer r(doc, lex);
  return r.NounPhrase(role, gcase);
}

std::vector<std::vector<std::string>> RealizeLinks(const Document &doc,
                                                   const Action &action,
                                                   const Lexicon &lex) {
  Realizer r(doc, lex);
  return r.Links(action, nullptr);
}

std::vector<std::string> RealizeAdposition(const Document &doc,
                                           const AdpositionLink &link,
                                           const Lexicon &lex) {
  Realizer r(doc, lex);
  return r.Adposition(link);
}

}  // namespace ston
