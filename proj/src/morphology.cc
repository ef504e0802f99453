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

#include "ston/morphology.h"

#include <algorithm>
#include <array>

namespace ston::english {

namespace {

struct IrregularVerb {
  std::string_view base, past, participle;
};

constexpr std::array<IrregularVerb, 27> kIrregularVerbs = {{
    {"be", "was", "been"},        {"have", "had", "had"},
    {"do", "did", "done"},        {"eat", "ate", "eaten"},
    {"give", "gave", "given"},    {"go", "went", "gone"},
    {"come", "came", "come"},     {"see", "saw", "seen"},
    {"take", "took", "taken"},    {"make", "made", "made"},
    {"say", "said", "said"},      {"get", "got", "gotten"},
    {"write", "wrote", "written"}, {"win", "won", "won"},
    {"become", "became", "become"}, {"teach", "taught", "taught"},
    {"know", "knew", "known"},    {"think", "thought", "thought"},
    {"begin", "began", "begun"},  {"leave", "left", "left"},
    {"drink", "drank", "drunk"},  {"buy", "bought", "bought"},
    {"run", "ran", "run"},        {"bear", "bore", "born"},
    {"read", "read", "read"},     {"fall", "fell", "fallen"},
    {"find", "found", "found"},
}};

struct IrregularNoun {
  std::string_view singular, plural;
};

constexpr std::array<IrregularNoun, 10> kIrregularNouns = {{
    {"man", "men"},       {"woman", "women"},   {"child", "children"},
    {"person", "people"}, {"leaf", "leaves"},   {"foot", "feet"},
    {"tooth", "teeth"},   {"mouse", "mice"},    {"life", "lives"},
    {"wife", "wives"},
}};

constexpr std::array<std::string_view, 16> kMassNouns = {
    "food",      "meat",   "water",   "physics", "mathematics", "literature",
    "philosophy", "money", "music",   "bread",   "milk",        "rice",
    "advice",    "information", "knowledge", "furniture",
};

constexpr std::array<std::string_view, 28> kPersonNouns = {
    "man",     "woman",   "boy",      "girl",      "child",   "mother",
    "father",  "brother", "sister",   "son",       "daughter", "person",
    "people",  "writer",  "author",   "teacher",   "student", "physicist",
    "scientist", "doctor", "king",    "queen",     "friend",  "parent",
    "novelist", "poet",   "engineer", "philosopher",
};

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

template <size_t N>
bool Contains(const std::array<std::string_view, N> &list, std::string_view w) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

const IrregularVerb *FindIrregular(std::string_view verb) {
  for (const auto &v : kIrregularVerbs) {
    if (v.base == verb) return &v;
  }
  return nullptr;
}

// Consonant-vowel-consonant ending of a one-syllable word: stop -> stopp-.
bool DoublesFinalConsonant(std::string_view w) {
  if (w.size() < 3 || CountSyllables(w) != 1) return false;
  char last = w[w.size() - 1], mid = w[w.size() - 2], first = w[w.size() - 3];
  return !IsVowel(last) && last != 'w' && last != 'x' && last != 'y' &&
         IsVowel(mid) && !IsVowel(first);
}

bool ConsonantY(std::string_view w) {
  return w.size() >= 2 && w.back() == 'y' && !IsVowel(w[w.size() - 2]);
}

// Appends a vowel-initial suffix ("ed", "er", "est") with e-drop, y->i and
// consonant doubling.
std::string AddVowelSuffix(std::string_view w, std::string_view suffix) {
  std::string out(w);
  if (out.empty()) return std::string(suffix);
  if (out.back() == 'e') {
    out.pop_back();
  } else if (ConsonantY(out)) {
    out.back() = 'i';
  } else if (DoublesFinalConsonant(out)) {
    out.push_back(out.back());
  }
  return out + std::string(suffix);
}

std::string AddSibilantS(std::string_view w) {
  std::string out(w);
  if (EndsWith(w, "s") || EndsWith(w, "x") || EndsWith(w, "z") ||
      EndsWith(w, "ch") || EndsWith(w, "sh")) {
    return out + "es";
  }
  if (ConsonantY(w)) {
    out.pop_back();
    return out + "ies";
  }
  return out + "s";
}

}  // namespace

std::string Plural(std::string_view noun) {
  for (const auto &n : kIrregularNouns) {
    if (n.singular == noun) return std::string(n.plural);
  }
  return AddSibilantS(noun);
}

bool IsMassNoun(std::string_view noun) { return Contains(kMassNouns, noun); }

bool IsPersonNoun(std::string_view noun) { return Contains(kPersonNouns, noun); }

std::string ThirdSingular(std::string_view verb) {
  if (verb == "be") return "is";
  if (verb == "have") return "has";
  if (verb == "do" || verb == "go") return std::string(verb) + "es";
  return AddSibilantS(verb);
}

std::string Past(std::string_view verb) {
  if (const auto *v = FindIrregular(verb)) return std::string(v->past);
  return AddVowelSuffix(verb, "ed");
}

std::string PastParticiple(std::string_view verb) {
  if (const auto *v = FindIrregular(verb)) return std::string(v->participle);
  return AddVowelSuffix(verb, "ed");
}

std::string PresentParticiple(std::string_view verb) {
  std::string out(verb);
  if (EndsWith(verb, "ie")) {
    out.resize(out.size() - 2);
    return out + "ying";
  }
  if (verb.size() > 2 && verb.back() == 'e' && !EndsWith(verb, "ee") &&
      !EndsWith(verb, "ye") && !EndsWith(verb, "oe")) {
    out.pop_back();
    return out + "ing";
  }
  if (DoublesFinalConsonant(verb)) out.push_back(out.back());
  return out + "ing";
}

int CountSyllables(std::string_view word) {
  int groups = 0;
  bool in_vowel = false;
  for (size_t i = 0; i < word.size(); ++i) {
    bool vowel = IsVowel(word[i]) || (word[i] == 'y' && i > 0);
    if (vowel && !in_vowel) ++groups;
    in_vowel = vowel;
  }
  // Silent final e: "large", but not "simple" or "free".
  if (groups > 1 && word.size() > 2 && word.back() == 'e' &&
      !IsVowel(word[word.size() - 2]) && !EndsWith(word, "le")) {
    --groups;
  }
  return std::max(groups, 1);
}

bool TakesSuffixComparison(std::string_view adjective) {
  if (adjective.find(' ') != std::string_view::npos) return false;
  int syllables = CountSyllables(adjective);
  // "happy" -> "happier", but "famous" -> "more famous".
  return syllables == 1 || (syllables == 2 && adjective.ends_with('y'));
}

std::string Comparative(std::string_view adjective) {
  if (adjective == "good") return "better";
  if (adjective == "bad") return "worse";
  if (TakesSuffixComparison(adjective)) return AddVowelSuffix(adjective, "er");
  return "more " + std::string(adjective);
}

std::string Superlative(std::string_view adjective) {
  if (adjective == "good") return "best";
  if (adjective == "bad") return "worst";
  if (TakesSuffixComparison(adjective)) return AddVowelSuffix(adjective, "est");
  return "most " + std::string(adjective);
}

std::string_view IndefiniteArticle(std::string_view next_word) {
  std::string lower;
  for (char c : next_word) {
    lower.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
  }
  for (std::string_view p : {"uni", "use", "usu", "eu", "one", "once"}) {
    if (lower.starts_with(p)) return "a";
  }
  for (std::string_view p : {"hour", "honest", "honor", "honour", "heir"}) {
    if (lower.starts_with(p)) return "an";
  }
  return !lower.empty() && IsVowel(lower[0]) ? "an" : "a";
}

std::string OrdinalWord(unsigned n) {
  static constexpr std::array<std::string_view, 13> kWords = {
      "",      "first",   "second", "third", "fourth",  "fifth",   "sixth",
      "seventh", "eighth", "ninth", "tenth", "eleventh", "twelfth",
  };
  if (n < kWords.size()) return std::string(kWords[n]);
  std::string_view suffix = "th";
  if (n % 100 < 11 || n % 100 > 13) {
    if (n % 10 == 1) suffix = "st";
    if (n % 10 == 2) suffix = "nd";
    if (n % 10 == 3) suffix = "rd";
  }
  return std::to_string(n) + std::string(suffix);
}

std::string CardinalWord(unsigned n) {
  static constexpr std::array<std::string_view, 13> kWords = {
      "zero", "one", "two",   "three", "four",   "five",   "six",
      "seven", "eight", "nine", "ten",  "eleven", "twelve",
  };
  if (n < kWords.size()) return std::string(kWords[n]);
  return std::to_string(n);
}

std::vector<VerbAnalysis> AnalyzeVerb(std::string_view word) {
  std::vector<std::string> candidates = {std::string(word)};
  for (const auto &v : kIrregularVerbs) {
    if (v.past == word || (v.base == "be" && word == "were")) {
      candidates.emplace_back(v.base);
    }
  }
  if (word == "is" || word == "are" || word == "am") candidates.emplace_back("be");
  if (word == "has") candidates.emplace_back("have");
  // Strip regular suffixes; every candidate is confirmed by regeneration.
  for (std::string_view suffix : {"s", "es", "ies", "ed", "d", "ied"}) {
    if (!EndsWith(word, suffix) || word.size() <= suffix.size()) continue;
    std::string stem(word.substr(0, word.size() - suffix.size()));
    candidates.push_back(stem);
    if (suffix == "ies" || suffix == "ied") candidates.push_back(stem + "y");
    if (suffix == "ed" && stem.size() >= 2 &&
        stem[stem.size() - 1] == stem[stem.size() - 2]) {
      candidates.push_back(stem.substr(0, stem.size() - 1));
    }
  }
  std::vector<VerbAnalysis> out;
  auto add = [&](const std::string &lemma, VerbForm form) {
    for (const auto &a : out) {
      if (a.lemma == lemma && a.form == form) return;
    }
    out.push_back({lemma, form});
  };
  for (const auto &c : candidates) {
    if (c.empty()) continue;
    if (c == word && c != "be") add(c, VerbForm::kBase);
    if (ThirdSingular(c) == word) add(c, VerbForm::kThirdSingular);
    if (Past(c) == word || (c == "be" && word == "were")) add(c, VerbForm::kPast);
    if (c == "be" && (word == "are" || word == "am")) add(c, VerbForm::kBase);
  }
  return out;
}

std::vector<NounAnalysis> AnalyzeNoun(std::string_view word) {
  std::vector<NounAnalysis> out = {{std::string(word), false}};
  std::vector<std::string> stems;
  for (const auto &n : kIrregularNouns) {
    if (n.plural == word) stems.emplace_back(n.singular);
  }
  for (std::string_view suffix : {"s", "es", "ies"}) {
    if (!EndsWith(word, suffix) || word.size() <= suffix.size()) continue;
    std::string stem(word.substr(0, word.size() - suffix.size()));
    stems.push_back(suffix == "ies" ? stem + "y" : stem);
  }
  for (const auto &s : stems) {
    if (Plural(s) != word) continue;
    bool seen = std::any_of(out.begin(), out.end(), [&](const NounAnalysis &a) {
      return a.lemma == s && a.plural;
    });
    if (!seen) out.push_back({s, true});
  }
  return out;
}

}  // namespace ston::english
