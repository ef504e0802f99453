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

#include "ston/syntax.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

namespace ston {

namespace {

constexpr std::array<std::string_view, 5> kSectionNames = {
    "@ston", "@roles", "@actions", "@sentences", "@end",
};
enum Section { kStonSection, kRolesSection, kActionsSection, kSentencesSection,
               kEndSection };

int SectionIndex(std::string_view lexeme) {
  for (size_t i = 0; i < kSectionNames.size(); ++i) {
    if (kSectionNames[i] == lexeme) return static_cast<int>(i);
  }
  return -1;
}

bool IsIdentStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsIdentChar(char c) { return IsIdentStart(c) || IsDigit(c); }

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  TokenizeResult Run() {
    TokenizeResult result;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        Advance(1);
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        Advance(1);
        continue;
      }
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance(1);
        continue;
      }
      SourceLocation start = location_;
      size_t begin = pos_;
      if (c == '@') {
        size_t end = pos_ + 1;
        while (end < text_.size() && IsIdentChar(text_[end])) ++end;
        std::string_view word = text_.substr(begin, end - begin);
        Advance(end - begin);
        if (SectionIndex(word) < 0) {
          result.errors.push_back(
              {start, std::string(parse_error::kUnexpectedChar),
               "unknown section marker '" + std::string(word) + "'",
               {"@ston", "@roles", "@actions", "@sentences", "@end"}});
          continue;
        }
        result.tokens.push_back({TokenKind::kSection, word, start});
        continue;
      }
      if (IsIdentStart(c) || IsDigit(c)) {
        bool number = IsDigit(c);
        size_t end = pos_ + 1;
        if (number) {
          while (end < text_.size() && IsDigit(text_[end])) ++end;
        } else {
          while (end < text_.size() && IsIdentChar(text_[end])) ++end;
        }
        Advance(end - begin);
        result.tokens.push_back({number ? TokenKind::kNumber : TokenKind::kIdent,
                                 text_.substr(begin, end - begin), start});
        continue;
      }
      TokenKind kind;
      switch (c) {
        case '{': kind = TokenKind::kLBrace; break;
        case '}': kind = TokenKind::kRBrace; break;
        case '[': kind = TokenKind::kLBracket; break;
        case ']': kind = TokenKind::kRBracket; break;
        case ':': kind = TokenKind::kColon; break;
        case ';': kind = TokenKind::kSemicolon; break;
        case ',': kind = TokenKind::kComma; break;
        case '|': kind = TokenKind::kPipe; break;
        default: {
          // Skip a whole UTF-8 sequence so one character yields one error.
          size_t end = pos_ + 1;
          if (static_cast<unsigned char>(c) >= 0xC0) {
            while (end < text_.size() &&
                   (static_cast<unsigned char>(text_[end]) & 0xC0) == 0x80) {
              ++end;
            }
          }
          std::string shown = IsPrintable(c) ? std::string(1, c)
                                             : "\\x" + Hex(c);
          result.errors.push_back({start,
                                   std::string(parse_error::kUnexpectedChar),
                                   "unexpected character '" + shown + "'",
                                   {}});
          Advance(end - begin);
          continue;
        }
      }
      Advance(1);
      result.tokens.push_back({kind, text_.substr(begin, 1), start});
    }
    return result;
  }

 private:
  static bool IsPrintable(char c) { return c > 0x20 && c < 0x7f; }
  static std::string Hex(char c) {
    static const char kDigits[] = "0123456789abcdef";
    auto u = static_cast<unsigned char>(c);
    return {kDigits[u >> 4], kDigits[u & 15]};
  }

  void Advance(size_t n) {
    for (size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++location_.line;
        location_.column = 1;
      } else {
        ++location_.column;
      }
      ++pos_;
      location_.offset = pos_;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  SourceLocation location_;
};

// Untyped syntax tree produced by the first phase.
struct ValueNode {
  bool is_list = false;
  std::vector<std::vector<Token>> groups;
  std::vector<SourceLocation> pipes;
  SourceLocation location;
};

struct BlockNode;

struct AttrNode {
  Token key;
  std::optional<ValueNode> value;
  std::vector<BlockNode> block;  // exactly one element when not a value
};

struct BlockNode {
  SourceLocation location;
  std::vector<AttrNode> attrs;
};

// Converts one block's attributes, tracking keys already seen.
class KeySet {
 public:
  bool Insert(std::string_view key) { return seen_.insert(key).second; }

 private:
  std::set<std::string_view> seen_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {
    TokenizeResult tr = Tokenize(text);
    tokens_ = std::move(tr.tokens);
    errors_ = std::move(tr.errors);
    SourceLocation eof;
    if (!text.empty()) {
      // Errors at end of input point at the last byte.
      eof = LocationOf(text.size() - 1);
    }
    tokens_.push_back({TokenKind::kEnd, {}, eof});
  }

  ParseResult Run() {
    Document doc;
    int expected = kStonSection;
    while (!At(TokenKind::kEnd)) {
      const Token &tok = Peek();
      if (tok.kind != TokenKind::kSection) {
        Error(tok.location, parse_error::kUnexpectedToken,
              "unexpected " + Describe(tok) + " outside of a section",
              {std::string(kSectionNames[std::min(expected, 4)])});
        SkipToSection();
        continue;
      }
      int idx = SectionIndex(tok.lexeme);
      Next();
      bool discard = false;
      if (idx < expected) {
        Error(tok.location, parse_error::kUnexpectedToken,
              "section " + std::string(tok.lexeme) + " is repeated or out of order",
              {});
        discard = true;
      } else {
        for (int missing = expected; missing < idx; ++missing) {
          Error(tok.location, parse_error::kMissingSection,
                "missing section " + std::string(kSectionNames[missing]),
                {std::string(kSectionNames[missing])});
        }
        expected = idx + 1;
      }
      if (idx == kEndSection && !discard) {
        if (!At(TokenKind::kEnd)) {
          Error(Peek().location, parse_error::kUnexpectedToken,
                "unexpected " + Describe(Peek()) + " after @end", {});
        }
        break;
      }
      if (idx == kStonSection || idx == kEndSection) continue;
      Document scratch;
      ParseBlocks(idx, discard ? scratch : doc);
    }
    if (expected <= kEndSection) {
      for (int missing = expected; missing <= kEndSection; ++missing) {
        Error(Peek().location, parse_error::kMissingSection,
              "missing section " + std::string(kSectionNames[missing]),
              {std::string(kSectionNames[missing])});
      }
    }

    ParseResult result;
    std::stable_sort(errors_.begin(), errors_.end(),
                     [](const ParseError &a, const ParseError &b) {
                       return a.location.offset < b.location.offset;
                     });
    result.errors = std::move(errors_);
    if (result.errors.empty()) result.document = std::move(doc);
    return result;
  }

 private:
  // ---- token stream ------------------------------------------------------

  const Token &Peek() const { return tokens_[pos_]; }
  bool At(TokenKind kind) const { return Peek().kind == kind; }
  const Token &Next() {
    const Token &t = tokens_[pos_];
    if (t.kind != TokenKind::kEnd) ++pos_;
    return t;
  }
  bool Accept(TokenKind kind) {
    if (!At(kind)) return false;
    Next();
    return true;
  }

  SourceLocation LocationOf(size_t offset) const {
    SourceLocation loc;
    for (size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
    loc.offset = offset;
    return loc;
  }

  static std::string Describe(const Token &t) {
    if (t.kind == TokenKind::kEnd) return "end of input";
    return std::string(TokenKindName(t.kind)) + " '" + std::string(t.lexeme) + "'";
  }

  void Error(SourceLocation loc, std::string_view code, std::string message,
             std::vector<std::string> expected) {
    errors_.push_back(
        {loc, std::string(code), std::move(message), std::move(expected)});
  }

  void ExpectedError(const char *what, std::vector<std::string> expected) {
    const Token &t = Peek();
    Error(t.location, parse_error::kUnexpectedToken,
          std::string("expected ") + what + ", found " + Describe(t),
          std::move(expected));
  }

  // Skips a balanced { ... } group starting at the current '{'.
  void SkipBraces() {
    int depth = 0;
    while (!At(TokenKind::kEnd) && !At(TokenKind::kSection)) {
      TokenKind k = Next().kind;
      if (k == TokenKind::kLBrace) ++depth;
      if (k == TokenKind::kRBrace && --depth <= 0) return;
    }
  }

  // Error recovery inside a block: consume through the next ';', stop before
  // the next '}' or section marker.
  void Recover() {
    while (!At(TokenKind::kEnd) && !At(TokenKind::kSection)) {
      if (At(TokenKind::kRBrace)) return;
      if (At(TokenKind::kLBrace)) {
        SkipBraces();
        continue;
      }
      if (Next().kind == TokenKind::kSemicolon) return;
    }
  }

  void SkipToSection() {
    while (!At(TokenKind::kEnd) && !At(TokenKind::kSection)) Next();
  }

  // ---- phase 1: generic syntax ------------------------------------------

  void ParseBlocks(int section, Document &doc) {
    static constexpr std::array<std::string_view, 4> kLetters = {"", "r", "a",
                                                                 "s"};
    std::string_view letter = kLetters[section];
    while (!At(TokenKind::kEnd) && !At(TokenKind::kSection)) {
      const Token &tok = Peek();
      if (tok.kind != TokenKind::kIdent || tok.lexeme != letter) {
        ExpectedError(("'" + std::string(letter) + "' block").c_str(),
                      {std::string(letter)});
        if (At(TokenKind::kLBrace)) {
          SkipBraces();
        } else {
          Next();
        }
        continue;
      }
      Next();
      if (!Accept(TokenKind::kColon)) {
        ExpectedError("':'", {":"});
        if (!At(TokenKind::kLBrace)) continue;
      }
      BlockNode block;
      block.location = tok.location;
      if (!Accept(TokenKind::kLBrace)) {
        ExpectedError("'{'", {"{"});
        continue;
      }
      ParseBlockBody(block);
      switch (section) {
        case kRolesSection:
          if (auto r = BuildRole(block)) doc.roles.push_back(std::move(*r));
          break;
        case kActionsSection:
          if (auto a = BuildAction(block)) doc.actions.push_back(std::move(*a));
          break;
        case kSentencesSection:
          if (auto s = BuildSentence(block)) {
            doc.sentences.push_back(std::move(*s));
          }
          break;
      }
    }
  }

  // Parses attributes up to and including the closing '}'.
  void ParseBlockBody(BlockNode &block) {
    while (true) {
      const Token &t = Peek();
      if (t.kind == TokenKind::kRBrace) {
        Next();
        return;
      }
      if (t.kind == TokenKind::kEnd || t.kind == TokenKind::kSection) {
        ExpectedError("'}'", {"}"});
        return;
      }
      if (t.kind != TokenKind::kIdent) {
        ExpectedError("attribute key", {"IDENT", "}"});
        if (At(TokenKind::kLBrace)) {
          SkipBraces();
        } else {
          Recover();
        }
        continue;
      }
      AttrNode attr{Next(), std::nullopt, {}};
      if (!Accept(TokenKind::kColon)) {
        ExpectedError("':'", {":"});
        Recover();
        continue;
      }
      if (At(TokenKind::kLBrace)) {
        BlockNode child;
        child.location = Next().location;
        ParseBlockBody(child);
        attr.block.push_back(std::move(child));
        block.attrs.push_back(std::move(attr));
        continue;
      }
      auto value = ParseValue();
      if (!value) {
        Recover();
        continue;
      }
      if (!Accept(TokenKind::kSemicolon)) {
        ExpectedError("';'", {";"});
        Recover();
        continue;
      }
      attr.value = std::move(value);
      block.attrs.push_back(std::move(attr));
    }
  }

  bool AtScalar() const {
    return At(TokenKind::kIdent) || At(TokenKind::kNumber);
  }

  std::optional<ValueNode> ParseValue() {
    ValueNode v;
    v.location = Peek().location;
    if (AtScalar()) {
      v.groups.push_back({Next()});
      return v;
    }
    if (!Accept(TokenKind::kLBracket)) {
      ExpectedError("value", {"IDENT", "NUMBER", "["});
      return std::nullopt;
    }
    v.is_list = true;
    v.groups.emplace_back();
    while (true) {
      if (!AtScalar()) {
        ExpectedError("list element", {"IDENT", "NUMBER"});
        return std::nullopt;
      }
      v.groups.back().push_back(Next());
      if (Accept(TokenKind::kComma)) continue;
      if (At(TokenKind::kPipe)) {
        v.pipes.push_back(Next().location);
        v.groups.emplace_back();
        continue;
      }
      if (Accept(TokenKind::kRBracket)) return v;
      ExpectedError("',', '|' or ']'", {",", "|", "]"});
      return std::nullopt;
    }
  }

  // ---- phase 2: typed conversion -----------------------------------------

  // Returns the single scalar token of a value, or reports an error.
  const Token *Scalar(const ValueNode &v, std::string_view field) {
    if (v.is_list) {
      Error(v.location, parse_error::kUnexpectedToken,
            "attribute '" + std::string(field) + "' takes a single value, not a list",
            {"IDENT", "NUMBER"});
      return nullptr;
    }
    return &v.groups[0][0];
  }

  std::optional<Identifier> ToIdentifier(const Token &t, std::string_view field) {
    if (t.kind != TokenKind::kIdent) {
      Error(t.location, parse_error::kUnexpectedToken,
            "attribute '" + std::string(field) + "' expects an identifier, found " +
                Describe(t),
            {"IDENT"});
      return std::nullopt;
    }
    return Identifier(std::string(t.lexeme));
  }

  std::optional<SynsetRef> ToSynset(const Token &t, std::string_view field,
                                    PartOfSpeech pos) {
    if (t.kind != TokenKind::kNumber) {
      Error(t.location, parse_error::kUnexpectedToken,
            "attribute '" + std::string(field) + "' expects a synset number, found " +
                Describe(t),
            {"NUMBER"});
      return std::nullopt;
    }
    // Leading zeros are allowed; the value must fit eight digits.
    std::string_view digits = t.lexeme;
    while (digits.size() > 1 && digits[0] == '0') digits.remove_prefix(1);
    uint32_t value = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.size() > 8 || ec != std::errc() || value > kMaxSynsetOffset) {
      Error(t.location, parse_error::kInvalidValue,
            "synset offset '" + std::string(t.lexeme) + "' exceeds 8 digits", {});
      return std::nullopt;
    }
    return SynsetRef{pos, value};
  }

  std::optional<SynsetRef> Synset(const ValueNode &v, std::string_view field,
                                  PartOfSpeech pos) {
    const Token *t = Scalar(v, field);
    if (!t) return std::nullopt;
    return ToSynset(*t, field, pos);
  }

  std::optional<Identifier> Ident(const ValueNode &v, std::string_view field) {
    const Token *t = Scalar(v, field);
    if (!t) return std::nullopt;
    return ToIdentifier(*t, field);
  }

  template <typename T, typename ParseFn>
  std::optional<T> Code(const ValueNode &v, std::string_view field,
                        ParseFn parse) {
    const Token *t = Scalar(v, field);
    if (!t) return std::nullopt;
    std::optional<T> out = parse(t->lexeme);
    if (!out) {
      Error(t->location, parse_error::kUnknownCode,
            "unknown code '" + std::string(t->lexeme) + "' for '" +
                std::string(field) + "'",
            {});
    }
    return out;
  }

  std::optional<bool> Flag(const ValueNode &v, std::string_view field) {
    return Code<bool>(v, field, [](std::string_view s) -> std::optional<bool> {
      if (s == "Y") return true;
      if (s == "N") return false;
      return std::nullopt;
    });
  }

  std::optional<ReferenceGroups> Groups(const ValueNode &v,
                                        std::string_view field) {
    ReferenceGroups out;
    bool ok = true;
    for (const auto &group : v.groups) {
      auto &ids = out.groups.emplace_back();
      for (const Token &t : group) {
        auto id = ToIdentifier(t, field);
        if (id) {
          ids.push_back(std::move(*id));
        } else {
          ok = false;
        }
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

  bool RejectPipes(const ValueNode &v, std::string_view field) {
    if (v.pipes.empty()) return true;
    Error(v.pipes[0], parse_error::kUnexpectedToken,
          "attribute '" + std::string(field) + "' does not accept alternatives ('|')",
          {",", "]"});
    return false;
  }

  std::optional<std::vector<Identifier>> IdList(const ValueNode &v,
                                                std::string_view field) {
    if (!RejectPipes(v, field)) return std::nullopt;
    auto groups = Groups(v, field);
    if (!groups) return std::nullopt;
    return std::move(groups->groups[0]);
  }

  std::optional<std::vector<SynsetRef>> SynsetList(const ValueNode &v,
                                                   std::string_view field,
                                                   PartOfSpeech pos) {
    if (!RejectPipes(v, field)) return std::nullopt;
    std::vector<SynsetRef> out;
    bool ok = true;
    for (const Token &t : v.groups[0]) {
      auto s = ToSynset(t, field, pos);
      if (s) {
        out.push_back(*s);
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

  // Validates the attribute's shape (value vs block) and uniqueness.
  // `repeatable` blocks may appear several times.
  bool CheckAttr(const AttrNode &attr, bool want_block, bool repeatable,
                 KeySet &seen) {
    std::string key(attr.key.lexeme);
    bool is_block = attr.value == std::nullopt;
    if (is_block != want_block) {
      Error(is_block ? attr.block[0].location : attr.value->location,
            parse_error::kUnexpectedToken,
            "attribute '" + key + (want_block ? "' expects a block '{...}'"
                                              : "' expects a value, not a block"),
            {want_block ? "{" : "value"});
      return false;
    }
    if (!repeatable && !seen.Insert(attr.key.lexeme)) {
      Error(attr.key.location, parse_error::kDuplicateKey,
            "duplicate attribute '" + key + "'", {});
      return false;
    }
    return true;
  }

  void UnknownKey(const AttrNode &attr, std::string_view block_kind) {
    Error(attr.key.location, parse_error::kUnknownKey,
          "unknown key '" + std::string(attr.key.lexeme) + "' in " +
              std::string(block_kind) + " block",
          {});
  }

  void MissingKey(SourceLocation loc, std::string_view key,
                  std::string_view block_kind) {
    Error(loc, parse_error::kMissingKey,
          std::string(block_kind) + " block requires '" + std::string(key) + "'",
          {std::string(key)});
  }

  // adj / advb: { syn; adv; }
  template <typename Block>
  std::optional<Block> BuildModifier(const BlockNode &node,
                                     std::string_view kind, PartOfSpeech pos) {
    Block out;
    KeySet seen;
    bool ok = true, has_syn = false;
    for (const auto &attr : node.attrs) {
      std::string_view key = attr.key.lexeme;
      if (key != "syn" && key != "adv") {
        UnknownKey(attr, kind);
        ok = false;
        continue;
      }
      if (!CheckAttr(attr, false, false, seen)) {
        ok = false;
        continue;
      }
      if (key == "syn") {
        auto s = Synset(*attr.value, key, pos);
        if (s) {
          out.syn = *s;
          has_syn = true;
        } else {
          ok = false;
        }
      } else {
        auto list = SynsetList(*attr.value, key, PartOfSpeech::kAdverb);
        if (list) {
          out.adverbs = std::move(*list);
        } else {
          ok = false;
        }
      }
    }
    if (!has_syn && ok) {
      MissingKey(node.location, "syn", kind);
      ok = false;
    }
    if (!ok) return std::nullopt;
    return out;
  }

  // rel / adp / cls / pro / cmp share { typ; ref; } and cmp adds adj.
  struct LinkParts {
    std::optional<const ValueNode *> typ, ref, adj;
  };

  std::optional<LinkParts> CollectLink(const BlockNode &node,
                                       std::string_view kind, bool allow_adj) {
    LinkParts parts;
    KeySet seen;
    bool ok = true;
    for (const auto &attr : node.attrs) {
      std::string_view key = attr.key.lexeme;
      bool known = key == "typ" || key == "ref" || (allow_adj && key == "adj");
      if (!known) {
        UnknownKey(attr, kind);
        ok = false;
        continue;
      }
      if (!CheckAttr(attr, false, false, seen)) {
        ok = false;
        continue;
      }
      const ValueNode *v = &*attr.value;
      if (key == "typ") parts.typ = v;
      if (key == "ref") parts.ref = v;
      if (key == "adj") parts.adj = v;
    }
    if (!ok) return std::nullopt;
    if (!parts.typ) {
      MissingKey(node.location, "typ", kind);
      return std::nullopt;
    }
    return parts;
  }

  std::optional<RelativeLink> BuildRelative(const BlockNode &node) {
    auto parts = CollectLink(node, "rel", false);
    if (!parts) return std::nullopt;
    if (!parts->ref) {
      MissingKey(node.location, "ref", "rel");
      return std::nullopt;
    }
    auto type = Code<RelativeType>(**parts->typ, "typ", ParseRelativeCode);
    auto refs = IdList(**parts->ref, "ref");
    if (!type || !refs) return std::nullopt;
    return RelativeLink{*type, std::move(*refs)};
  }

  std::optional<AdpositionLink> BuildAdposition(const BlockNode &node) {
    auto parts = CollectLink(node, "adp", false);
    if (!parts) return std::nullopt;
    if (!parts->ref) {
      MissingKey(node.location, "ref", "adp");
      return std::nullopt;
    }
    auto type = Code<AdpositionType>(**parts->typ, "typ", ParseAdpositionCode);
    auto refs = Groups(**parts->ref, "ref");
    if (!type || !refs) return std::nullopt;
    return AdpositionLink{*type, std::move(*refs)};
  }

  std::optional<AdverbialLink> BuildAdverbial(const BlockNode &node) {
    auto parts = CollectLink(node, "cls", false);
    if (!parts) return std::nullopt;
    if (!parts->ref) {
      MissingKey(node.location, "ref", "cls");
      return std::nullopt;
    }
    auto type = Code<AdverbialType>(**parts->typ, "typ", ParseAdverbialCode);
    auto refs = IdList(**parts->ref, "ref");
    if (!type || !refs) return std::nullopt;
    return AdverbialLink{*type, std::move(*refs)};
  }

  std::optional<Pronoun> BuildPronoun(const BlockNode &node) {
    auto parts = CollectLink(node, "pro", false);
    if (!parts) return std::nullopt;
    const Token *code = Scalar(**parts->typ, "typ");
    if (!code) return std::nullopt;
    std::optional<Pronoun> p;
    try {
      p = DecodePronoun(code->lexeme);
    } catch (const InvalidPronounCode &e) {
      Error(code->location, parse_error::kUnknownCode,
            "unknown code '" + std::string(code->lexeme) + "' for 'typ': " + e.what(),
            {});
      return std::nullopt;
    }
    if (parts->ref) {
      auto refs = IdList(**parts->ref, "ref");
      if (!refs) return std::nullopt;
      p->refs = std::move(*refs);
    }
    return p;
  }

  std::optional<Comparison> BuildComparison(const BlockNode &node) {
    auto parts = CollectLink(node, "cmp", true);
    if (!parts) return std::nullopt;
    Comparison c;
    auto type = Code<ComparisonType>(**parts->typ, "typ", ParseComparisonCode);
    if (!type) return std::nullopt;
    c.type = *type;
    if (parts->ref) {
      auto refs = IdList(**parts->ref, "ref");
      if (!refs) return std::nullopt;
      c.refs = std::move(*refs);
    }
    if (parts->adj) {
      auto adj = Synset(**parts->adj, "adj", PartOfSpeech::kAdjective);
      if (!adj) return std::nullopt;
      c.adjective = *adj;
    }
    return c;
  }

  std::optional<Role> BuildRole(const BlockNode &node) {
    Role role;
    KeySet seen;
    bool ok = true, has_id = false;
    for (const auto &attr : node.attrs) {
      std::string_view key = attr.key.lexeme;
      if (key == "id" || key == "syn" || key == "nam" || key == "qnt" ||
          key == "def") {
        if (!CheckAttr(attr, false, false, seen)) {
          ok = false;
          continue;
        }
        const ValueNode &v = *attr.value;
        if (key == "id") {
          auto id = Ident(v, key);
          ok &= id.has_value();
          if (id) {
            role.id = std::move(*id);
            has_id = true;
          }
        } else if (key == "syn") {
          auto s = Synset(v, key, PartOfSpeech::kNoun);
          ok &= s.has_value();
          role.syn = s;
        } else if (key == "nam") {
          const Token *t = Scalar(v, key);
          ok &= t != nullptr;
          if (t) role.name = std::string(t->lexeme);
        } else if (key == "qnt") {
          const Token *t = Scalar(v, key);
          ok &= t != nullptr;
          if (t) {
            try {
              role.quantity = ParseQuantity(t->lexeme);
            } catch (const InvalidQuantity &e) {
              Error(t->location, parse_error::kInvalidValue, e.what(), {});
              ok = false;
            }
          }
        } else {
          auto f = Flag(v, key);
          ok &= f.has_value();
          role.defined = f.value_or(false);
        }
      } else if (key == "adj" || key == "rel" || key == "adp" || key == "pro") {
        if (!CheckAttr(attr, true, key != "pro", seen)) {
          ok = false;
          continue;
        }
        const BlockNode &child = attr.block[0];
        if (key == "adj") {
          auto b = BuildModifier<AdjectiveBlock>(child, "adj",
                                                 PartOfSpeech::kAdjective);
          ok &= b.has_value();
          if (b) role.adjectives.push_back(std::move(*b));
        } else if (key == "rel") {
          auto b = BuildRelative(child);
          ok &= b.has_value();
          if (b) role.relatives.push_back(std::move(*b));
        } else if (key == "adp") {
          auto b = BuildAdposition(child);
          ok &= b.has_value();
          if (b) role.adpositions.push_back(std::move(*b));
        } else {
          auto p = BuildPronoun(child);
          ok &= p.has_value();
          role.pronoun = std::move(p);
        }
      } else {
        UnknownKey(attr, "role");
        ok = false;
      }
    }
    if (!has_id && ok) {
      MissingKey(node.location, "id", "role");
      ok = false;
    }
    if (!ok) return std::nullopt;
    return role;
  }

  std::optional<Action> BuildAction(const BlockNode &node) {
    Action action;
    KeySet seen;
    bool ok = true, has_id = false, has_syn = false;
    for (const auto &attr : node.attrs) {
      std::string_view key = attr.key.lexeme;
      if (key == "id" || key == "syn" || key == "tns" || key == "prg" ||
          key == "prf" || key == "neg" || key == "mod" || key == "agt" ||
          key == "thm") {
        if (!CheckAttr(attr, false, false, seen)) {
          ok = false;
          continue;
        }
        const ValueNode &v = *attr.value;
        if (key == "id") {
          auto id = Ident(v, key);
          ok &= id.has_value();
          if (id) {
            action.id = std::move(*id);
            has_id = true;
          }
        } else if (key == "syn") {
          auto s = Synset(v, key, PartOfSpeech::kVerb);
          ok &= s.has_value();
          if (s) {
            action.syn = *s;
            has_syn = true;
          }
        } else if (key == "tns") {
          action.tense = Code<Tense>(v, key, ParseTenseCode);
          ok &= action.tense.has_value();
        } else if (key == "mod") {
          action.modality = Code<Modality>(v, key, ParseModalityCode);
          ok &= action.modality.has_value();
        } else if (key == "agt" || key == "thm") {
          auto g = Groups(v, key);
          ok &= g.has_value();
          (key == "agt" ? action.agents : action.themes) = std::move(g);
        } else {
          auto f = Flag(v, key);
          ok &= f.has_value();
          bool value = f.value_or(false);
          if (key == "prg") action.progressive = value;
          if (key == "prf") action.perfect = value;
          if (key == "neg") action.negated = value;
        }
      } else if (key == "advb" || key == "adp" || key == "cls" || key == "cmp") {
        if (!CheckAttr(attr, true, key != "cmp", seen)) {
          ok = false;
          continue;
        }
        const BlockNode &child = attr.block[0];
        if (key == "advb") {
          auto b =
              BuildModifier<AdverbBlock>(child, "advb", PartOfSpeech::kAdverb);
          ok &= b.has_value();
          if (b) action.adverbs.push_back(std::move(*b));
        } else if (key == "adp") {
          auto b = BuildAdposition(child);
          ok &= b.has_value();
          if (b) action.adpositions.push_back(std::move(*b));
        } else if (key == "cls") {
          auto b = BuildAdverbial(child);
          ok &= b.has_value();
          if (b) action.adverbials.push_back(std::move(*b));
        } else {
          action.comparison = BuildComparison(child);
          ok &= action.comparison.has_value();
        }
      } else {
        UnknownKey(attr, "action");
        ok = false;
      }
    }
    if (ok && !has_id) {
      MissingKey(node.location, "id", "action");
      ok = false;
    }
    if (ok && !has_syn) {
      MissingKey(node.location, "syn", "action");
      ok = false;
    }
    if (!ok) return std::nullopt;
    return action;
  }

  std::optional<Sentence> BuildSentence(const BlockNode &node) {
    Sentence sentence;
    KeySet seen;
    bool ok = true, has_typ = false;
    for (const auto &attr : node.attrs) {
      std::string_view key = attr.key.lexeme;
      if (key != "typ" && key != "act") {
        UnknownKey(attr, "sentence");
        ok = false;
        continue;
      }
      if (!CheckAttr(attr, false, false, seen)) {
        ok = false;
        continue;
      }
      if (key == "typ") {
        auto t = Code<SentenceType>(*attr.value, key, ParseSentenceTypeCode);
        ok &= t.has_value();
        if (t) {
          sentence.type = *t;
          has_typ = true;
        }
      } else {
        auto ids = IdList(*attr.value, key);
        ok &= ids.has_value();
        if (ids) sentence.actions = std::move(*ids);
      }
    }
    if (ok && !has_typ) {
      MissingKey(node.location, "typ", "sentence");
      ok = false;
    }
    if (!ok) return std::nullopt;
    return sentence;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  size_t pos_ = 0;
  std::vector<ParseError> errors_;
};

}  // namespace

std::string ParseError::ToString() const {
  return std::to_string(location.line) + ":" + std::to_string(location.column) +
         ": " + code + ": " + message;
}

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kSection: return "SECTION";
    case TokenKind::kIdent: return "IDENT";
    case TokenKind::kNumber: return "NUMBER";
    case TokenKind::kLBrace: return "LBRACE";
    case TokenKind::kRBrace: return "RBRACE";
    case TokenKind::kLBracket: return "LBRACK";
    case TokenKind::kRBracket: return "RBRACK";
    case TokenKind::kColon: return "COLON";
    case TokenKind::kSemicolon: return "SEMI";
    case TokenKind::kComma: return "COMMA";
    case TokenKind::kPipe: return "PIPE";
    case TokenKind::kEnd: return "END";
  }
  return "?";
}

TokenizeResult Tokenize(std::string_view text) { return Tokenizer(text).Run(); }

ParseResult Parse(std::string_view text) { return Parser(text).Run(); }

std::vector<ParseResult> ParseAllSerial(std::span<const std::string> texts) {
  std::vector<ParseResult> results;
  results.reserve(texts.size());
  for (const auto &t : texts) results.push_back(Parse(t));
  return results;
}

std::vector<ParseResult> ParseAll(std::span<const std::string> texts) {
  std::vector<ParseResult> results(texts.size());
  const auto n = static_cast<std::ptrdiff_t>(texts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    results[i] = Parse(texts[i]);
  }
  return results;
}

}  // namespace ston
