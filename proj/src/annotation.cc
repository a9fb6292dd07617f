#include "distractor/annotation.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <tuple>

#include "distractor/error.h"
#include "distractor/numeric.h"
#include "distractor/text.h"
#include "json.hpp"
#include "lexicon.h"

namespace distractor {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const char *PosName(Pos pos) {
  switch (pos) {
    case Pos::kNoun:
      return "noun";
    case Pos::kPhrasalNoun:
      return "phrasal-noun";
    case Pos::kVerb:
      return "verb";
    case Pos::kPhrasalVerb:
      return "phrasal-verb";
    case Pos::kAdjective:
      return "adjective";
    case Pos::kAdverb:
      return "adverb";
    case Pos::kNumber:
      return "number";
    case Pos::kDeterminer:
      return "determiner";
    case Pos::kOther:
      return "other";
  }
  return "other";
}

std::optional<Pos> ParsePos(std::string_view name) {
  for (Pos p : {Pos::kNoun, Pos::kPhrasalNoun, Pos::kVerb, Pos::kPhrasalVerb,
                Pos::kAdjective, Pos::kAdverb, Pos::kNumber, Pos::kDeterminer,
                Pos::kOther}) {
    if (name == PosName(p)) return p;
  }
  return std::nullopt;
}

const char *RoleName(Role role) {
  switch (role) {
    case Role::kSubject:
      return "subject";
    case Role::kObject:
      return "object";
    case Role::kAdjectiveOfSubject:
      return "adjective-of-subject";
    case Role::kAdjectiveOfObject:
      return "adjective-of-object";
    case Role::kPredicate:
      return "predicate";
    case Role::kAdverb:
      return "adverb";
  }
  return "subject";
}

std::optional<Role> ParseRole(std::string_view name) {
  for (Role r : {Role::kSubject, Role::kObject, Role::kAdjectiveOfSubject,
                 Role::kAdjectiveOfObject, Role::kPredicate, Role::kAdverb}) {
    if (name == RoleName(r)) return r;
  }
  return std::nullopt;
}

const char *TargetTypeName(TargetType type) {
  switch (type) {
    case TargetType::kT1Temporal:
      return "T1Temporal";
    case TargetType::kT1Numeric:
      return "T1Numeric";
    case TargetType::kT2Person:
      return "T2Person";
    case TargetType::kT2Location:
      return "T2Location";
    case TargetType::kT2Organization:
      return "T2Organization";
    case TargetType::kT3Noun:
      return "T3Noun";
    case TargetType::kT3Adjective:
      return "T3Adjective";
    case TargetType::kT3Verb:
      return "T3Verb";
    case TargetType::kT3Adverb:
      return "T3Adverb";
  }
  return "T3Noun";
}

int TargetPreferenceRank(TargetType type) { return static_cast<int>(type); }

int RolePreferenceRank(std::optional<Role> role) {
  return role ? static_cast<int>(*role) : 6;
}

bool IsType1(TargetType t) {
  return t == TargetType::kT1Temporal || t == TargetType::kT1Numeric;
}

bool IsType2(TargetType t) {
  return t == TargetType::kT2Person || t == TargetType::kT2Location ||
         t == TargetType::kT2Organization;
}

bool IsType3(TargetType t) { return !IsType1(t) && !IsType2(t); }

EntityTag EntityCategoryOf(TargetType t) {
  switch (t) {
    case TargetType::kT2Person:
      return EntityTag::kPerson;
    case TargetType::kT2Location:
      return EntityTag::kLocation;
    case TargetType::kT2Organization:
      return EntityTag::kOrganization;
    default:
      return EntityTag::kNone;
  }
}

bool IsPronoun(std::string_view word) {
  static const std::set<std::string, std::less<>> kPronouns = {
      "i",        "me",        "you",        "he",        "him",
      "she",      "her",       "it",         "we",        "us",
      "they",     "them",      "myself",     "yourself",  "himself",
      "herself",  "itself",    "ourselves",  "themselves", "someone",
      "somebody", "something", "anyone",     "anybody",   "anything",
      "everyone", "everybody", "everything", "nobody",    "nothing",
      "his",      "hers",      "its",        "their",     "theirs",
      "our",      "ours",      "my",         "mine",      "your",
      "yours",    "who",       "whom",       "whose",     "this",
      "that",     "these",     "those",      "which",     "what"};
  return kPronouns.count(ToLower(word)) > 0;
}

// --- validation ------------------------------------------------------------

void ValidateSentence(const AnnotatedSentence &s) {
  if (s.tokens.empty()) throw ValidationError("sentence has no tokens");
  std::size_t previous_end = 0;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const Token &t = s.tokens[i];
    const std::string where = "token " + std::to_string(i) + " ('" + t.surface + "')";
    if (t.span.begin >= t.span.end) {
      throw ValidationError(where + ": empty character span");
    }
    if (t.span.end > s.text.size()) {
      throw ValidationError(where + ": span exceeds sentence length " +
                            std::to_string(s.text.size()));
    }
    if (i > 0 && t.span.begin < previous_end) {
      throw ValidationError(where + ": overlaps or precedes previous token");
    }
    if (s.text.compare(t.span.begin, t.span.size(), t.surface) != 0) {
      throw ValidationError(where + ": surface does not match sentence text");
    }
    previous_end = t.span.end;
  }
  for (const RoleSpan &r : s.roles) {
    if (r.first_token > r.last_token || r.last_token >= s.tokens.size()) {
      throw ValidationError(std::string("role span '") + RoleName(r.role) +
                            "' is outside the sentence");
    }
  }
}

void ValidateArticle(const AnnotatedArticle &a) {
  if (a.article_id.empty()) throw ValidationError("article_id is empty");
  if (a.sentences.empty()) {
    throw ValidationError("article '" + a.article_id + "' has no sentences");
  }
  for (const auto &s : a.sentences) ValidateSentence(s);
}

// --- article format --------------------------------------------------------

namespace {

template <typename T>
T Field(const json &obj, const char *key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string("missing field '") + key + "'", line, key);
  }
  try {
    return it->get<T>();
  } catch (const json::exception &) {
    throw ParseError(std::string("field '") + key + "' has the wrong type", line,
                     key);
  }
}

template <typename T>
std::optional<T> OptionalField(const json &obj, const char *key,
                               std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return Field<T>(obj, key, line);
}

json ParseLine(const std::string &text, std::size_t line) {
  try {
    json obj = json::parse(text);
    if (!obj.is_object()) throw ParseError("expected a JSON object", line);
    return obj;
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line);
  }
}

AnnotatedSentence ParseSentence(const json &obj, std::size_t line) {
  AnnotatedSentence s;
  s.text = Field<std::string>(obj, "text", line);
  auto tokens = obj.find("tokens");
  if (tokens == obj.end() || !tokens->is_array()) {
    throw ParseError("missing field 'tokens'", line, "tokens");
  }
  for (const json &t : *tokens) {
    if (!t.is_object()) throw ParseError("token must be an object", line, "tokens");
    Token tok;
    tok.surface = Field<std::string>(t, "surface", line);
    tok.lemma = OptionalField<std::string>(t, "lemma", line)
                    .value_or(ToLower(tok.surface));
    auto pos = ParsePos(Field<std::string>(t, "pos", line));
    if (!pos) throw ParseError("unknown POS tag", line, "pos");
    tok.pos = *pos;
    auto entity =
        ParseEntityTag(OptionalField<std::string>(t, "entity", line).value_or("none"));
    if (!entity) throw ParseError("unknown entity tag", line, "entity");
    tok.entity = *entity;
    tok.span.begin = Field<std::size_t>(t, "start", line);
    tok.span.end = Field<std::size_t>(t, "end", line);
    s.tokens.push_back(std::move(tok));
  }
  if (auto roles = obj.find("roles"); roles != obj.end() && !roles->is_null()) {
    if (!roles->is_array()) throw ParseError("'roles' must be a list", line, "roles");
    for (const json &r : *roles) {
      auto role = ParseRole(Field<std::string>(r, "role", line));
      if (!role) throw ParseError("unknown role", line, "role");
      s.roles.push_back({*role, Field<std::size_t>(r, "first_token", line),
                         Field<std::size_t>(r, "last_token", line)});
    }
  }
  try {
    ValidateSentence(s);
  } catch (const ValidationError &e) {
    throw ValidationError("line " + std::to_string(line) + ": " + e.what());
  }
  return s;
}

}  // namespace

std::vector<AnnotatedArticle> ParseArticles(std::istream &in) {
  std::vector<AnnotatedArticle> articles;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (Trim(text).empty()) continue;
    json obj = ParseLine(text, line);
    if (!obj.contains("tokens")) {
      AnnotatedArticle a;
      a.article_id = Field<std::string>(obj, "article_id", line);
      if (a.article_id.empty()) {
        throw ParseError("article_id is empty", line, "article_id");
      }
      articles.push_back(std::move(a));
      continue;
    }
    if (articles.empty()) {
      throw ParseError("sentence before article header", line, "article_id");
    }
    articles.back().sentences.push_back(ParseSentence(obj, line));
  }
  if (articles.empty()) throw ParseError("no article header", line, "article_id");
  for (const auto &a : articles) ValidateArticle(a);
  return articles;
}

std::vector<AnnotatedArticle> ParseArticlesFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  return ParseArticles(in);
}

AnnotatedArticle ParseArticle(std::istream &in) {
  auto articles = ParseArticles(in);
  if (articles.size() != 1) {
    throw ParseError("expected one article, found " +
                     std::to_string(articles.size()));
  }
  return std::move(articles.front());
}

void WriteArticle(std::ostream &out, const AnnotatedArticle &a) {
  ordered_json header;
  header["article_id"] = a.article_id;
  out << header.dump() << '\n';
  for (const auto &s : a.sentences) {
    ordered_json line;
    line["text"] = s.text;
    line["tokens"] = ordered_json::array();
    for (const auto &t : s.tokens) {
      ordered_json tok;
      tok["surface"] = t.surface;
      tok["lemma"] = t.lemma;
      tok["pos"] = PosName(t.pos);
      tok["entity"] = EntityTagName(t.entity);
      tok["start"] = t.span.begin;
      tok["end"] = t.span.end;
      line["tokens"].push_back(std::move(tok));
    }
    line["roles"] = ordered_json::array();
    for (const auto &r : s.roles) {
      ordered_json role;
      role["role"] = RoleName(r.role);
      role["first_token"] = r.first_token;
      role["last_token"] = r.last_token;
      line["roles"].push_back(std::move(role));
    }
    out << line.dump() << '\n';
  }
}

std::vector<QAPair> ParseQaps(std::istream &in) {
  std::vector<QAPair> qaps;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (Trim(text).empty()) continue;
    json obj = ParseLine(text, line);
    QAPair q;
    q.article_id = Field<std::string>(obj, "article_id", line);
    q.question = Field<std::string>(obj, "question", line);
    q.answer_text = Field<std::string>(obj, "answer_text", line);
    if (Trim(q.answer_text).empty()) {
      throw ParseError("answer_text is empty", line, "answer_text");
    }
    auto sentence = OptionalField<std::size_t>(obj, "answer_sentence", line);
    auto first = OptionalField<std::size_t>(obj, "answer_first_token", line);
    auto last = OptionalField<std::size_t>(obj, "answer_last_token", line);
    if (sentence || first || last) {
      if (!sentence || !first || !last) {
        throw ParseError("answer location needs sentence, first and last token",
                         line, "answer_sentence");
      }
      q.location = AnswerLocation{*sentence, *first, *last};
    }
    qaps.push_back(std::move(q));
  }
  return qaps;
}

std::vector<QAPair> ParseQapsFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  return ParseQaps(in);
}

// --- fallback tagger -------------------------------------------------------

namespace {

bool IsSpaceChar(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsLeadingPunct(char c) {
  return c == '"' || c == '\'' || c == '(' || c == '[' || c == '{' || c == '`';
}

bool IsTrailingPunct(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?' ||
         c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}

bool KeepsTrailingDot(std::string_view chunk) {
  // "a.m.", "U.S." and known abbreviations keep their final period.
  std::string lower = ToLower(chunk.substr(0, chunk.size() - 1));
  if (internal::IsAbbreviation(lower)) return true;
  if (lower.find('.') == std::string::npos) return false;
  return std::all_of(lower.begin(), lower.end(),
                     [](char c) { return IsAlphaAscii(c) || c == '.'; });
}

std::vector<CharSpan> Tokenize(std::string_view text) {
  std::vector<CharSpan> spans;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpaceChar(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t end = i;
    while (end < text.size() && !IsSpaceChar(text[end])) ++end;

    std::size_t b = i, e = end;
    std::vector<CharSpan> tail;
    while (b < e && IsLeadingPunct(text[b])) {
      spans.push_back({b, b + 1});
      ++b;
    }
    while (e > b && IsTrailingPunct(text[e - 1])) {
      if (text[e - 1] == '.' && KeepsTrailingDot(text.substr(b, e - b))) break;
      tail.push_back({e - 1, e});
      --e;
    }
    if (e > b) {
      // Possessive clitic as its own token.
      if (e - b > 2 && text[e - 2] == '\'' && (text[e - 1] == 's' || text[e - 1] == 'S')) {
        spans.push_back({b, e - 2});
        spans.push_back({e - 2, e});
      } else {
        spans.push_back({b, e});
      }
    }
    spans.insert(spans.end(), tail.rbegin(), tail.rend());
    i = end;
  }
  return spans;
}

bool IsPunctuation(std::string_view s) {
  return std::none_of(s.begin(), s.end(), [](char c) {
    return IsAlphaAscii(c) || IsDigitAscii(c) || static_cast<unsigned char>(c) >= 0x80;
  });
}

}  // namespace

AnnotatedSentence TagSentence(std::string_view text,
                              const KnowledgeBase *gazetteer) {
  AnnotatedSentence s;
  s.text = std::string(text);
  for (const CharSpan &span : Tokenize(text)) {
    Token t;
    t.surface = s.text.substr(span.begin, span.size());
    t.span = span;
    s.tokens.push_back(std::move(t));
  }

  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    Token &t = s.tokens[i];
    const std::string lower = ToLower(t.surface);
    const bool initial = i == 0 || (i == 1 && IsPunctuation(s.tokens[0].surface));
    auto entry = internal::LookupWord(lower);
    if (IsPunctuation(t.surface)) {
      t.pos = Pos::kOther;
      t.lemma = t.surface;
    } else if (RecognizeNumeric(t.surface) && !(initial && entry)) {
      t.pos = Pos::kNumber;
      t.lemma = lower;
    } else if (entry) {
      t.pos = entry->pos;
      t.lemma = entry->lemma;
    } else if (!initial && IsUpperAscii(t.surface[0])) {
      t.pos = Pos::kNoun;
      t.lemma = t.surface;
    } else {
      t.pos = internal::GuessPos(lower);
      t.lemma = internal::GuessLemma(lower, t.pos);
    }
  }

  // Phrasal nouns and verbs from the lexicon, longest match first.
  const std::size_t max_phrase = internal::MaxPhraseWords();
  for (std::size_t i = 0; i < s.tokens.size();) {
    std::size_t matched = 0;
    for (std::size_t len = std::min(max_phrase, s.tokens.size() - i); len >= 2; --len) {
      std::string phrase;
      for (std::size_t k = i; k < i + len; ++k) {
        if (k > i) phrase += ' ';
        phrase += ToLower(s.tokens[k].surface);
      }
      if (auto pos = internal::LookupPhrase(phrase)) {
        for (std::size_t k = i; k < i + len; ++k) s.tokens[k].pos = *pos;
        matched = len;
        break;
      }
    }
    i += matched ? matched : 1;
  }

  // Gazetteer hits over capitalized runs, longest match first.
  if (gazetteer && !gazetteer->empty()) {
    for (std::size_t i = 0; i < s.tokens.size();) {
      std::size_t matched = 0;
      std::size_t longest = std::min(gazetteer->max_words(), s.tokens.size() - i);
      for (std::size_t len = longest; len >= 1; --len) {
        bool capitalized = true;
        for (std::size_t k = i; k < i + len; ++k) {
          if (!IsUpperAscii(s.tokens[k].surface[0])) capitalized = false;
        }
        if (!capitalized) continue;
        const CharSpan span{s.tokens[i].span.begin, s.tokens[i + len - 1].span.end};
        auto tag = gazetteer->Lookup(s.text.substr(span.begin, span.size()));
        if (tag && *tag != EntityTag::kNone) {
          for (std::size_t k = i; k < i + len; ++k) {
            s.tokens[k].entity = *tag;
            s.tokens[k].pos = Pos::kNoun;
            s.tokens[k].lemma = s.tokens[k].surface;
          }
          matched = len;
          break;
        }
      }
      i += matched ? matched : 1;
    }
  }
  return s;
}

AnnotatedArticle FallbackTag(std::string_view raw, const KnowledgeBase *gazetteer,
                             std::string article_id) {
  if (Trim(raw).empty()) throw ValidationError("empty input");
  AnnotatedArticle article;
  article.article_id = std::move(article_id);

  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string sentence = Trim(raw.substr(start, end - start));
    if (!sentence.empty()) {
      AnnotatedSentence s = TagSentence(sentence, gazetteer);
      if (!s.tokens.empty()) article.sentences.push_back(std::move(s));
    }
    start = end;
  };
  for (std::size_t i = 0; i < raw.size(); ++i) {
    char c = raw[i];
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t end = i + 1;
    while (end < raw.size() && (raw[end] == '"' || raw[end] == '\'' || raw[end] == ')')) {
      ++end;
    }
    if (end < raw.size() && !IsSpaceChar(raw[end])) continue;
    if (c == '.') {
      std::size_t w = i;
      while (w > start && !IsSpaceChar(raw[w - 1])) --w;
      if (KeepsTrailingDot(raw.substr(w, i + 1 - w))) continue;
    }
    flush(end);
    i = end - 1;
  }
  flush(raw.size());
  if (article.sentences.empty()) throw ValidationError("empty input");
  return article;
}

// --- answers and targets ---------------------------------------------------

namespace {

// Matches token surfaces against `text` from `cursor`, ignoring whitespace
// and case. Returns the spans, or nothing on mismatch.
std::optional<std::vector<CharSpan>> MapTokens(std::string_view text,
                                               std::size_t cursor,
                                               const std::vector<Token> &tokens,
                                               std::size_t first, std::size_t last,
                                               std::size_t *end_cursor) {
  std::vector<CharSpan> spans;
  for (std::size_t k = first; k <= last; ++k) {
    while (cursor < text.size() && IsSpaceChar(text[cursor])) ++cursor;
    const std::size_t begin = cursor;
    for (char c : tokens[k].surface) {
      if (IsSpaceChar(c)) continue;
      while (cursor < text.size() && IsSpaceChar(text[cursor])) ++cursor;
      if (cursor >= text.size() ||
          ToLower(std::string_view(&text[cursor], 1)) != ToLower(std::string_view(&c, 1))) {
        return std::nullopt;
      }
      ++cursor;
    }
    if (cursor == begin) return std::nullopt;
    spans.push_back({begin, cursor});
  }
  *end_cursor = cursor;
  return spans;
}

bool OnlyClosingPunctuation(std::string_view rest) {
  return std::all_of(rest.begin(), rest.end(), [](char c) {
    return IsSpaceChar(c) || c == '.' || c == '!' || c == '?' || c == ',';
  });
}

std::vector<std::optional<Role>> TokenRoles(const AnnotatedSentence &s) {
  std::vector<std::optional<Role>> roles(s.tokens.size());
  for (const RoleSpan &r : s.roles) {
    for (std::size_t k = r.first_token; k <= r.last_token && k < roles.size(); ++k) {
      if (!roles[k] || RolePreferenceRank(r.role) < RolePreferenceRank(roles[k])) {
        roles[k] = r.role;
      }
    }
  }
  return roles;
}

ResolvedAnswer FromSentence(const AnnotatedSentence &s, std::size_t first,
                            std::size_t last, const std::vector<CharSpan> &spans,
                            std::string_view answer_text) {
  ResolvedAnswer out;
  out.from_article = true;
  auto roles = TokenRoles(s);
  for (std::size_t k = first; k <= last; ++k) {
    Token t = s.tokens[k];
    t.span = spans[k - first];
    t.surface = std::string(answer_text.substr(t.span.begin, t.span.size()));
    out.tokens.push_back(std::move(t));
    out.roles.push_back(roles[k]);
  }
  return out;
}

}  // namespace

ResolvedAnswer ResolveAnswer(const QAPair &qap, const AnnotatedArticle &article,
                             const KnowledgeBase *gazetteer) {
  const std::string &answer = qap.answer_text;
  if (qap.location) {
    const AnswerLocation &loc = *qap.location;
    if (loc.sentence >= article.sentences.size()) {
      throw ValidationError("answer_sentence " + std::to_string(loc.sentence) +
                            " is outside article '" + article.article_id + "'");
    }
    const AnnotatedSentence &s = article.sentences[loc.sentence];
    if (loc.first_token > loc.last_token || loc.last_token >= s.tokens.size()) {
      throw ValidationError("answer token range is outside sentence " +
                            std::to_string(loc.sentence));
    }
    std::string joined;
    for (std::size_t k = loc.first_token; k <= loc.last_token; ++k) {
      joined += s.tokens[k].surface;
    }
    if (ToLower(StripWhitespace(joined)) != ToLower(StripWhitespace(answer))) {
      throw ValidationError("answer location does not spell '" + answer + "'");
    }
    std::size_t end = 0;
    auto spans = MapTokens(answer, 0, s.tokens, loc.first_token, loc.last_token, &end);
    if (!spans) throw ValidationError("answer location does not spell '" + answer + "'");
    return FromSentence(s, loc.first_token, loc.last_token, *spans, answer);
  }

  for (const AnnotatedSentence &s : article.sentences) {
    for (std::size_t first = 0; first < s.tokens.size(); ++first) {
      for (std::size_t last = first; last < s.tokens.size(); ++last) {
        std::size_t end = 0;
        auto spans = MapTokens(answer, 0, s.tokens, first, last, &end);
        if (!spans) break;
        std::string_view rest = std::string_view(answer).substr(end);
        if (OnlyClosingPunctuation(rest)) {
          return FromSentence(s, first, last, *spans, answer);
        }
      }
    }
  }

  ResolvedAnswer out;
  AnnotatedSentence tagged = TagSentence(answer, gazetteer);
  out.tokens = std::move(tagged.tokens);
  out.roles.assign(out.tokens.size(), std::nullopt);
  return out;
}

std::vector<TargetWord> ClassifyAnswer(const ResolvedAnswer &answer,
                                       std::string_view answer_text) {
  const auto &tokens = answer.tokens;
  std::vector<TargetWord> targets;

  auto emit = [&](std::size_t first, std::size_t end, TargetType type) {
    TargetWord t;
    t.first_token = first;
    t.end_token = end;
    t.span = {tokens[first].span.begin, tokens[end - 1].span.end};
    t.surface = std::string(answer_text.substr(t.span.begin, t.span.size()));
    for (std::size_t k = first; k < end; ++k) {
      if (k > first) t.lemma += ' ';
      t.lemma += tokens[k].lemma.empty() ? ToLower(tokens[k].surface) : tokens[k].lemma;
      if (answer.roles[k] &&
          RolePreferenceRank(answer.roles[k]) < RolePreferenceRank(t.role)) {
        t.role = answer.roles[k];
      }
    }
    t.type = type;
    targets.push_back(std::move(t));
  };

  for (std::size_t i = 0; i < tokens.size();) {
    const Token &tok = tokens[i];

    if (tok.entity != EntityTag::kNone) {
      std::size_t j = i + 1;
      while (j < tokens.size() && tokens[j].entity == tok.entity) ++j;
      TargetType type = tok.entity == EntityTag::kPerson     ? TargetType::kT2Person
                        : tok.entity == EntityTag::kLocation ? TargetType::kT2Location
                                                             : TargetType::kT2Organization;
      emit(i, j, type);
      i = j;
      continue;
    }

    const bool numeric_pos =
        tok.pos == Pos::kNumber || tok.pos == Pos::kNoun || tok.pos == Pos::kAdjective;
    if (numeric_pos && !IsPronoun(tok.surface)) {
      if (i + 2 < tokens.size() && ToLower(tokens[i + 1].surface) == "to") {
        const CharSpan span{tok.span.begin, tokens[i + 2].span.end};
        auto range = RecognizeNumeric(answer_text.substr(span.begin, span.size()));
        if (range && range->kind == NumericKind::kRange) {
          emit(i, i + 3,
               IsTemporalKind(range->element_kind) ? TargetType::kT1Temporal
                                                   : TargetType::kT1Numeric);
          i += 3;
          continue;
        }
      }
      if (auto value = RecognizeNumeric(tok.surface)) {
        emit(i, i + 1,
             IsTemporalKind(value->element_kind) ? TargetType::kT1Temporal
                                                 : TargetType::kT1Numeric);
        ++i;
        continue;
      }
    }

    if (IsPronoun(tok.surface)) {
      ++i;
      continue;
    }

    if (tok.pos == Pos::kPhrasalNoun || tok.pos == Pos::kPhrasalVerb) {
      std::size_t j = i + 1;
      while (j < tokens.size() && tokens[j].pos == tok.pos &&
             tokens[j].entity == EntityTag::kNone) {
        ++j;
      }
      emit(i, j, tok.pos == Pos::kPhrasalNoun ? TargetType::kT3Noun : TargetType::kT3Verb);
      i = j;
      continue;
    }

    switch (tok.pos) {
      case Pos::kNoun:
        emit(i, i + 1, TargetType::kT3Noun);
        break;
      case Pos::kAdjective:
        emit(i, i + 1, TargetType::kT3Adjective);
        break;
      case Pos::kVerb:
        emit(i, i + 1, TargetType::kT3Verb);
        break;
      case Pos::kAdverb:
        emit(i, i + 1, TargetType::kT3Adverb);
        break;
      default:
        break;
    }
    ++i;
  }

  if (targets.empty()) {
    throw NoTargetError("answer '" + std::string(answer_text) +
                        "' has no substitutable word");
  }
  SortTargets(targets);
  return targets;
}

void SortTargets(std::vector<TargetWord> &targets) {
  std::sort(targets.begin(), targets.end(),
            [](const TargetWord &a, const TargetWord &b) {
              return std::make_tuple(RolePreferenceRank(a.role),
                                     TargetPreferenceRank(a.type), a.first_token) <
                     std::make_tuple(RolePreferenceRank(b.role),
                                     TargetPreferenceRank(b.type), b.first_token);
            });
}

std::vector<TargetWord> ClassifyTargets(const QAPair &qap,
                                        const AnnotatedArticle &article,
                                        const KnowledgeBase *gazetteer) {
  return ClassifyAnswer(ResolveAnswer(qap, article, gazetteer), qap.answer_text);
}

}  // namespace distractor
