#ifndef DISTRACTOR_ANNOTATION_H_
#define DISTRACTOR_ANNOTATION_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "distractor/kb.h"

namespace distractor {

enum class Pos {
  kNoun,
  kPhrasalNoun,
  kVerb,
  kPhrasalVerb,
  kAdjective,
  kAdverb,
  kNumber,
  kDeterminer,
  kOther,
};

const char *PosName(Pos pos);
std::optional<Pos> ParsePos(std::string_view name);

// Half-open byte offsets.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const CharSpan &) const = default;
};

struct Token {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::kOther;
  EntityTag entity = EntityTag::kNone;
  CharSpan span;  // into the sentence text

  bool operator==(const Token &) const = default;
};

// Listed in preference order: earlier roles are substituted first.
enum class Role {
  kSubject,
  kObject,
  kAdjectiveOfSubject,
  kAdjectiveOfObject,
  kPredicate,
  kAdverb,
};

const char *RoleName(Role role);
std::optional<Role> ParseRole(std::string_view name);

struct RoleSpan {
  Role role = Role::kSubject;
  std::size_t first_token = 0;  // inclusive
  std::size_t last_token = 0;   // inclusive

  bool operator==(const RoleSpan &) const = default;
};

struct AnnotatedSentence {
  std::string text;
  std::vector<Token> tokens;
  std::vector<RoleSpan> roles;

  bool operator==(const AnnotatedSentence &) const = default;
};

struct AnnotatedArticle {
  std::string article_id;
  std::vector<AnnotatedSentence> sentences;

  bool operator==(const AnnotatedArticle &) const = default;
};

// Throws ValidationError when tokens are empty, out of bounds, overlapping,
// unordered, or disagree with the sentence text, or when a role span is out
// of range.
void ValidateSentence(const AnnotatedSentence &sentence);
void ValidateArticle(const AnnotatedArticle &article);

// Annotated-article JSONL: a header line {"article_id": ...} followed by one
// line per sentence. A stream may hold several articles back to back.
std::vector<AnnotatedArticle> ParseArticles(std::istream &in);
std::vector<AnnotatedArticle> ParseArticlesFile(const std::string &path);
// Exactly one article.
AnnotatedArticle ParseArticle(std::istream &in);
void WriteArticle(std::ostream &out, const AnnotatedArticle &article);

struct AnswerLocation {
  std::size_t sentence = 0;
  std::size_t first_token = 0;  // inclusive
  std::size_t last_token = 0;   // inclusive

  bool operator==(const AnswerLocation &) const = default;
};

struct QAPair {
  std::string article_id;
  std::string question;
  std::string answer_text;
  std::optional<AnswerLocation> location;

  bool operator==(const QAPair &) const = default;
};

std::vector<QAPair> ParseQaps(std::istream &in);
std::vector<QAPair> ParseQapsFile(const std::string &path);

// Rule-based stand-in for external taggers. Splits sentences on terminal
// punctuation, tags numbers and dates with the numeric recognizers, tags
// gazetteer hits as entities, and assigns POS from a built-in lexicon with
// suffix heuristics. Emits no role spans. Throws ValidationError on empty
// input.
AnnotatedArticle FallbackTag(std::string_view raw,
                             const KnowledgeBase *gazetteer = nullptr,
                             std::string article_id = "untitled");

// Tags `text` as a single sentence; token spans index into `text` unchanged.
AnnotatedSentence TagSentence(std::string_view text,
                              const KnowledgeBase *gazetteer = nullptr);

enum class TargetType {
  kT1Temporal,
  kT1Numeric,
  kT2Person,
  kT2Location,
  kT2Organization,
  kT3Noun,
  kT3Adjective,
  kT3Verb,
  kT3Adverb,
};

const char *TargetTypeName(TargetType type);
// 0 (substituted first) through 8.
int TargetPreferenceRank(TargetType type);
// 0 through 5 for roles, 6 for targets without one.
int RolePreferenceRank(std::optional<Role> role);

bool IsType1(TargetType type);
bool IsType2(TargetType type);
bool IsType3(TargetType type);
EntityTag EntityCategoryOf(TargetType type);

struct TargetWord {
  std::size_t first_token = 0;  // half-open range into the answer's tokens
  std::size_t end_token = 0;
  CharSpan span;  // into the answer text
  std::string surface;
  std::string lemma;
  TargetType type = TargetType::kT3Noun;
  std::optional<Role> role;

  bool operator==(const TargetWord &) const = default;
};

// The answer's tokens with spans rebased onto the answer text.
struct ResolvedAnswer {
  std::vector<Token> tokens;
  std::vector<std::optional<Role>> roles;
  bool from_article = false;
};

// Uses the explicit answer location when present, then a search for the
// answer among the article's token runs, then the fallback tagger.
ResolvedAnswer ResolveAnswer(const QAPair &qap, const AnnotatedArticle &article,
                             const KnowledgeBase *gazetteer = nullptr);

// Substitutable spans of the answer in substitution order: role preference,
// then type preference, then position. Throws NoTargetError when nothing is
// substitutable.
std::vector<TargetWord> ClassifyTargets(const QAPair &qap,
                                        const AnnotatedArticle &article,
                                        const KnowledgeBase *gazetteer = nullptr);
std::vector<TargetWord> ClassifyAnswer(const ResolvedAnswer &answer,
                                       std::string_view answer_text);

// Sorts into substitution order.
void SortTargets(std::vector<TargetWord> &targets);

bool IsPronoun(std::string_view word);

}  // namespace distractor

#endif  // DISTRACTOR_ANNOTATION_H_
