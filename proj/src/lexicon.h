#ifndef DISTRACTOR_SRC_LEXICON_H_
#define DISTRACTOR_SRC_LEXICON_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distractor/annotation.h"

namespace distractor::internal {

struct LexiconEntry {
  Pos pos;
  std::string lemma;
};

// Single lowercase word.
std::optional<LexiconEntry> LookupWord(std::string_view lower);

// Multiword phrase (lowercase words joined by single spaces).
std::optional<Pos> LookupPhrase(std::string_view lower_phrase);
std::size_t MaxPhraseWords();

// POS guess for a word absent from the lexicon.
Pos GuessPos(std::string_view lower);

// Crude lemma: plural stripping for nouns, identity otherwise.
std::string GuessLemma(std::string_view lower, Pos pos);

bool IsAbbreviation(std::string_view lower_without_dot);

}  // namespace distractor::internal

#endif  // DISTRACTOR_SRC_LEXICON_H_
