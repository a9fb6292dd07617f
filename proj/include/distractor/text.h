#ifndef DISTRACTOR_TEXT_H_
#define DISTRACTOR_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace distractor {

// ASCII case folding. Non-ASCII bytes pass through unchanged.
std::string ToLower(std::string_view s);
std::string ToUpper(std::string_view s);
bool EqualsIgnoreCase(std::string_view a, std::string_view b);

// Lowercases and collapses runs of whitespace to a single space, trimming
// both ends. Used as the identity key for distractor deduplication.
std::string NormalizeKey(std::string_view s);

std::string StripWhitespace(std::string_view s);
std::string Trim(std::string_view s);
std::vector<std::string> SplitWhitespace(std::string_view s);

bool IsUpperAscii(char c);
bool IsLowerAscii(char c);
bool IsAlphaAscii(char c);
bool IsDigitAscii(char c);

// Decodes UTF-8 into code points; invalid bytes decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view s);

enum class LetterCase { kLower, kCapitalized, kUpper, kMixed };

// Case pattern of the letters in `s`. Strings without letters are kLower.
LetterCase ClassifyCase(std::string_view s);

// Applies a case pattern to a lowercase word.
std::string ApplyCase(std::string_view lower_word, LetterCase letter_case);

}  // namespace distractor

#endif  // DISTRACTOR_TEXT_H_
