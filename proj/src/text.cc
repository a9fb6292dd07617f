#include "distractor/text.h"

#include <cctype>

namespace distractor {

bool IsUpperAscii(char c) { return c >= 'A' && c <= 'Z'; }
bool IsLowerAscii(char c) { return c >= 'a' && c <= 'z'; }
bool IsAlphaAscii(char c) { return IsUpperAscii(c) || IsLowerAscii(c); }
bool IsDigitAscii(char c) { return c >= '0' && c <= '9'; }

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (IsUpperAscii(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string ToUpper(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (IsLowerAscii(c)) c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char x = IsUpperAscii(a[i]) ? static_cast<char>(a[i] - 'A' + 'a') : a[i];
    char y = IsUpperAscii(b[i]) ? static_cast<char>(b[i] - 'A' + 'a') : b[i];
    if (x != y) return false;
  }
  return true;
}

static bool IsSpace(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string NormalizeKey(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(IsUpperAscii(c) ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

std::string StripWhitespace(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!IsSpace(c)) out.push_back(c);
  }
  return out;
}

std::string Trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  std::string current;
  for (char c : s) {
    if (IsSpace(c)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::u32string DecodeUtf8(std::string_view s) {
  std::u32string out;
  std::size_t i = 0;
  while (i < s.size()) {
    auto b0 = static_cast<unsigned char>(s[i]);
    int extra;
    char32_t cp;
    if (b0 < 0x80) {
      extra = 0;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      extra = 1;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3;
      cp = b0 & 0x07;
    } else {
      out.push_back(U'�');
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= s.size()) {
        ok = false;
        break;
      }
      auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      out.push_back(U'�');
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

LetterCase ClassifyCase(std::string_view s) {
  std::size_t letters = 0, upper = 0;
  bool first_upper = false;
  for (char c : s) {
    if (!IsAlphaAscii(c)) continue;
    if (letters == 0) first_upper = IsUpperAscii(c);
    ++letters;
    if (IsUpperAscii(c)) ++upper;
  }
  if (letters == 0 || upper == 0) return LetterCase::kLower;
  if (upper == letters) {
    return letters == 1 ? LetterCase::kCapitalized : LetterCase::kUpper;
  }
  if (first_upper && upper == 1) return LetterCase::kCapitalized;
  return LetterCase::kMixed;
}

std::string ApplyCase(std::string_view lower_word, LetterCase letter_case) {
  switch (letter_case) {
    case LetterCase::kUpper:
      return ToUpper(lower_word);
    case LetterCase::kCapitalized: {
      std::string out(lower_word);
      for (char &c : out) {
        if (IsAlphaAscii(c)) {
          if (IsLowerAscii(c)) c = static_cast<char>(c - 'a' + 'A');
          break;
        }
      }
      return out;
    }
    default:
      return std::string(lower_word);
  }
}

}  // namespace distractor
