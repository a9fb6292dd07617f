#include "lexicon.h"

#include <map>
#include <set>

namespace distractor::internal {
namespace {

struct Seed {
  Pos pos;
  const char *words;
};

// Closed-class words plus a handful of frequent open-class ones. Pronouns,
// prepositions, conjunctions and auxiliaries are kOther so they are never
// chosen as targets.
const Seed kSeeds[] = {
    {Pos::kDeterminer,
     "a an the this that these those some any each every no another his her "
     "its their our my your whose which what both either neither all such"},
    {Pos::kOther,
     "i me mine you yours he him himself she hers herself it itself we us "
     "ourselves they them themselves someone somebody something anyone "
     "anybody anything everyone everybody everything nobody nothing who whom "
     "whoever whatever in on at by for with of to from into onto upon over "
     "under about above below between among through during before after "
     "since until without within against across along around behind beyond "
     "near toward towards via per than as and or but nor so yet if because "
     "while when whenever where wherever why how whether although though "
     "unless is are was were be been being am has have had having do does "
     "did can could will would shall should may might must"},
    {Pos::kAdverb,
     "not never very also just only even still already often always "
     "sometimes usually really quite rather too almost least most more less "
     "well soon now then here there again ever perhaps maybe"},
    {Pos::kVerb,
     "make makes made hear hears heard say says said go goes went know knows "
     "knew see sees saw think thinks thought take takes took come comes came "
     "give gives gave find finds found tell tells told become becomes became "
     "leave leaves left feel feels felt bring brings brought begin begins "
     "began keep keeps kept hold holds held write writes wrote stand stands "
     "stood meet meets met run runs ran pay pays paid sit sits sat speak "
     "speaks spoke lead leads led read reads grow grows grew lose loses lost "
     "fall falls fell send sends sent build builds built understand "
     "understands understood spend spends spent acknowledge acknowledges "
     "assess assesses duplicate duplicates harvest harvests hope hopes search "
     "searches indicate indicates like likes apply applies want wants wanted "
     "get gets got move moves moved live lives lived"},
    {Pos::kAdjective,
     "good new old great high small large big long little own other "
     "different important public bad same able economic political social "
     "soft experienced inexperienced probable early late young"},
};

const std::pair<const char *, const char *> kIrregularLemmas[] = {
    {"made", "make"},   {"heard", "hear"},   {"said", "say"},
    {"went", "go"},     {"knew", "know"},    {"saw", "see"},
    {"thought", "think"}, {"took", "take"},  {"came", "come"},
    {"gave", "give"},   {"found", "find"},   {"told", "tell"},
    {"became", "become"}, {"left", "leave"}, {"felt", "feel"},
    {"brought", "bring"}, {"began", "begin"}, {"kept", "keep"},
    {"held", "hold"},   {"wrote", "write"},  {"stood", "stand"},
    {"met", "meet"},    {"ran", "run"},      {"paid", "pay"},
    {"sat", "sit"},     {"spoke", "speak"},  {"led", "lead"},
    {"grew", "grow"},   {"lost", "lose"},    {"fell", "fall"},
    {"sent", "send"},   {"built", "build"},  {"understood", "understand"},
    {"spent", "spend"}, {"got", "get"},
};

const std::pair<const char *, Pos> kPhrases[] = {
    {"deoxyribonucleic acid", Pos::kPhrasalNoun},
    {"ribonucleic acid", Pos::kPhrasalNoun},
    {"ice cream", Pos::kPhrasalNoun},
    {"high school", Pos::kPhrasalNoun},
    {"look up", Pos::kPhrasalVerb},
    {"give up", Pos::kPhrasalVerb},
    {"find out", Pos::kPhrasalVerb},
    {"carry out", Pos::kPhrasalVerb},
    {"set up", Pos::kPhrasalVerb},
};

const char *kAbbreviations[] = {"mr", "mrs", "ms", "dr", "st", "vs", "etc",
                                "jr", "sr", "prof", "inc", "co", "mt"};

struct Tables {
  std::map<std::string, LexiconEntry, std::less<>> words;
  std::map<std::string, Pos, std::less<>> phrases;
  std::set<std::string, std::less<>> abbreviations;
  std::size_t max_phrase_words = 1;

  Tables() {
    std::map<std::string, std::string> lemmas;
    for (const auto &[form, lemma] : kIrregularLemmas) lemmas[form] = lemma;
    for (const Seed &seed : kSeeds) {
      std::string word;
      std::string_view all(seed.words);
      for (std::size_t i = 0; i <= all.size(); ++i) {
        if (i == all.size() || all[i] == ' ') {
          if (!word.empty() && !words.count(word)) {
            auto it = lemmas.find(word);
            words.emplace(word, LexiconEntry{seed.pos, it == lemmas.end()
                                                           ? word
                                                           : it->second});
          }
          word.clear();
        } else {
          word.push_back(all[i]);
        }
      }
    }
    for (const auto &[phrase, pos] : kPhrases) {
      phrases.emplace(phrase, pos);
      std::size_t n = 1;
      for (const char *c = phrase; *c; ++c) n += *c == ' ';
      max_phrase_words = std::max(max_phrase_words, n);
    }
    for (const char *a : kAbbreviations) abbreviations.emplace(a);
  }
};

const Tables &GetTables() {
  static const Tables tables;
  return tables;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::optional<LexiconEntry> LookupWord(std::string_view lower) {
  const auto &words = GetTables().words;
  auto it = words.find(lower);
  if (it == words.end()) return std::nullopt;
  return it->second;
}

std::optional<Pos> LookupPhrase(std::string_view lower_phrase) {
  const auto &phrases = GetTables().phrases;
  auto it = phrases.find(lower_phrase);
  if (it == phrases.end()) return std::nullopt;
  return it->second;
}

std::size_t MaxPhraseWords() { return GetTables().max_phrase_words; }

Pos GuessPos(std::string_view w) {
  if (w.size() <= 3) return Pos::kNoun;
  if (EndsWith(w, "ly")) return Pos::kAdverb;
  if (EndsWith(w, "ing") || EndsWith(w, "ed")) return Pos::kVerb;
  for (std::string_view suffix :
       {"ous", "ful", "ive", "able", "ible", "al", "ic", "less", "ish"}) {
    if (EndsWith(w, suffix)) return Pos::kAdjective;
  }
  return Pos::kNoun;
}

std::string GuessLemma(std::string_view w, Pos pos) {
  std::string lemma(w);
  if (pos != Pos::kNoun || w.size() <= 3) return lemma;
  if (EndsWith(w, "ies")) return lemma.substr(0, lemma.size() - 3) + "y";
  if (EndsWith(w, "ss") || EndsWith(w, "us") || EndsWith(w, "is")) return lemma;
  if (EndsWith(w, "s")) return lemma.substr(0, lemma.size() - 1);
  return lemma;
}

bool IsAbbreviation(std::string_view lower) {
  return GetTables().abbreviations.count(lower) > 0;
}

}  // namespace distractor::internal
