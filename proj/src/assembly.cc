#include "distractor/assembly.h"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "distractor/entity.h"
#include "distractor/error.h"
#include "distractor/numeric.h"
#include "distractor/text.h"

namespace distractor {
namespace {

bool IsVowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
    case 'A': case 'E': case 'I': case 'O': case 'U':
      return true;
    default:
      return false;
  }
}

struct WordSpan {
  std::size_t begin;
  std::size_t end;
};

std::optional<WordSpan> WordAt(std::string_view s, std::size_t pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  if (pos >= s.size()) return std::nullopt;
  std::size_t end = pos;
  while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
  return WordSpan{pos, end};
}

std::optional<WordSpan> WordBefore(std::string_view s, std::size_t pos) {
  while (pos > 0 && (s[pos - 1] == ' ' || s[pos - 1] == '\t')) --pos;
  if (pos == 0) return std::nullopt;
  std::size_t begin = pos;
  while (begin > 0 && IsAlphaAscii(s[begin - 1])) --begin;
  if (begin == pos) return std::nullopt;
  return WordSpan{begin, pos};
}

bool IsIndefiniteArticle(std::string_view w) {
  return EqualsIgnoreCase(w, "a") || EqualsIgnoreCase(w, "an");
}

// Rewrites the article at `article` to agree with the word starting at
// `next_begin`.
void AgreeArticle(std::string &text, WordSpan article, std::size_t next_begin) {
  if (next_begin >= text.size() || !IsAlphaAscii(text[next_begin])) return;
  const std::string current = text.substr(article.begin, article.end - article.begin);
  std::string wanted = IsVowel(text[next_begin]) ? "an" : "a";
  const LetterCase c = ClassifyCase(current);
  if (c == LetterCase::kUpper && current.size() > 1) {
    wanted = ToUpper(wanted);
  } else if (IsUpperAscii(current[0])) {
    wanted = ApplyCase(wanted, LetterCase::kCapitalized);
  }
  if (wanted != current) {
    text.replace(article.begin, article.end - article.begin, wanted);
  }
}

std::string MatchCase(std::string_view original, std::string_view replacement) {
  std::string out(replacement);
  if (original.empty() || out.empty()) return out;
  const LetterCase oc = ClassifyCase(original);
  const LetterCase rc = ClassifyCase(out);
  std::size_t letters = std::count_if(original.begin(), original.end(), IsAlphaAscii);
  if (oc == LetterCase::kUpper && letters > 1 && rc == LetterCase::kLower) {
    return ToUpper(out);
  }
  auto first_letter = [](std::string_view s) -> std::optional<char> {
    for (char ch : s) {
      if (IsAlphaAscii(ch)) return ch;
    }
    return std::nullopt;
  };
  auto of = first_letter(original);
  auto rf = first_letter(out);
  if (of && rf && IsUpperAscii(*of) && IsLowerAscii(*rf)) {
    return ApplyCase(out, LetterCase::kCapitalized);
  }
  return out;
}

}  // namespace

std::string Substitute(std::string_view answer, CharSpan span,
                       std::string_view replacement) {
  const std::string_view original = answer.substr(span.begin, span.size());
  if (original == replacement) return std::string(answer);

  const std::string repl = MatchCase(original, replacement);
  std::string text = std::string(answer.substr(0, span.begin)) + repl +
                     std::string(answer.substr(span.end));
  const std::size_t repl_begin = span.begin;
  const std::size_t repl_end = span.begin + repl.size();

  auto first = WordAt(text, repl_begin);
  if (first && first->begin < repl_end) {
    std::string_view w(text.data() + first->begin, first->end - first->begin);
    auto second = WordAt(text, first->end);
    if (IsIndefiniteArticle(w) && second && second->begin < repl_end) {
      AgreeArticle(text, *first, second->begin);
      return text;
    }
  }
  if (auto before = WordBefore(text, repl_begin)) {
    std::string_view w(text.data() + before->begin, before->end - before->begin);
    const bool standalone =
        before->begin == 0 || !IsAlphaAscii(text[before->begin - 1]);
    if (standalone && IsIndefiniteArticle(w) && first) {
      AgreeArticle(text, *before, first->begin);
    }
  }
  return text;
}

MCQ GenerateMcq(const QAPair &qap, const AnnotatedArticle &article,
                const Resources &resources, const Config &config, Rng &rng) {
  static const KnowledgeBase kEmptyKb;
  const KnowledgeBase &kb = resources.kb ? *resources.kb : kEmptyKb;
  const std::vector<TargetWord> targets =
      ClassifyTargets(qap, article, resources.kb);

  MCQ mcq;
  mcq.article_id = qap.article_id;
  mcq.question = qap.question;
  mcq.answer = qap.answer_text;
  std::set<std::string> seen = {NormalizeKey(qap.answer_text)};

  auto done = [&] { return mcq.distractors.size() >= kDistractorsPerQuestion; };
  auto need = [&] { return kDistractorsPerQuestion - mcq.distractors.size(); };
  auto accept = [&](const TargetWord &t, const std::string &replacement,
                    Provenance p) {
    std::string text = Substitute(qap.answer_text, t.span, replacement);
    if (!seen.insert(NormalizeKey(text)).second) return;
    p.target = t.surface;
    p.target_type = t.type;
    p.replacement = replacement;
    mcq.distractors.push_back(std::move(text));
    mcq.provenance.push_back(std::move(p));
  };
  auto semantic = [&](const TargetWord &t, double lo, double hi, int round) {
    for (const Candidate &c :
         RankedSemanticCandidates(t, resources.lexical(), config, lo, hi)) {
      if (done()) break;
      accept(t, c.text, Provenance{{}, {}, {}, "semantic", c, round});
    }
  };

  for (const TargetWord &t : targets) {
    if (done()) break;
    if (IsType1(t.type)) {
      auto value = RecognizeNumeric(t.surface);
      if (!value) continue;
      for (const auto &draw : DrawNumericDistractors(*value, t.surface, need(),
                                                     config, rng, true)) {
        accept(t, draw.text, Provenance{{}, {}, {}, draw.strategy, {}, 0});
      }
    } else if (IsType2(t.type)) {
      for (const auto &draw : DrawEntityDistractors(t, article, kb, need(), rng)) {
        accept(t, draw.text,
               Provenance{{}, {}, {}, draw.from_article ? "article" : "knowledge_base",
                          {}, 0});
      }
    } else {
      semantic(t, config.sim_lo, config.sim_hi, 0);
    }
  }

  for (int round = 1; round <= config.relax_max_rounds && !done(); ++round) {
    const double lo = std::max(0.0, config.sim_lo - round * config.relax_step);
    const double hi = std::min(1.0, config.sim_hi + round * config.relax_step);
    for (const TargetWord &t : targets) {
      if (done()) break;
      if (IsType3(t.type)) semantic(t, lo, hi, round);
    }
  }
  return mcq;
}

std::vector<McqOutcome> GenerateAll(
    const std::vector<QAPair> &qaps,
    const std::map<std::string, AnnotatedArticle> &articles,
    const Resources &resources, const Config &config, std::uint64_t seed,
    int threads) {
  std::vector<McqOutcome> outcomes(qaps.size());
  auto run = [&](std::size_t i) {
    try {
      auto it = articles.find(qaps[i].article_id);
      if (it == articles.end()) {
        throw ValidationError("unknown article_id '" + qaps[i].article_id + "'");
      }
      Rng rng = DeriveRng(seed, i);
      outcomes[i].mcq = GenerateMcq(qaps[i], it->second, resources, config, rng);
    } catch (const std::exception &e) {
      outcomes[i].error = e.what();
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), qaps.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < qaps.size(); ++i) run(i);
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < qaps.size(); i = next++) run(i);
    });
  }
  pool.clear();
  return outcomes;
}

nlohmann::ordered_json McqToJson(const MCQ &mcq) {
  nlohmann::ordered_json j;
  j["article_id"] = mcq.article_id;
  j["question"] = mcq.question;
  j["answer"] = mcq.answer;
  j["distractors"] = mcq.distractors;
  j["provenance"] = nlohmann::ordered_json::array();
  for (const auto &p : mcq.provenance) {
    nlohmann::ordered_json pj;
    pj["target"] = p.target;
    pj["target_type"] = TargetTypeName(p.target_type);
    pj["replacement"] = p.replacement;
    pj["strategy"] = p.strategy;
    pj["relax_round"] = p.relax_round;
    if (p.scores) {
      const Candidate &c = *p.scores;
      pj["scores"] = {{"s_v", c.s_v}, {"s_n", c.s_n},         {"s_d", c.s_d},
                      {"antonym", c.antonym}, {"r_prime", c.r_prime}, {"r", c.r}};
    }
    j["provenance"].push_back(std::move(pj));
  }
  return j;
}

MCQ McqFromJson(const nlohmann::json &obj) {
  MCQ mcq;
  mcq.article_id = obj.value("article_id", std::string());
  mcq.question = obj.at("question").get<std::string>();
  mcq.answer = obj.value("answer", std::string());
  mcq.distractors = obj.at("distractors").get<std::vector<std::string>>();
  if (auto it = obj.find("provenance"); it != obj.end() && it->is_array()) {
    for (const auto &pj : *it) {
      Provenance p;
      p.target = pj.value("target", std::string());
      p.replacement = pj.value("replacement", std::string());
      p.strategy = pj.value("strategy", std::string());
      p.relax_round = pj.value("relax_round", 0);
      const std::string type = pj.value("target_type", std::string("T3Noun"));
      for (int t = 0; t <= static_cast<int>(TargetType::kT3Adverb); ++t) {
        if (type == TargetTypeName(static_cast<TargetType>(t))) {
          p.target_type = static_cast<TargetType>(t);
        }
      }
      if (auto s = pj.find("scores"); s != pj.end()) {
        Candidate c;
        c.text = p.replacement;
        c.s_v = s->at("s_v").get<double>();
        c.s_n = s->at("s_n").get<double>();
        c.s_d = s->at("s_d").get<double>();
        c.antonym = s->at("antonym").get<bool>();
        c.r_prime = s->at("r_prime").get<double>();
        c.r = s->at("r").get<double>();
        p.scores = c;
      }
      mcq.provenance.push_back(std::move(p));
    }
  }
  return mcq;
}

std::vector<MCQ> ParseMcqs(std::istream &in) {
  std::vector<MCQ> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      out.push_back(McqFromJson(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(std::string("MCQ: ") + e.what(), line_no);
    }
  }
  return out;
}

}  // namespace distractor
