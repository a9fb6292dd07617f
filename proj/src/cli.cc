#include "distractor/cli.h"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "distractor/annotation.h"
#include "distractor/assembly.h"
#include "distractor/config.h"
#include "distractor/error.h"
#include "distractor/eval.h"
#include "distractor/kb.h"
#include "distractor/lexres.h"

namespace distractor {
namespace {

std::ifstream OpenOrThrow(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

std::string ReadAll(const std::string &path) {
  std::ifstream in = OpenOrThrow(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t ParseSeed(const std::string &text) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, 10);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text[0] == '-') {
    throw ConfigError("DISTRACTOR_SEED", "not an unsigned integer: '" + text + "'");
  }
  return v;
}

}  // namespace

std::uint64_t ResolveSeed(const std::optional<std::uint64_t> &flag,
                          const std::optional<std::uint64_t> &config_seed) {
  if (flag) return *flag;
  if (config_seed) return *config_seed;
  if (const char *env = std::getenv("DISTRACTOR_SEED"); env && *env) {
    return ParseSeed(env);
  }
  return 0;
}

int RunGenerate(const GenerateOptions &opts, std::ostream &out, std::ostream &err) {
  Config config;
  std::map<std::string, AnnotatedArticle> articles;
  std::vector<QAPair> qaps;
  std::optional<VectorTable> vectors;
  std::optional<LexicalGraph> graph;
  std::optional<KnowledgeBase> kb;
  std::uint64_t seed = 0;
  try {
    config = LoadConfig(opts.config_path);
    if (opts.threads) {
      config.threads = *opts.threads;
      ValidateConfig(config);
    }
    seed = ResolveSeed(opts.seed, config.seed);
    for (const auto &path : opts.article_paths) {
      for (auto &a : ParseArticlesFile(path)) {
        std::string id = a.article_id;
        if (!articles.emplace(id, std::move(a)).second) {
          throw ValidationError("duplicate article_id '" + id + "' in " + path);
        }
      }
    }
    qaps = ParseQapsFile(opts.qap_path);
    for (const auto &q : qaps) {
      if (!articles.count(q.article_id)) {
        throw ValidationError("unknown article_id '" + q.article_id +
                              "' in question '" + q.question + "'");
      }
    }
    if (!opts.vectors_path.empty()) vectors = VectorTable::LoadFile(opts.vectors_path);
    if (!opts.lexgraph_path.empty()) graph = LexicalGraph::LoadFile(opts.lexgraph_path);
    if (!opts.kb_path.empty()) kb = KnowledgeBase::LoadFile(opts.kb_path);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  Resources res;
  res.vectors = vectors ? &*vectors : nullptr;
  res.graph = graph ? &*graph : nullptr;
  res.kb = kb ? &*kb : nullptr;

  const auto outcomes = GenerateAll(qaps, articles, res, config, seed, config.threads);
  int status = kExitOk;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const McqOutcome &o = outcomes[i];
    if (o.mcq) {
      out << McqToJson(*o.mcq).dump() << "\n";
      if (o.mcq->shortfall()) {
        err << "shortfall: question '" << qaps[i].question << "' got "
            << o.mcq->distractors.size() << " distractor(s)\n";
        status = kExitShortfall;
      }
      continue;
    }
    err << "error: question '" << qaps[i].question << "': " << o.error << "\n";
    MCQ empty;
    empty.article_id = qaps[i].article_id;
    empty.question = qaps[i].question;
    empty.answer = qaps[i].answer_text;
    out << McqToJson(empty).dump() << "\n";
    status = kExitShortfall;
  }
  return status;
}

int RunEval(const EvalOptions &opts, std::ostream &out, std::ostream &err) {
  try {
    std::ifstream mcq_in = OpenOrThrow(opts.mcq_path);
    std::ifstream label_in = OpenOrThrow(opts.labels_path);
    const auto mcqs = ParseMcqs(mcq_in);
    const auto labels = ParseLabels(label_in);
    const EvalReport report = ComputeReport(mcqs, labels);
    out << ReportToJson(report).dump(2) << "\n";
    err << FormatReportTable(report);
    return kExitOk;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int RunTag(const std::string &text_path, const std::string &article_id,
           const std::string &kb_path, std::ostream &out, std::ostream &err) {
  try {
    std::optional<KnowledgeBase> kb;
    if (!kb_path.empty()) kb = KnowledgeBase::LoadFile(kb_path);
    const AnnotatedArticle article =
        FallbackTag(ReadAll(text_path), kb ? &*kb : nullptr, article_id);
    WriteArticle(out, article);
    return kExitOk;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int RunCheck(const CheckOptions &opts, std::ostream &out, std::ostream &err) {
  int status = kExitOk;
  auto check = [&](const std::string &what, const std::string &path, auto load) {
    if (path.empty()) return;
    try {
      out << what << " " << path << ": " << load() << "\n";
    } catch (const std::exception &e) {
      err << "error: " << what << " " << path << ": " << e.what() << "\n";
      status = kExitInputError;
    }
  };
  for (const auto &p : opts.article_paths) {
    check("articles", p, [&] {
      auto a = ParseArticlesFile(p);
      std::size_t sentences = 0;
      for (const auto &x : a) sentences += x.sentences.size();
      return std::to_string(a.size()) + " article(s), " + std::to_string(sentences) +
             " sentence(s)";
    });
  }
  check("qaps", opts.qap_path,
        [&] { return std::to_string(ParseQapsFile(opts.qap_path).size()) + " QAP(s)"; });
  check("vectors", opts.vectors_path, [&] {
    auto t = VectorTable::LoadFile(opts.vectors_path);
    return std::to_string(t.size()) + " vector(s) of dimension " +
           std::to_string(t.dimension());
  });
  check("lexgraph", opts.lexgraph_path, [&] {
    LexicalGraph::LoadFile(opts.lexgraph_path);
    return std::string("ok");
  });
  check("kb", opts.kb_path, [&] {
    return std::to_string(KnowledgeBase::LoadFile(opts.kb_path).groups().size()) +
           " group(s)";
  });
  check("config", opts.config_path, [&] {
    LoadConfig(opts.config_path);
    return std::string("ok");
  });
  check("mcqs", opts.mcq_path, [&] {
    std::ifstream in = OpenOrThrow(opts.mcq_path);
    return std::to_string(ParseMcqs(in).size()) + " MCQ(s)";
  });
  check("labels", opts.labels_path, [&] {
    std::ifstream in = OpenOrThrow(opts.labels_path);
    return std::to_string(ParseLabels(in).size()) + " label record(s)";
  });
  return status;
}

}  // namespace distractor
