#include "distractor/cli.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace distractor;

namespace {

GenerateOptions FixtureOptions() {
  GenerateOptions o;
  o.article_paths = {DATA_DIR "/fixtures/articles.jsonl"};
  o.qap_path = DATA_DIR "/fixtures/qaps.jsonl";
  o.vectors_path = DATA_DIR "/fixtures/vectors.txt";
  o.lexgraph_path = DATA_DIR "/fixtures/lexgraph.json";
  o.kb_path = DATA_DIR "/fixtures/kb.json";
  return o;
}

std::string TempFile(const std::string &name, const std::string &content) {
  std::string path = std::string(BINARY_DIR) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("generate on the bundled corpus") {
  GenerateOptions o = FixtureOptions();
  o.seed = 11;
  std::ostringstream out, err;
  CHECK(RunGenerate(o, out, err) == kExitOk);
  std::istringstream lines(out.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["distractors"].size() == 3);
    ++count;
  }
  CHECK(count == 10);
  CHECK(err.str().empty());

  std::ostringstream again, err2;
  RunGenerate(o, again, err2);
  CHECK(again.str() == out.str());
  o.threads = 3;
  std::ostringstream threaded, err3;
  RunGenerate(o, threaded, err3);
  CHECK(threaded.str() == out.str());
}

TEST_CASE("unknown article id exits 1 naming the id") {
  GenerateOptions o = FixtureOptions();
  o.qap_path = TempFile("unknown_article.jsonl",
                        R"({"article_id":"no_such_article","question":"q?","answer_text":"x"})");
  std::ostringstream out, err;
  CHECK(RunGenerate(o, out, err) == kExitInputError);
  CHECK(out.str().empty());
  CHECK(err.str().find("no_such_article") != std::string::npos);
}

TEST_CASE("shortfall and no-target exit 2 with partial output") {
  GenerateOptions o = FixtureOptions();
  o.qap_path = TempFile(
      "short.jsonl",
      R"({"article_id":"sat_t2a1","question":"Q1?","answer_text":"a mistake"})"
      "\n"
      R"({"article_id":"sat_t2a1","question":"Q2?","answer_text":"he"})"
      "\n");
  std::ostringstream out, err;
  CHECK(RunGenerate(o, out, err) == kExitShortfall);
  std::istringstream lines(out.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(nlohmann::json::parse(line)["distractors"].empty());
    ++count;
  }
  CHECK(count == 2);
  CHECK(err.str().find("Q2?") != std::string::npos);
}

TEST_CASE("bad config exits 1 naming the field") {
  GenerateOptions o = FixtureOptions();
  o.config_path = TempFile("bad_config.json", R"({"sim_lo":0.9,"sim_hi":0.8})");
  std::ostringstream out, err;
  CHECK(RunGenerate(o, out, err) == kExitInputError);
  CHECK(err.str().find("sim_lo") != std::string::npos);
  o.config_path = TempFile("typo_config.json", R"({"sim_low":0.5})");
  std::ostringstream out2, err2;
  CHECK(RunGenerate(o, out2, err2) == kExitInputError);
  CHECK(err2.str().find("sim_low") != std::string::npos);
}

TEST_CASE("seed precedence") {
  ::unsetenv("DISTRACTOR_SEED");
  CHECK(ResolveSeed(std::nullopt, std::nullopt) == 0);
  ::setenv("DISTRACTOR_SEED", "17", 1);
  CHECK(ResolveSeed(std::nullopt, std::nullopt) == 17);
  CHECK(ResolveSeed(std::nullopt, 5) == 5);
  CHECK(ResolveSeed(3, 5) == 3);
  ::setenv("DISTRACTOR_SEED", "x1", 1);
  CHECK_THROWS(ResolveSeed(std::nullopt, std::nullopt));
  ::unsetenv("DISTRACTOR_SEED");
}

TEST_CASE("eval command") {
  EvalOptions o{DATA_DIR "/fixtures/eval_mcqs.jsonl", DATA_DIR "/fixtures/eval_labels.jsonl"};
  std::ostringstream out, err;
  CHECK(RunEval(o, out, err) == kExitOk);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["adequate_mcqs"] == 85);
  CHECK(err.str().find("adequate MCQs") != std::string::npos);

  o.labels_path = TempFile("one_label.jsonl",
                           R"({"question":"nope","labels":[{"grammatical":true,"relevant_with_distraction":true,"sufficient_distraction":true},{"grammatical":true,"relevant_with_distraction":true,"sufficient_distraction":true},{"grammatical":true,"relevant_with_distraction":true,"sufficient_distraction":true}]})");
  std::ostringstream out2, err2;
  CHECK(RunEval(o, out2, err2) == kExitInputError);
  CHECK(err2.str().find("question '") != std::string::npos);
}

TEST_CASE("tag and check") {
  std::string text = TempFile("raw.txt", "Maria flew to Boston on Friday. It rained.");
  std::ostringstream out, err;
  CHECK(RunTag(text, "raw", DATA_DIR "/fixtures/kb.json", out, err) == kExitOk);
  std::string tagged = TempFile("raw.jsonl", out.str());

  CheckOptions c;
  c.article_paths = {tagged, DATA_DIR "/fixtures/articles.jsonl"};
  c.qap_path = DATA_DIR "/fixtures/qaps.jsonl";
  c.vectors_path = DATA_DIR "/fixtures/vectors.txt";
  c.lexgraph_path = DATA_DIR "/fixtures/lexgraph.json";
  c.kb_path = DATA_DIR "/fixtures/kb.json";
  c.mcq_path = DATA_DIR "/fixtures/eval_mcqs.jsonl";
  c.labels_path = DATA_DIR "/fixtures/eval_labels.jsonl";
  std::ostringstream cout_, cerr_;
  CHECK(RunCheck(c, cout_, cerr_) == kExitOk);
  CHECK(cerr_.str().empty());
  CHECK(cout_.str().find("1 article(s), 2 sentence(s)") != std::string::npos);

  c.vectors_path = TempFile("bad_vectors.txt", "a 1 0\nb 1\n");
  std::ostringstream o2, e2;
  CHECK(RunCheck(c, o2, e2) == kExitInputError);
  CHECK_FALSE(e2.str().empty());
}
