#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "distractor/cli.h"

namespace {

// Runs `fn` against --out when given, stdout otherwise.
template <typename Fn>
int WithOutput(const std::string &out_path, Fn fn) {
  if (out_path.empty()) return fn(std::cout);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return distractor::kExitInputError;
  }
  return fn(out);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Distractor generation for multiple-choice questions"};
  app.require_subcommand(1);

  distractor::GenerateOptions gen;
  std::string gen_out;
  std::uint64_t seed = 0;
  int threads = 1;
  auto *generate = app.add_subcommand("generate", "Generate three distractors per QAP");
  generate->add_option("--articles", gen.article_paths, "Annotated article JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  generate->add_option("--qaps", gen.qap_path, "QAP JSONL")->required()->check(CLI::ExistingFile);
  generate->add_option("--vectors", gen.vectors_path, "Word vectors (text format)")
      ->required()
      ->check(CLI::ExistingFile);
  generate->add_option("--lexgraph", gen.lexgraph_path, "Lexical graph JSON")
      ->required()
      ->check(CLI::ExistingFile);
  generate->add_option("--kb", gen.kb_path, "Entity knowledge base JSON")
      ->required()
      ->check(CLI::ExistingFile);
  generate->add_option("--config", gen.config_path, "Config JSON")->check(CLI::ExistingFile);
  auto *seed_opt = generate->add_option("--seed", seed, "Random seed");
  auto *threads_opt =
      generate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  generate->add_option("--out", gen_out, "Output file (default stdout)");

  distractor::EvalOptions ev;
  std::string eval_out;
  auto *eval = app.add_subcommand("eval", "Compute metrics from labeled MCQs");
  eval->add_option("--mcqs", ev.mcq_path, "MCQ JSONL")->required()->check(CLI::ExistingFile);
  eval->add_option("--labels", ev.labels_path, "Label JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--out", eval_out, "Report file (default stdout)");

  std::string tag_text, tag_id = "untitled", tag_kb, tag_out;
  auto *tag = app.add_subcommand("tag", "Annotate raw text with the built-in tagger");
  tag->add_option("--text", tag_text, "Raw text file")->required()->check(CLI::ExistingFile);
  tag->add_option("--article-id", tag_id, "Article id");
  tag->add_option("--kb", tag_kb, "Gazetteer knowledge base")->check(CLI::ExistingFile);
  tag->add_option("--out", tag_out, "Output file (default stdout)");

  distractor::CheckOptions chk;
  auto *check = app.add_subcommand("check", "Validate input files");
  check->add_option("--articles", chk.article_paths);
  check->add_option("--qaps", chk.qap_path);
  check->add_option("--vectors", chk.vectors_path);
  check->add_option("--lexgraph", chk.lexgraph_path);
  check->add_option("--kb", chk.kb_path);
  check->add_option("--config", chk.config_path);
  check->add_option("--mcqs", chk.mcq_path);
  check->add_option("--labels", chk.labels_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : distractor::kExitInputError;
  }

  if (*generate) {
    if (*seed_opt) gen.seed = seed;
    if (*threads_opt) gen.threads = threads;
    return WithOutput(gen_out, [&](std::ostream &out) {
      return distractor::RunGenerate(gen, out, std::cerr);
    });
  }
  if (*eval) {
    return WithOutput(eval_out, [&](std::ostream &out) {
      return distractor::RunEval(ev, out, std::cerr);
    });
  }
  if (*tag) {
    return WithOutput(tag_out, [&](std::ostream &out) {
      return distractor::RunTag(tag_text, tag_id, tag_kb, out, std::cerr);
    });
  }
  return distractor::RunCheck(chk, std::cout, std::cerr);
}
