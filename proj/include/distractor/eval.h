#ifndef DISTRACTOR_EVAL_H_
#define DISTRACTOR_EVAL_H_

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "distractor/assembly.h"
#include "json.hpp"

namespace distractor {

// Human judgments for one distractor.
struct DistractorLabels {
  bool grammatical = false;
  bool relevant_with_distraction = false;
  bool sufficient_distraction = false;

  bool adequate() const { return grammatical && relevant_with_distraction; }
};

struct LabelRecord {
  std::string question;
  std::vector<DistractorLabels> labels;
};

// One JSON object per line. Throws ParseError on malformed lines, wrong label
// counts, or sufficient without relevant.
std::vector<LabelRecord> ParseLabels(std::istream &in);

struct EvalReport {
  std::size_t mcqs = 0;
  std::size_t distractors = 0;
  std::size_t grammatical = 0;
  std::size_t relevant = 0;
  std::size_t sufficient = 0;
  std::size_t adequate_mcqs = 0;
  std::size_t acceptable_mcqs = 0;

  double pct_grammatical = 0.0;
  double pct_relevant = 0.0;
  double pct_sufficient = 0.0;
  double pct_adequate_mcq = 0.0;
  double pct_acceptable_mcq = 0.0;
};

// Labels are matched to MCQs by question text. Throws ValidationError naming
// the question when an MCQ has no label record or the counts disagree.
EvalReport ComputeReport(const std::vector<MCQ> &mcqs,
                         const std::vector<LabelRecord> &labels);
EvalReport ComputeReport(const std::vector<LabelRecord> &labels);

nlohmann::ordered_json ReportToJson(const EvalReport &report);
std::string FormatReportTable(const EvalReport &report);

}  // namespace distractor

#endif  // DISTRACTOR_EVAL_H_
