#include "distractor/eval.h"

#include <cstdio>
#include <map>
#include <sstream>

#include "distractor/error.h"
#include "distractor/text.h"

namespace distractor {
namespace {

double Percent(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

bool RequireBool(const nlohmann::json &obj, const char *key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_boolean()) {
    throw ParseError("expected boolean", line, key);
  }
  return it->get<bool>();
}

}  // namespace

std::vector<LabelRecord> ParseLabels(std::istream &in) {
  std::vector<LabelRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(e.what(), line_no);
    }
    if (!obj.is_object()) throw ParseError("expected object", line_no);
    auto q = obj.find("question");
    if (q == obj.end() || !q->is_string()) throw ParseError("expected string", line_no, "question");
    auto ls = obj.find("labels");
    if (ls == obj.end() || !ls->is_array()) throw ParseError("expected array", line_no, "labels");
    if (ls->size() != kDistractorsPerQuestion) {
      throw ParseError("expected 3 label objects", line_no, "labels");
    }
    LabelRecord rec;
    rec.question = q->get<std::string>();
    for (const auto &l : *ls) {
      if (!l.is_object()) throw ParseError("expected object", line_no, "labels");
      DistractorLabels d;
      d.grammatical = RequireBool(l, "grammatical", line_no);
      d.relevant_with_distraction = RequireBool(l, "relevant_with_distraction", line_no);
      d.sufficient_distraction = RequireBool(l, "sufficient_distraction", line_no);
      if (d.sufficient_distraction && !d.relevant_with_distraction) {
        throw ParseError("sufficient_distraction requires relevant_with_distraction",
                         line_no, "sufficient_distraction");
      }
      rec.labels.push_back(d);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

EvalReport ComputeReport(const std::vector<LabelRecord> &labels) {
  EvalReport r;
  for (const auto &rec : labels) {
    ++r.mcqs;
    std::size_t adequate = 0;
    for (const auto &d : rec.labels) {
      ++r.distractors;
      r.grammatical += d.grammatical;
      r.relevant += d.relevant_with_distraction;
      r.sufficient += d.sufficient_distraction;
      adequate += d.adequate();
    }
    if (adequate == kDistractorsPerQuestion) ++r.adequate_mcqs;
    if (adequate >= 1) ++r.acceptable_mcqs;
  }
  r.pct_grammatical = Percent(r.grammatical, r.distractors);
  r.pct_relevant = Percent(r.relevant, r.distractors);
  r.pct_sufficient = Percent(r.sufficient, r.distractors);
  r.pct_adequate_mcq = Percent(r.adequate_mcqs, r.mcqs);
  r.pct_acceptable_mcq = Percent(r.acceptable_mcqs, r.mcqs);
  return r;
}

EvalReport ComputeReport(const std::vector<MCQ> &mcqs,
                         const std::vector<LabelRecord> &labels) {
  std::map<std::string, const LabelRecord *> by_question;
  for (const auto &rec : labels) {
    if (!by_question.emplace(rec.question, &rec).second) {
      throw ValidationError("duplicate label record for question '" + rec.question + "'");
    }
  }
  if (labels.size() != mcqs.size()) {
    auto unmatched = by_question;
    for (const auto &m : mcqs) unmatched.erase(m.question);
    if (!unmatched.empty()) {
      throw ValidationError("label record without MCQ for question '" +
                            unmatched.begin()->first + "'");
    }
  }
  std::vector<LabelRecord> matched;
  matched.reserve(mcqs.size());
  for (const auto &m : mcqs) {
    auto it = by_question.find(m.question);
    if (it == by_question.end()) {
      throw ValidationError("no label record for question '" + m.question + "'");
    }
    if (m.distractors.size() != it->second->labels.size()) {
      throw ValidationError("label count does not match distractors for question '" +
                            m.question + "'");
    }
    matched.push_back(*it->second);
  }
  return ComputeReport(matched);
}

nlohmann::ordered_json ReportToJson(const EvalReport &r) {
  nlohmann::ordered_json j;
  j["mcqs"] = r.mcqs;
  j["distractors"] = r.distractors;
  j["grammatical"] = r.grammatical;
  j["relevant"] = r.relevant;
  j["sufficient"] = r.sufficient;
  j["adequate_mcqs"] = r.adequate_mcqs;
  j["acceptable_mcqs"] = r.acceptable_mcqs;
  j["pct_grammatical"] = r.pct_grammatical;
  j["pct_relevant"] = r.pct_relevant;
  j["pct_sufficient"] = r.pct_sufficient;
  j["pct_adequate_mcq"] = r.pct_adequate_mcq;
  j["pct_acceptable_mcq"] = r.pct_acceptable_mcq;
  return j;
}

std::string FormatReportTable(const EvalReport &r) {
  std::ostringstream out;
  char buf[128];
  auto row = [&](const char *name, std::size_t n, std::size_t d, double pct) {
    std::snprintf(buf, sizeof buf, "%-22s %5zu / %-5zu %6.1f%%\n", name, n, d, pct);
    out << buf;
  };
  row("grammatical", r.grammatical, r.distractors, r.pct_grammatical);
  row("relevant", r.relevant, r.distractors, r.pct_relevant);
  row("sufficient", r.sufficient, r.distractors, r.pct_sufficient);
  row("adequate MCQs", r.adequate_mcqs, r.mcqs, r.pct_adequate_mcq);
  row("acceptable MCQs", r.acceptable_mcqs, r.mcqs, r.pct_acceptable_mcq);
  return out.str();
}

}  // namespace distractor
