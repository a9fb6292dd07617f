#ifndef DISTRACTOR_TESTS_ORACLES_H_
#define DISTRACTOR_TESTS_ORACLES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

// Reference implementations written independently of the library, used only
// by the acceptance suite.
namespace oracle {

// 1 - 1/(1+e^E), computed to 40 digits offline.
extern const double kSd1;
extern const double kSd3;

// Full-matrix edit distance over bytes.
std::size_t EditDistance(const std::string &a, const std::string &b);

// Removal predicate: the lowercased candidate contains the lowercased target
// ('_' read as a space), or they share a prefix of three or more characters
// and are fewer than three edits apart.
bool Removed(const std::string &target, const std::string &candidate);

// A synset graph given as parent lists. Parents always precede children.
struct Graph {
  std::vector<std::vector<std::size_t>> parents;
  std::vector<std::vector<std::string>> lemmas;
};

int Depth(const Graph &g, std::size_t s);
bool IsAncestor(const Graph &g, std::size_t ancestor, std::size_t s);

// Max over synset pairs and over every common ancestor; nullopt when a lemma
// is absent or no pair shares an ancestor.
std::optional<double> Wup(const Graph &g, const std::string &a, const std::string &b);

struct Scored {
  std::string word;
  double similarity;
};

// Every other row whose cosine with `target` lies in [lo, hi], sorted by
// similarity descending then word ascending.
std::vector<Scored> Neighborhood(const std::vector<std::string> &words,
                                 const std::vector<std::vector<float>> &rows,
                                 std::size_t target, double lo, double hi);

}  // namespace oracle

#endif  // DISTRACTOR_TESTS_ORACLES_H_
