#ifndef DISTRACTOR_LEXRES_H_
#define DISTRACTOR_LEXRES_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace distractor {

// dot(a, b) / (|a| |b|), clamped to [-1, 1]. Throws DimensionError on a size
// mismatch or a zero vector.
double Cosine(std::span<const float> a, std::span<const float> b);

struct Neighbor {
  std::string word;
  double similarity = 0.0;

  bool operator==(const Neighbor &) const = default;
};

// Dense word vectors, row-major. Immutable after load.
class VectorTable {
 public:
  VectorTable() = default;

  // Text format: optional "<count> <dimension>" header, then one
  // "word v1 ... vd" line per word. Throws ParseError on inconsistent
  // dimensions or a bad header, ValidationError on zero vectors or
  // duplicate words.
  static VectorTable Load(std::istream &in);
  static VectorTable LoadFile(const std::string &path);

  // Throws ValidationError under the same conditions as Load.
  void Add(std::string word, std::vector<float> vector);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return words_.size(); }
  bool Contains(std::string_view word) const;
  std::optional<std::span<const float>> Find(std::string_view word) const;
  const std::string &word(std::size_t row) const { return words_[row]; }

  // Words other than `word` whose cosine with it lies in [lo, hi], by
  // similarity descending then word ascending. Throws OutOfVocabularyError.
  std::vector<Neighbor> Neighborhood(std::string_view word, double lo,
                                     double hi) const;

 private:
  std::span<const float> Row(std::size_t row) const {
    return {data_.data() + row * dimension_, dimension_};
  }

  std::size_t dimension_ = 0;
  std::vector<std::string> words_;
  std::vector<float> data_;
  std::vector<double> norms_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Synsets with hypernym edges and lemma-level antonym pairs. Lemma lookup is
// case-insensitive and treats '_' as a space.
class LexicalGraph {
 public:
  struct Synset {
    std::string id;
    std::string pos;
    std::vector<std::string> lemmas;
    std::vector<std::size_t> hypernyms;  // indices of parents
    int depth = 0;                       // roots have depth 1
  };

  LexicalGraph() = default;

  // JSON {synsets:[{id, pos, lemmas, hypernyms}], antonyms:[[a, b], ...]}.
  // Rejects unknown hypernym ids, duplicate ids and cycles.
  static LexicalGraph Load(std::istream &in);
  static LexicalGraph LoadFile(const std::string &path);

  const std::vector<Synset> &synsets() const { return synsets_; }
  std::vector<std::size_t> SynsetsOf(std::string_view lemma) const;
  bool Contains(std::string_view lemma) const { return !SynsetsOf(lemma).empty(); }

  // Wu-Palmer similarity maximized over synset pairs; nullopt when either
  // lemma is absent or no pair shares an ancestor.
  std::optional<double> Wup(std::string_view a, std::string_view b) const;

  bool IsAntonym(std::string_view a, std::string_view b) const;

  // Lemmas of the direct hypernyms of every synset containing `word`,
  // deduplicated in first-seen order, excluding the word itself.
  std::vector<std::string> HypernymCandidates(std::string_view word) const;

  // The synset itself and all transitive hypernyms.
  std::set<std::size_t> Ancestors(std::size_t synset) const;

 private:
  void Finalize();

  std::vector<Synset> synsets_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> lemma_index_;
  std::set<std::pair<std::string, std::string>> antonyms_;
};

std::string NormalizeLemma(std::string_view lemma);

}  // namespace distractor

#endif  // DISTRACTOR_LEXRES_H_
