#ifndef DISTRACTOR_ENTITY_H_
#define DISTRACTOR_ENTITY_H_

#include <cstddef>
#include <string>
#include <vector>

#include "distractor/annotation.h"
#include "distractor/kb.h"
#include "distractor/random.h"

namespace distractor {

// Maximal runs of tokens tagged `category`, deduplicated case-insensitively
// and sorted by their lowercase form.
std::vector<std::string> CollectArticleEntities(const AnnotatedArticle &article,
                                                EntityTag category);

struct EntityDraw {
  std::string text;
  bool from_article = false;
};

// Samples without replacement, exhausting the article pool before the
// knowledge base. Returns up to n draws.
std::vector<EntityDraw> DrawEntityDistractors(const TargetWord &target,
                                              const AnnotatedArticle &article,
                                              const KnowledgeBase &kb,
                                              std::size_t n, Rng &rng);

// As above, but throws InsufficientCandidatesError when fewer than n exist.
std::vector<std::string> GenerateEntityDistractors(const TargetWord &target,
                                                   const AnnotatedArticle &article,
                                                   const KnowledgeBase &kb,
                                                   std::size_t n, Rng &rng);

}  // namespace distractor

#endif  // DISTRACTOR_ENTITY_H_
