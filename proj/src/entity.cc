#include "distractor/entity.h"

#include <map>
#include <set>

#include "distractor/error.h"
#include "distractor/text.h"

namespace distractor {

std::vector<std::string> CollectArticleEntities(const AnnotatedArticle &article,
                                                EntityTag category) {
  std::map<std::string, std::string> found;
  if (category == EntityTag::kNone) return {};
  for (const auto &s : article.sentences) {
    for (std::size_t i = 0; i < s.tokens.size();) {
      if (s.tokens[i].entity != category) {
        ++i;
        continue;
      }
      std::size_t j = i + 1;
      while (j < s.tokens.size() && s.tokens[j].entity == category) ++j;
      const std::size_t begin = s.tokens[i].span.begin;
      const std::size_t end = s.tokens[j - 1].span.end;
      std::string surface = s.text.substr(begin, end - begin);
      found.emplace(NormalizeKey(surface), surface);
      i = j;
    }
  }
  std::vector<std::string> out;
  for (auto &[key, surface] : found) out.push_back(surface);
  return out;
}

std::vector<EntityDraw> DrawEntityDistractors(const TargetWord &target,
                                              const AnnotatedArticle &article,
                                              const KnowledgeBase &kb,
                                              std::size_t n, Rng &rng) {
  const EntityTag category = EntityCategoryOf(target.type);
  if (category == EntityTag::kNone) {
    throw ValidationError("'" + target.surface + "' is not an entity target");
  }
  std::set<std::string> used = {NormalizeKey(target.surface)};
  std::vector<EntityDraw> out;

  auto take = [&](std::vector<std::string> pool, bool from_article) {
    std::vector<std::string> fresh;
    for (auto &surface : pool) {
      if (!used.count(NormalizeKey(surface))) fresh.push_back(std::move(surface));
    }
    Shuffle(fresh, rng);
    for (auto &surface : fresh) {
      if (out.size() >= n) break;
      used.insert(NormalizeKey(surface));
      out.push_back({std::move(surface), from_article});
    }
  };

  take(CollectArticleEntities(article, category), true);
  if (out.size() < n) take(kb.Peers(category, target.surface), false);
  return out;
}

std::vector<std::string> GenerateEntityDistractors(const TargetWord &target,
                                                   const AnnotatedArticle &article,
                                                   const KnowledgeBase &kb,
                                                   std::size_t n, Rng &rng) {
  if (n == 0) throw ValidationError("requested distractor count must be >= 1");
  auto draws = DrawEntityDistractors(target, article, kb, n, rng);
  if (draws.size() < n) {
    throw InsufficientCandidatesError(
        "only " + std::to_string(draws.size()) + " peers of '" + target.surface +
            "' available, " + std::to_string(n) + " requested",
        draws.size());
  }
  std::vector<std::string> out;
  for (auto &d : draws) out.push_back(std::move(d.text));
  return out;
}

}  // namespace distractor
