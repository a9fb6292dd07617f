#ifndef DISTRACTOR_KB_H_
#define DISTRACTOR_KB_H_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace distractor {

enum class EntityTag { kNone, kPerson, kLocation, kOrganization };

const char *EntityTagName(EntityTag tag);
std::optional<EntityTag> ParseEntityTag(std::string_view name);

// Curated peer groups of named entities, e.g. cities "in the same league".
// Lookups are case-insensitive; results keep the stored casing.
class KnowledgeBase {
 public:
  struct Group {
    EntityTag category;
    std::string name;
    std::vector<std::string> members;
  };

  KnowledgeBase() = default;

  // Reads {category: {group_name: [surfaces...]}}. Throws ParseError or
  // ValidationError (unknown category, empty group).
  static KnowledgeBase Load(std::istream &in);
  static KnowledgeBase LoadFile(const std::string &path);

  // Every surface sharing a group with `name` in `category`, minus `name`
  // itself, sorted case-insensitively. Empty if the name is unknown.
  std::vector<std::string> Peers(EntityTag category, std::string_view name) const;

  // Category of a known surface. A surface listed under several categories
  // resolves to the first of person, location, organization.
  std::optional<EntityTag> Lookup(std::string_view surface) const;

  // Longest entry, in whitespace-separated words.
  std::size_t max_words() const { return max_words_; }
  const std::vector<Group> &groups() const { return groups_; }
  bool empty() const { return groups_.empty(); }

 private:
  std::vector<Group> groups_;
  // Lowercased surface -> indices into groups_.
  std::map<std::string, std::vector<std::size_t>> index_;
  std::size_t max_words_ = 0;
};

}  // namespace distractor

#endif  // DISTRACTOR_KB_H_
