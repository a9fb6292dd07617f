#include "distractor/kb.h"

#include <algorithm>
#include <fstream>
#include <set>

#include "distractor/error.h"
#include "distractor/text.h"
#include "json.hpp"

namespace distractor {

const char *EntityTagName(EntityTag tag) {
  switch (tag) {
    case EntityTag::kNone:
      return "none";
    case EntityTag::kPerson:
      return "person";
    case EntityTag::kLocation:
      return "location";
    case EntityTag::kOrganization:
      return "organization";
  }
  return "none";
}

std::optional<EntityTag> ParseEntityTag(std::string_view name) {
  if (name == "none" || name == "O" || name.empty()) return EntityTag::kNone;
  if (name == "person") return EntityTag::kPerson;
  if (name == "location") return EntityTag::kLocation;
  if (name == "organization") return EntityTag::kOrganization;
  return std::nullopt;
}

KnowledgeBase KnowledgeBase::Load(std::istream &in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("knowledge base: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("knowledge base: expected an object");

  KnowledgeBase kb;
  for (const auto &[category_name, groups] : doc.items()) {
    auto category = ParseEntityTag(category_name);
    if (!category || *category == EntityTag::kNone) {
      throw ValidationError("knowledge base: unknown category '" +
                            category_name + "'");
    }
    if (!groups.is_object()) {
      throw ParseError("knowledge base: category '" + category_name +
                           "' must map group names to lists",
                       0, category_name);
    }
    for (const auto &[group_name, members] : groups.items()) {
      if (!members.is_array() || members.empty()) {
        throw ValidationError("knowledge base: group '" + group_name +
                              "' must be a non-empty list");
      }
      Group group{*category, group_name, {}};
      std::set<std::string> seen;
      for (const auto &m : members) {
        if (!m.is_string() || Trim(m.get<std::string>()).empty()) {
          throw ValidationError("knowledge base: group '" + group_name +
                                "' has a non-string or empty member");
        }
        std::string surface = Trim(m.get<std::string>());
        if (seen.insert(NormalizeKey(surface)).second) {
          group.members.push_back(surface);
        }
      }
      std::size_t index = kb.groups_.size();
      for (const auto &surface : group.members) {
        kb.index_[NormalizeKey(surface)].push_back(index);
        kb.max_words_ = std::max(kb.max_words_, SplitWhitespace(surface).size());
      }
      kb.groups_.push_back(std::move(group));
    }
  }
  return kb;
}

KnowledgeBase KnowledgeBase::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read knowledge base " + path);
  return Load(in);
}

std::vector<std::string> KnowledgeBase::Peers(EntityTag category,
                                              std::string_view name) const {
  const std::string key = NormalizeKey(name);
  auto it = index_.find(key);
  if (it == index_.end()) return {};
  std::map<std::string, std::string> peers;  // key -> first-seen surface
  for (std::size_t gi : it->second) {
    const Group &g = groups_[gi];
    if (g.category != category) continue;
    for (const auto &member : g.members) {
      std::string member_key = NormalizeKey(member);
      if (member_key != key) peers.emplace(member_key, member);
    }
  }
  std::vector<std::string> out;
  out.reserve(peers.size());
  for (auto &[k, surface] : peers) out.push_back(surface);
  return out;
}

std::optional<EntityTag> KnowledgeBase::Lookup(std::string_view surface) const {
  auto it = index_.find(NormalizeKey(surface));
  if (it == index_.end()) return std::nullopt;
  EntityTag best = EntityTag::kNone;
  for (std::size_t gi : it->second) {
    EntityTag c = groups_[gi].category;
    if (best == EntityTag::kNone || static_cast<int>(c) < static_cast<int>(best)) {
      best = c;
    }
  }
  return best;
}

}  // namespace distractor
