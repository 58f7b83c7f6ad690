#include "posetdim/multipartite.hpp"

#include <algorithm>
#include <map>

namespace posetdim {
namespace {

void check_parts(const std::vector<std::vector<Id>>& parts) {
  if (parts.size() < 2)
    throw Error(ErrorKind::TooSmall, "a multipartite poset needs at least 2 parts, got " +
                                         std::to_string(parts.size()));
  std::map<std::string_view, std::size_t> seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw Error(ErrorKind::EmptyPart, "part " + std::to_string(i + 1) + " is empty");
    for (const auto& id : parts[i])
      if (auto [it, fresh] = seen.emplace(id, i); !fresh)
        throw Error(ErrorKind::PartsOverlap, "'" + id + "' is in parts " + std::to_string(it->second + 1) +
                                                 " and " + std::to_string(i + 1));
  }
}

std::vector<Id> flatten(const std::vector<std::vector<Id>>& parts) {
  std::vector<Id> all;
  for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  return all;
}

void check_direction(std::size_t lo_part, std::size_t hi_part, const Id& lo, const Id& hi) {
  if (lo_part == hi_part)
    throw Error(ErrorKind::IntraPartRelation,
                "'" + lo + "' < '" + hi + "' inside part " + std::to_string(lo_part + 1));
  if (lo_part > hi_part)
    throw Error(ErrorKind::BackwardRelation, "'" + lo + "' in part " + std::to_string(lo_part + 1) +
                                                 " is below '" + hi + "' in part " +
                                                 std::to_string(hi_part + 1));
}

std::vector<std::size_t> part_index(const Poset& poset, const std::vector<std::vector<Id>>& parts) {
  std::vector<std::size_t> part_of(poset.size(), parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& id : parts[i]) part_of[poset.index_of(id)] = i;
  return part_of;
}

}  // namespace

MultipartitePoset MultipartitePoset::create(std::vector<std::vector<Id>> parts,
                                            std::span<const IdPair> relations) {
  check_parts(parts);
  std::map<std::string_view, std::size_t> where;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& id : parts[i]) where.emplace(id, i);

  // Generating pairs are checked before closure so that a backward pair is
  // reported as such rather than as a cycle.
  for (const auto& [lo, hi] : relations) {
    if (lo == hi) continue;
    auto a = where.find(lo);
    auto b = where.find(hi);
    if (a == where.end()) throw Error(ErrorKind::UnknownId, "relation references unknown element '" + lo + "'");
    if (b == where.end()) throw Error(ErrorKind::UnknownId, "relation references unknown element '" + hi + "'");
    check_direction(a->second, b->second, lo, hi);
  }
  Poset poset = Poset::from_relations(flatten(parts), relations);
  return from_poset(std::move(parts), std::move(poset));
}

MultipartitePoset MultipartitePoset::from_poset(std::vector<std::vector<Id>> parts, Poset poset) {
  check_parts(parts);
  std::size_t listed = 0;
  for (const auto& part : parts) listed += part.size();
  if (listed != poset.size())
    throw Error(ErrorKind::DomainMismatch, "parts cover " + std::to_string(listed) + " elements, poset has " +
                                               std::to_string(poset.size()));
  auto part_of = part_index(poset, parts);
  for (std::size_t x = 0; x < poset.size(); ++x)
    for (std::size_t y = 0; y < poset.size(); ++y)
      if (poset.less(x, y)) check_direction(part_of[x], part_of[y], poset.id(x), poset.id(y));
  return MultipartitePoset(std::move(parts), std::move(poset), std::move(part_of));
}

BipartitePoset MultipartitePoset::bipartite_subposet(std::size_t i, std::size_t j) const {
  const std::size_t m = part_count();
  if (i >= m || j >= m)
    throw Error(ErrorKind::IndexOutOfRange, "part pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                                ") outside 0.." + std::to_string(m - 1));
  if (i >= j)
    throw Error(ErrorKind::NotStrictlyOrdered,
                "need i < j, got (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  std::vector<Id> both = parts_[i];
  both.insert(both.end(), parts_[j].begin(), parts_[j].end());
  return BipartitePoset{parts_[i], parts_[j], induced_subposet(poset_, both)};
}

MultipartitePoset derive_levels(const Poset& p) {
  std::vector<std::size_t> height(p.size(), 0);
  const BitMatrix order = p.strict_up();
  // Canonical topological order visits every predecessor first.
  for (std::size_t x : canonical_topological_order(order))
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(x, y)) height[y] = std::max(height[y], height[x] + 1);

  const std::size_t levels = p.empty() ? 0 : *std::max_element(height.begin(), height.end()) + 1;
  if (levels < 2) throw Error(ErrorKind::SingleLevel, "poset has " + std::to_string(levels) + " height level(s)");
  std::vector<std::vector<Id>> parts(levels);
  for (std::size_t x = 0; x < p.size(); ++x) parts[height[x]].push_back(p.id(x));
  return MultipartitePoset::from_poset(std::move(parts), p);
}

}  // namespace posetdim
