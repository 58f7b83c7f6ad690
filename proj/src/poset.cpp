#include "posetdim/poset.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace posetdim {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InconsistentPartial: return "InconsistentPartial";
    case ErrorKind::OverlappingDomains: return "OverlappingDomains";
    case ErrorKind::PartsOverlap: return "PartsOverlap";
    case ErrorKind::EmptyPart: return "EmptyPart";
    case ErrorKind::BackwardRelation: return "BackwardRelation";
    case ErrorKind::IntraPartRelation: return "IntraPartRelation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotStrictlyOrdered: return "NotStrictlyOrdered";
    case ErrorKind::SingleLevel: return "SingleLevel";
    case ErrorKind::EmptyPoset: return "EmptyPoset";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SearchLimit: return "SearchLimit";
    case ErrorKind::NotARealizer: return "NotARealizer";
    case ErrorKind::NotABipartiteRealizer: return "NotABipartiteRealizer";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::BadMatching: return "BadMatching";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MissingParts: return "MissingParts";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Poset::Poset(std::vector<Id> ids, BitMatrix strict)
    : ids_(std::move(ids)), strict_(std::move(strict)), strict_down_(strict_.transposed()) {}

Poset Poset::from_relations(std::vector<Id> elements, std::span<const IdPair> relations) {
  std::sort(elements.begin(), elements.end());
  if (auto dup = std::adjacent_find(elements.begin(), elements.end()); dup != elements.end())
    throw Error(ErrorKind::DuplicateId, "element '" + *dup + "' listed twice");

  auto index = [&](const Id& id) {
    auto it = std::lower_bound(elements.begin(), elements.end(), id);
    if (it == elements.end() || *it != id)
      throw Error(ErrorKind::UnknownId, "relation references unknown element '" + id + "'");
    return static_cast<std::size_t>(it - elements.begin());
  };

  BitMatrix strict(elements.size());
  for (const auto& [lo, hi] : relations) {
    std::size_t x = index(lo);
    std::size_t y = index(hi);
    if (x != y) strict.set(x, y);
  }
  strict.close_transitively();
  for (std::size_t x = 0; x < elements.size(); ++x)
    if (strict.test(x, x))
      throw Error(ErrorKind::CycleDetected, "relations force a cycle through '" + elements[x] + "'");
  return Poset(std::move(elements), std::move(strict));
}

std::optional<std::size_t> Poset::find(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id,
                             [](const Id& a, std::string_view b) { return a < b; });
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t Poset::index_of(std::string_view id) const {
  if (auto x = find(id)) return *x;
  throw Error(ErrorKind::UnknownId, "no element '" + std::string(id) + "'");
}

std::vector<IdPair> Poset::strict_relations() const {
  std::vector<IdPair> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (less(x, y)) out.emplace_back(ids_[x], ids_[y]);
  return out;
}

std::vector<IdPair> Poset::cover_relations() const {
  std::vector<IdPair> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y) {
      if (!less(x, y)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < size() && covered; ++z)
        if (less(x, z) && less(z, y)) covered = false;
      if (covered) out.emplace_back(ids_[x], ids_[y]);
    }
  return out;
}

std::size_t Poset::strict_relation_count() const {
  std::size_t total = 0;
  for (std::size_t x = 0; x < size(); ++x) total += strict_.row_count(x);
  return total;
}

bool Poset::is_chain() const noexcept {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (incomparable(x, y)) return false;
  return true;
}

LinearOrder::LinearOrder(std::vector<Id> sequence) : seq_(std::move(sequence)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& id : seq_)
    if (!seen.insert(id).second)
      throw Error(ErrorKind::DuplicateId, "linear order repeats '" + id + "'");
}

std::vector<std::size_t> LinearOrder::ranks_in(const Poset& p) const {
  if (seq_.size() != p.size())
    throw Error(ErrorKind::DomainMismatch, "order has " + std::to_string(seq_.size()) +
                                               " elements, poset has " + std::to_string(p.size()));
  std::vector<std::size_t> rank(p.size(), p.size());
  for (std::size_t r = 0; r < seq_.size(); ++r) {
    auto x = p.find(seq_[r]);
    if (!x) throw Error(ErrorKind::DomainMismatch, "order mentions '" + seq_[r] + "' outside the poset");
    rank[*x] = r;
  }
  return rank;
}

std::vector<IdPair> incomparable_pairs(const Poset& p) {
  std::vector<IdPair> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x + 1; y < p.size(); ++y)
      if (p.incomparable(x, y)) out.emplace_back(p.id(x), p.id(y));
  return out;
}

std::vector<Id> min_elements(const Poset& p) {
  std::vector<Id> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.strict_down().row_count(x) == 0) out.push_back(p.id(x));
  return out;
}

std::vector<Id> max_elements(const Poset& p) {
  std::vector<Id> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.strict_up().row_count(x) == 0) out.push_back(p.id(x));
  return out;
}

Poset induced_subposet(const Poset& p, std::span<const Id> subset) {
  std::vector<IdPair> rel;
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (const auto& id : subset) idx.push_back(p.index_of(id));
  for (std::size_t a : idx)
    for (std::size_t b : idx)
      if (p.less(a, b)) rel.emplace_back(p.id(a), p.id(b));
  return Poset::from_relations(std::vector<Id>(subset.begin(), subset.end()), rel);
}

bool is_linear_extension(const Poset& p, const LinearOrder& order) {
  const auto rank = order.ranks_in(p);
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(x, y) && rank[x] > rank[y]) return false;
  return true;
}

std::vector<std::size_t> canonical_topological_order(const BitMatrix& successors) {
  const std::size_t n = successors.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (successors.test(x, y)) ++indegree[y];

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.push(x);

  std::vector<std::size_t> out;
  out.reserve(n);
  while (!ready.empty()) {
    std::size_t x = ready.top();
    ready.pop();
    out.push_back(x);
    for (std::size_t y = 0; y < n; ++y)
      if (successors.test(x, y) && --indegree[y] == 0) ready.push(y);
  }
  if (out.size() != n) throw Error(ErrorKind::CycleDetected, "constraint digraph is cyclic");
  return out;
}

LinearOrder extend_linear_order(const Poset& p, const LinearOrder& partial) {
  std::vector<std::size_t> idx;
  idx.reserve(partial.size());
  for (const auto& id : partial) idx.push_back(p.index_of(id));

  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (p.less(idx[b], idx[a]))
        throw Error(ErrorKind::InconsistentPartial,
                    "'" + p.id(idx[b]) + "' is below '" + p.id(idx[a]) + "' but placed after it");

  BitMatrix constraints = p.strict_up();
  for (std::size_t a = 0; a + 1 < idx.size(); ++a) constraints.set(idx[a], idx[a + 1]);

  std::vector<Id> seq;
  seq.reserve(p.size());
  for (std::size_t x : canonical_topological_order(constraints)) seq.push_back(p.id(x));
  return LinearOrder(std::move(seq));
}

LinearOrder reverse(const LinearOrder& order) {
  std::vector<Id> seq(order.sequence().rbegin(), order.sequence().rend());
  return LinearOrder(std::move(seq));
}

LinearOrder erase(const LinearOrder& order, std::string_view id) {
  std::vector<Id> seq = order.sequence();
  auto it = std::find(seq.begin(), seq.end(), id);
  if (it == seq.end()) throw Error(ErrorKind::UnknownId, "order has no '" + std::string(id) + "'");
  seq.erase(it);
  return LinearOrder(std::move(seq));
}

LinearOrder concat(std::span<const LinearOrder> parts) {
  std::vector<Id> seq;
  std::unordered_set<std::string_view> seen;
  for (const auto& part : parts)
    for (const auto& id : part) {
      if (!seen.insert(id).second)
        throw Error(ErrorKind::OverlappingDomains, "'" + id + "' appears in two concatenated orders");
      seq.push_back(id);
    }
  return LinearOrder(std::move(seq));
}

}  // namespace posetdim
