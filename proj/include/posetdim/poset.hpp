#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetdim/bit_matrix.hpp"
#include "posetdim/error.hpp"

namespace posetdim {

using Id = std::string;
using IdPair = std::pair<Id, Id>;

/// A finite poset stored as its closed order relation.
///
/// Elements are kept in lexicographic id order, so element index order is the
/// canonical order used for every tie-break in the library. `leq(x, y)` is the
/// reflexive relation; `less(x, y)` its strict part.
class Poset {
public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of `relations` over `elements`.
  /// A pair (x, y) reads x <= y; self-pairs are ignored.
  /// Throws DuplicateId, UnknownId, or CycleDetected.
  static Poset from_relations(std::vector<Id> elements, std::span<const IdPair> relations);
  static Poset from_relations(std::vector<Id> elements, std::initializer_list<IdPair> relations) {
    return from_relations(std::move(elements), std::span<const IdPair>(relations.begin(), relations.size()));
  }

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const std::vector<Id>& ids() const noexcept { return ids_; }
  const Id& id(std::size_t x) const { return ids_[x]; }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws UnknownId.
  std::size_t index_of(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id).has_value(); }

  bool leq(std::size_t x, std::size_t y) const noexcept { return x == y || strict_.test(x, y); }
  bool less(std::size_t x, std::size_t y) const noexcept { return strict_.test(x, y); }
  bool comparable(std::size_t x, std::size_t y) const noexcept { return leq(x, y) || leq(y, x); }
  bool incomparable(std::size_t x, std::size_t y) const noexcept { return !comparable(x, y); }

  bool leq(std::string_view x, std::string_view y) const { return leq(index_of(x), index_of(y)); }
  bool less(std::string_view x, std::string_view y) const { return less(index_of(x), index_of(y)); }

  /// Strict relation: row x is the set of y with x < y.
  const BitMatrix& strict_up() const noexcept { return strict_; }
  /// Transpose of strict_up(): row y is the set of x with x < y.
  const BitMatrix& strict_down() const noexcept { return strict_down_; }

  /// All (x, y) with x < y, as ids, in canonical order.
  std::vector<IdPair> strict_relations() const;
  /// Cover pairs of the relation (its Hasse diagram); a minimal generating set.
  std::vector<IdPair> cover_relations() const;
  std::size_t strict_relation_count() const;

  bool is_chain() const noexcept;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.ids_ == b.ids_ && a.strict_ == b.strict_;
  }

private:
  Poset(std::vector<Id> ids, BitMatrix strict);

  std::vector<Id> ids_;
  BitMatrix strict_;
  BitMatrix strict_down_;
};

/// A total order on a set of ids, bottom first.
class LinearOrder {
public:
  LinearOrder() = default;
  /// Throws DuplicateId when the sequence repeats an id.
  explicit LinearOrder(std::vector<Id> sequence);
  LinearOrder(std::initializer_list<Id> sequence) : LinearOrder(std::vector<Id>(sequence)) {}

  const std::vector<Id>& sequence() const noexcept { return seq_; }
  std::size_t size() const noexcept { return seq_.size(); }
  bool empty() const noexcept { return seq_.empty(); }
  const Id& operator[](std::size_t i) const { return seq_[i]; }
  auto begin() const noexcept { return seq_.begin(); }
  auto end() const noexcept { return seq_.end(); }

  /// Rank of every element of `p` in this order, indexed by element index.
  /// Throws DomainMismatch unless the order is a permutation of p's elements.
  std::vector<std::size_t> ranks_in(const Poset& p) const;

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
  friend auto operator<=>(const LinearOrder& a, const LinearOrder& b) { return a.seq_ <=> b.seq_; }

private:
  std::vector<Id> seq_;
};

/// Unordered incomparable pairs {x, y}, reported with the smaller id first.
std::vector<IdPair> incomparable_pairs(const Poset& p);

std::vector<Id> min_elements(const Poset& p);
std::vector<Id> max_elements(const Poset& p);

/// Restriction of `p` to `subset`. Throws UnknownId.
Poset induced_subposet(const Poset& p, std::span<const Id> subset);

/// Throws DomainMismatch unless `order` spans exactly p's elements.
bool is_linear_extension(const Poset& p, const LinearOrder& order);

/// Completes a linear extension of the sub-poset induced by partial's domain to
/// a linear extension of `p` containing `partial` as a subsequence. Ties are
/// broken by canonical id order.
/// Throws UnknownId or InconsistentPartial.
LinearOrder extend_linear_order(const Poset& p, const LinearOrder& partial);

LinearOrder reverse(const LinearOrder& order);
/// Throws UnknownId.
LinearOrder erase(const LinearOrder& order, std::string_view id);
/// Throws OverlappingDomains.
LinearOrder concat(std::span<const LinearOrder> parts);

/// Topological sort of an acyclic relation given as a strict-successor matrix,
/// smallest index first among available elements. Returns element indices.
std::vector<std::size_t> canonical_topological_order(const BitMatrix& successors);

}  // namespace posetdim
