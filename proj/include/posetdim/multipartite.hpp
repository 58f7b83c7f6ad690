#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

/// Two-part poset (X, Y; <=) whose strict relations all go from `lower` to `upper`.
struct BipartitePoset {
  std::vector<Id> lower;
  std::vector<Id> upper;
  Poset poset;
};

/// A poset with an ordered partition X_1, ..., X_m (m >= 2) into nonempty
/// antichains such that x < y forces part(x) < part(y).
///
/// Part indices in this API are 0-based.
class MultipartitePoset {
public:
  /// Throws PartsOverlap, EmptyPart, TooSmall (m < 2), UnknownId,
  /// IntraPartRelation, BackwardRelation.
  static MultipartitePoset create(std::vector<std::vector<Id>> parts, std::span<const IdPair> relations);

  /// Validates an existing poset against a partition of its elements.
  static MultipartitePoset from_poset(std::vector<std::vector<Id>> parts, Poset poset);

  std::size_t part_count() const noexcept { return parts_.size(); }
  const std::vector<std::vector<Id>>& parts() const noexcept { return parts_; }
  const std::vector<Id>& part(std::size_t i) const { return parts_.at(i); }
  /// Part index of the element with poset index x.
  std::size_t part_of(std::size_t x) const { return part_of_[x]; }

  /// The poset with the partition forgotten.
  const Poset& underlying() const noexcept { return poset_; }

  /// P_{i,j}: the sub-poset induced by X_i and X_j, i < j.
  /// Throws IndexOutOfRange or NotStrictlyOrdered.
  BipartitePoset bipartite_subposet(std::size_t i, std::size_t j) const;

private:
  MultipartitePoset(std::vector<std::vector<Id>> parts, Poset poset, std::vector<std::size_t> part_of)
      : parts_(std::move(parts)), poset_(std::move(poset)), part_of_(std::move(part_of)) {}

  std::vector<std::vector<Id>> parts_;
  Poset poset_;
  std::vector<std::size_t> part_of_;
};

/// Partition by height: level h holds the elements whose longest chain down to a
/// minimal element has h covers. Throws SingleLevel when fewer than two levels.
MultipartitePoset derive_levels(const Poset& p);

}  // namespace posetdim
