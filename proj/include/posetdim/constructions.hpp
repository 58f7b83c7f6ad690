#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "posetdim/multipartite.hpp"
#include "posetdim/solver.hpp"

namespace posetdim {

/// Partial matching between rows [1..h] and columns [1..k], 1-based.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  /// Throws BadMatching on out-of-range indices or a repeated row/column.
  void validate(std::size_t h, std::size_t k) const;
};

/// Uniformly random matching of size g in [h] x [k].
Matching random_matching(std::size_t h, std::size_t k, std::size_t g, std::mt19937_64& rng);

/// S_n: a_i < b_j iff i != j, as a 2-partite poset (A, B). Throws TooSmall.
MultipartitePoset standard_example(std::size_t n);

/// S_n with c_i_j inserted between a_i and b_j for every i != j; parts (A, C, B)
/// with n(n+1) elements. Throws TooSmall.
MultipartitePoset stacked_standard(std::size_t n);

/// C_{-g}(h, k): x_i < y_j for every (i, j) outside the matching.
/// Throws TooSmall (h or k below 2) or BadMatching. An empty matching gives the
/// complete bipartite poset.
BipartitePoset complete_minus_matching(std::size_t h, std::size_t k, const Matching& m);

/// Explicit realizer of C_{-g}(h, k) with max(2, g) orders, checked with
/// is_realizer before it is returned. Throws BadMatching (including g == 0),
/// TooSmall, or Internal if the check fails.
Realizer complete_minus_matching_realizer(std::size_t h, std::size_t k, const Matching& m);

/// Standard example on 2 d^2 h k elements split into h row blocks of A and k
/// column blocks of B, giving an (h + k)-partite poset with B(P) = d^2.
/// Requires d, h, k >= 2; d == 1 is accepted only with `allow_unit_block`.
MultipartitePoset lower_bound_family(std::size_t d, std::size_t h, std::size_t k, bool allow_unit_block = false);

/// P(k1, k2; n): k1-subsets below k2-subsets of [n] under inclusion.
/// Throws BadParameters unless 0 <= k1 < k2 <= n.
BipartitePoset subset_poset(std::size_t k1, std::size_t k2, std::size_t n);

/// Element ids used by the generators; indices are zero-padded to `width`
/// digits so that lexicographic and numeric order agree.
Id indexed_id(std::string_view prefix, std::size_t i, std::size_t width);
Id indexed_id(std::string_view prefix, std::size_t i, std::size_t j, std::size_t width);

}  // namespace posetdim
