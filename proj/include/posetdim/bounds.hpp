#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "posetdim/multipartite.hpp"
#include "posetdim/solver.hpp"

namespace posetdim {

/// Per-pair realizers L_{i,j} of the bipartite sub-posets, keyed by 0-based (i, j), i < j.
using PairRealizers = std::map<std::pair<std::size_t, std::size_t>, Realizer>;

struct PairDimension {
  std::size_t i = 0;  // 0-based part indices
  std::size_t j = 0;
  std::size_t dimension = 0;  // exact, or an upper bound when !exact
  bool exact = true;
  Realizer realizer;          // over X_i and X_j
};

enum class BMode { Exact, Greedy };

struct BValue {
  std::size_t value = 0;
  bool is_exact = true;
  std::vector<PairDimension> table;

  PairRealizers realizers() const;
};

struct BOptions {
  BMode mode = BMode::Exact;
  /// Sub-posets larger than this fall back to the greedy realizer.
  std::size_t exact_size_cap = 24;
  /// Solver node budget per sub-poset; exceeding it also falls back to greedy.
  std::uint64_t exact_node_limit = 5'000'000;
  unsigned threads = 1;
};

/// B(P) = max over i < j of dim(P_{i,j}), with the per-pair table.
BValue compute_B(const MultipartitePoset& mp, const BOptions& options = {});

/// Extends every order of every L_{i,j} to a linear extension of the whole
/// poset. The result has sum |L_{i,j}| orders. Throws NotABipartiteRealizer.
Realizer sum_bound_realizer(const MultipartitePoset& mp, const PairRealizers& realizers);

/// Packs per-pair orders into chained extensions by gap class, producing at
/// most theorem_bound_coefficient(m) * max |L_{i,j}| orders. Throws
/// NotABipartiteRealizer.
Realizer theorem_bound_realizer(const MultipartitePoset& mp, const PairRealizers& realizers);

/// floor((m-1)(m+3)/4). Throws TooSmall for m < 2.
std::uint64_t theorem_bound_coefficient(std::uint64_t m);

/// Number of chained extensions per unit of B used by theorem_bound_realizer:
/// (2 + 3 + ... + floor((m+1)/2)) + (1 + 2 + ... + (m - floor((m+1)/2))).
std::uint64_t chain_count_sum(std::uint64_t m);

struct FmEnvelope {
  std::uint64_t m = 0;
  std::uint64_t lower = 0;  // floor(m^2/4)
  std::uint64_t upper = 0;  // floor((m-1)(m+3)/4)
};

/// Bounds on sup dim(P)/B(P) over m-partite posets. Throws TooSmall.
FmEnvelope fm_envelope(std::uint64_t m);

/// Size of the family of 2-sets {i, j} of [m] with i <= ceil(m/2) <= j, after
/// checking that the family is an antichain of the interval order
/// {i1, j1} < {i2, j2} iff j1 < i2. Throws TooSmall, or Internal if the family
/// is not an antichain.
std::uint64_t remark_incomparable_count(std::uint64_t m);

struct BoundReport {
  std::size_t m = 0;
  BValue b;
  std::size_t sum_bound = 0;            // sum of d_{i,j}
  std::uint64_t theorem_coefficient = 0;
  std::uint64_t theorem_bound = 0;      // coefficient * B
  std::uint64_t pairwise_bound = 0;     // m(m-1)/2 * B
  Realizer witness;                     // from theorem_bound_realizer
  std::size_t sum_realizer_size = 0;
  std::optional<std::size_t> exact_dim;
  FmEnvelope envelope;
};

struct ReportOptions {
  BOptions b;
  /// Run the exact solver on the whole poset when it has at most this many
  /// elements; exact_dim is left empty if the search exceeds the node limit.
  std::size_t exact_dim_cap = 32;
  std::uint64_t exact_node_limit = 2'000'000;
};

BoundReport make_bound_report(const MultipartitePoset& mp, const ReportOptions& options = {});

}  // namespace posetdim
