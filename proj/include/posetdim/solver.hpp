#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim {

/// A family of linear orders over a poset's full ground set.
struct Realizer {
  std::vector<LinearOrder> orders;

  std::size_t size() const noexcept { return orders.size(); }
  friend bool operator==(const Realizer&, const Realizer&) = default;
};

/// First reason a family of orders fails to realize a poset.
struct RealizerViolation {
  enum class Kind {
    Empty,           // no orders at all
    NotExtension,    // lower < upper in the poset, but `order` puts upper first
    NeverReversed,   // lower || upper, yet every order puts lower first
  };
  Kind kind;
  Id lower;
  Id upper;
  std::size_t order = 0;
};

/// Throws DomainMismatch when some order does not span p's elements.
std::optional<RealizerViolation> find_realizer_violation(const Poset& p, const Realizer& r);
bool is_realizer(const Poset& p, const Realizer& r);

struct SolverOptions {
  /// Largest realizer size to try; CapExceeded is thrown past it.
  std::optional<std::size_t> max_d;
  /// Cover only critical pairs instead of every ordered incomparable pair.
  /// Both formulations give the same dimension.
  bool critical_pairs_only = true;
  /// Seed the iterative deepening with a clique of mutually conflicting pairs.
  bool clique_lower_bound = true;
  /// Abandon the search (SearchLimit) after this many search-tree nodes.
  std::optional<std::uint64_t> node_limit;
  /// Worker threads for the search; the reported dimension and witness do not
  /// depend on it.
  unsigned threads = 1;
};

/// Record of the exhausted search backing a dimension value.
struct Certificate {
  std::size_t dimension = 0;       // 0 when the cap was exceeded
  std::uint64_t nodes_explored = 0;
  std::size_t max_d_probed = 0;
  /// Every realizer size below this was excluded by a clique of pairwise
  /// conflicting pairs; sizes from here to max_d_probed - 1 were refuted by
  /// exhaustive search.
  std::size_t lower_bound = 0;
  std::vector<IdPair> lower_bound_clique;
  std::size_t pairs_to_cover = 0;
};

struct DimensionResult {
  std::size_t dimension = 0;
  Realizer witness;
  Certificate certificate;
};

class CapExceeded : public Error {
public:
  explicit CapExceeded(Certificate cert)
      : Error(ErrorKind::CapExceeded, "no realizer with at most " + std::to_string(cert.max_d_probed) + " orders"),
        certificate_(std::move(cert)) {}
  const Certificate& certificate() const noexcept { return certificate_; }

private:
  Certificate certificate_;
};

/// Minimum realizer size with a witness. Chains have dimension 1.
/// Throws EmptyPoset, BadParameters (max_d == 0), CapExceeded, or SearchLimit.
DimensionResult exact_dimension(const Poset& p, const SolverOptions& options = {});

/// Greedy realizer: repeatedly fills one order with a maximal consistent set of
/// still-uncovered ordered incomparable pairs. Throws EmptyPoset.
Realizer greedy_realizer(const Poset& p);

/// Ordered incomparable pairs (x, y): x || y, listed for both orientations.
std::vector<std::pair<std::size_t, std::size_t>> ordered_incomparable_pairs(const Poset& p);

/// Critical pairs (x, y): x || y, everything below y is below x and everything
/// above x is above y. A family of linear extensions that places x below y for
/// each critical pair (x, y) is a realizer.
std::vector<std::pair<std::size_t, std::size_t>> critical_pairs(const Poset& p);

/// Coordinate vector of each element: its rank in every order.
using Embedding = std::map<Id, std::vector<std::size_t>>;

/// Throws NotARealizer or DomainMismatch.
Embedding embed(const Poset& p, const Realizer& r);

/// True iff x <= y in p exactly when embedding(x) <= embedding(y) coordinate-wise,
/// over all ordered pairs.
bool embedding_reproduces(const Poset& p, const Embedding& embedding);

/// Sorts the orders lexicographically by id sequence.
void canonicalize(Realizer& r);

}  // namespace posetdim
