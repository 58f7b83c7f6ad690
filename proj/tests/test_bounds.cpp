#include <random>

#include "posetdim/bounds.hpp"
#include "posetdim/constructions.hpp"
#include "posetdim/random.hpp"
#include "test_support.hpp"

using namespace posetdim;

namespace {

// Largest family of pairwise overlapping 2-sets {i < j} of [m], by subset enumeration.
std::size_t max_incomparable_two_sets(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> sets;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) sets.emplace_back(i, j);
  auto comparable = [](auto a, auto b) { return a.second < b.first || b.second < a.first; };
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << sets.size()); ++mask) {
    std::size_t count = 0;
    bool ok = true;
    for (std::size_t a = 0; a < sets.size() && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      ++count;
      for (std::size_t b = a + 1; b < sets.size() && ok; ++b)
        if ((mask >> b & 1) && comparable(sets[a], sets[b])) ok = false;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

MultipartitePoset antichain_parts(std::size_t m, std::size_t size) {
  std::vector<std::vector<Id>> parts(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t e = 1; e <= size; ++e) parts[i].push_back(indexed_id("p", i + 1, e, 1));
  return MultipartitePoset::create(std::move(parts), std::vector<IdPair>{});
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("coefficient and chain counts") {
  CHECK(theorem_bound_coefficient(2) == 1);
  CHECK(theorem_bound_coefficient(3) == 3);
  CHECK(theorem_bound_coefficient(4) == 5);
  CHECK(theorem_bound_coefficient(5) == 8);
  CHECK(chain_count_sum(5) == (2 + 3) + (1 + 2));
  for (std::uint64_t m = 2; m <= 2000; ++m) CHECK(chain_count_sum(m) == theorem_bound_coefficient(m));
  CHECK_ERROR_KIND(theorem_bound_coefficient(1), ErrorKind::TooSmall);
}

TEST_CASE("envelope") {
  CHECK(fm_envelope(2).lower == 1);
  CHECK(fm_envelope(2).upper == 1);
  CHECK(fm_envelope(4).lower == 4);
  CHECK(fm_envelope(4).upper == 5);
  for (std::uint64_t m = 2; m <= 500; ++m) CHECK(fm_envelope(m).lower <= fm_envelope(m).upper);
  const auto big = fm_envelope(10000);
  CHECK(double(big.lower) / 1e8 == doctest::Approx(0.25).epsilon(0.01));
  CHECK(double(big.upper) / 1e8 == doctest::Approx(0.25).epsilon(0.01));
  CHECK_ERROR_KIND(fm_envelope(1), ErrorKind::TooSmall);
}

TEST_CASE("incomparable 2-set counts") {
  CHECK(remark_incomparable_count(2) == 1);
  CHECK(remark_incomparable_count(4) == 5);
  CHECK(remark_incomparable_count(5) == 8);
  for (std::size_t m = 2; m <= 6; ++m) CHECK(remark_incomparable_count(m) == max_incomparable_two_sets(m));
  CHECK_ERROR_KIND(remark_incomparable_count(1), ErrorKind::TooSmall);
}

TEST_CASE("B of known families") {
  const BValue stacked = compute_B(stacked_standard(3));
  CHECK(stacked.value == 3);
  CHECK(stacked.is_exact);
  REQUIRE(stacked.table.size() == 3);
  CHECK(stacked.table[0].dimension == 2);
  CHECK(stacked.table[1].dimension == 3);
  CHECK(stacked.table[2].dimension == 2);

  CHECK(compute_B(standard_example(4)).value == 4);
  CHECK(compute_B(lower_bound_family(2, 2, 2)).value == 4);

  BOptions greedy;
  greedy.mode = BMode::Greedy;
  const BValue g = compute_B(stacked_standard(3), greedy);
  CHECK_FALSE(g.is_exact);
  CHECK(g.value >= 3);

  BOptions capped;
  capped.exact_size_cap = 5;
  CHECK_FALSE(compute_B(stacked_standard(3), capped).is_exact);
}

TEST_CASE("sum and chained realizers on fixed families") {
  const auto s3 = standard_example(3);
  const auto b3 = compute_B(s3);
  const Realizer sum3 = sum_bound_realizer(s3, b3.realizers());
  CHECK(sum3.size() == 3);
  CHECK(is_realizer(s3.underlying(), sum3));
  CHECK(theorem_bound_realizer(s3, b3.realizers()).size() <= 3);

  const auto st3 = stacked_standard(3);
  const auto bst3 = compute_B(st3);
  const Realizer sum_st3 = sum_bound_realizer(st3, bst3.realizers());
  CHECK(sum_st3.size() == 7);
  CHECK(is_realizer(st3.underlying(), sum_st3));

  const auto st4 = stacked_standard(4);
  const auto bst4 = compute_B(st4);
  const Realizer chained = theorem_bound_realizer(st4, bst4.realizers());
  CHECK(is_realizer(st4.underlying(), chained));
  CHECK(chained.size() <= 3 * bst4.value);

  const auto flat = antichain_parts(5, 2);
  const auto bflat = compute_B(flat);
  CHECK(bflat.value == 2);
  const Realizer flat_chained = theorem_bound_realizer(flat, bflat.realizers());
  CHECK(is_realizer(flat.underlying(), flat_chained));
  CHECK(flat_chained.size() <= 16);
}

TEST_CASE("invalid pair realizers are rejected") {
  const auto s3 = standard_example(3);
  PairRealizers bad;
  bad[{0, 1}] = Realizer{{LinearOrder(s3.underlying().ids())}};
  CHECK_ERROR_KIND(sum_bound_realizer(s3, bad), ErrorKind::NotABipartiteRealizer);
  CHECK_ERROR_KIND(theorem_bound_realizer(s3, bad), ErrorKind::NotABipartiteRealizer);
  CHECK_ERROR_KIND(sum_bound_realizer(s3, PairRealizers{}), ErrorKind::NotABipartiteRealizer);
}

TEST_CASE("random multipartite posets: both constructions realize and respect their bounds") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 2 + trial % 5;
    const auto mp = random_multipartite(m, 4, 0.5, rng);
    const BValue b = compute_B(mp);
    REQUIRE(b.is_exact);
    const auto table = b.realizers();

    std::size_t sum = 0;
    for (const auto& row : b.table) sum += row.dimension;
    const Realizer s = sum_bound_realizer(mp, table);
    CHECK(is_realizer(mp.underlying(), s));
    CHECK(s.size() == sum);

    const Realizer t = theorem_bound_realizer(mp, table);
    CHECK(is_realizer(mp.underlying(), t));
    CHECK(t.size() <= theorem_bound_coefficient(m) * b.value);

    if (mp.underlying().size() <= 14) {
      const std::size_t d = exact_dimension(mp.underlying()).dimension;
      CHECK(b.value <= d);
      CHECK(d <= m * (m - 1) / 2 * b.value);
      CHECK(d <= t.size());
    }
  }
}

TEST_CASE("bound report") {
  const BoundReport r = make_bound_report(stacked_standard(3));
  CHECK(r.m == 3);
  CHECK(r.b.value == 3);
  CHECK(r.theorem_coefficient == 3);
  CHECK(r.theorem_bound == 9);
  CHECK(r.pairwise_bound == 9);
  CHECK(r.sum_bound == 7);
  CHECK(r.sum_realizer_size == 7);
  REQUIRE(r.exact_dim.has_value());
  CHECK(*r.exact_dim >= 3);
  CHECK(*r.exact_dim <= r.witness.size());
  CHECK(r.witness.size() <= r.theorem_bound);
  CHECK(r.envelope.lower == 2);
  CHECK(r.envelope.upper == 3);

  const BoundReport two = make_bound_report(standard_example(3));
  CHECK(two.theorem_bound == two.b.value);
}

}  // TEST_SUITE
