#include <random>

#include "oracle.hpp"
#include "posetdim/constructions.hpp"
#include "posetdim/random.hpp"
#include "posetdim/solver.hpp"
#include "test_support.hpp"

using namespace posetdim;
using posetdim::testing::antichain_ab;
using posetdim::testing::chain_abc;

TEST_SUITE("solver") {

TEST_CASE("realizer checks") {
  CHECK(is_realizer(chain_abc(), Realizer{{LinearOrder{"a", "b", "c"}}}));
  const Poset ab = antichain_ab();
  CHECK_FALSE(is_realizer(ab, Realizer{{LinearOrder{"a", "b"}}}));
  const auto v = find_realizer_violation(ab, Realizer{{LinearOrder{"a", "b"}}});
  REQUIRE(v.has_value());
  CHECK(v->kind == RealizerViolation::Kind::NeverReversed);
  CHECK(v->lower == "a");
  CHECK(v->upper == "b");
  CHECK(find_realizer_violation(ab, Realizer{})->kind == RealizerViolation::Kind::Empty);
  const auto bad = find_realizer_violation(chain_abc(), Realizer{{LinearOrder{"b", "a", "c"}}});
  REQUIRE(bad.has_value());
  CHECK(bad->kind == RealizerViolation::Kind::NotExtension);
  CHECK_ERROR_KIND(is_realizer(chain_abc(), Realizer{{LinearOrder{"a", "b"}}}), ErrorKind::DomainMismatch);
}

TEST_CASE("small exact dimensions") {
  CHECK(exact_dimension(chain_abc()).dimension == 1);
  CHECK(exact_dimension(Poset::from_relations({"a"}, {})).dimension == 1);
  CHECK(exact_dimension(antichain_ab()).dimension == 2);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = exact_dimension(standard_example(n).underlying());
    CHECK(r.dimension == n);
    CHECK(r.witness.size() == n);
    CHECK(is_realizer(standard_example(n).underlying(), r.witness));
  }
  CHECK_ERROR_KIND(exact_dimension(Poset{}), ErrorKind::EmptyPoset);
}

TEST_CASE("subset poset P(1,2;4) agrees with the oracle") {
  const Poset p = subset_poset(1, 2, 4).poset;
  const auto r = exact_dimension(p);
  CHECK(r.dimension == oracle::brute_force_dimension(p));
  CHECK(is_realizer(p, r.witness));
}

TEST_CASE("cap exceeded carries a certificate") {
  const Poset s3 = standard_example(3).underlying();
  SolverOptions options;
  options.max_d = 2;
  options.clique_lower_bound = false;
  bool thrown = false;
  try {
    exact_dimension(s3, options);
  } catch (const CapExceeded& e) {
    thrown = true;
    CHECK(e.kind() == ErrorKind::CapExceeded);
    CHECK(e.certificate().max_d_probed == 2);
    CHECK(e.certificate().dimension == 0);
    CHECK(e.certificate().nodes_explored > 0);
  }
  CHECK(thrown);
}

TEST_CASE("node budget") {
  SolverOptions options;
  options.node_limit = 1;
  options.clique_lower_bound = false;
  CHECK_ERROR_KIND(exact_dimension(standard_example(4).underlying(), options), ErrorKind::SearchLimit);
}

TEST_CASE("clique lower bound on the standard example") {
  const auto r = exact_dimension(standard_example(4).underlying());
  CHECK(r.certificate.lower_bound == 4);
  CHECK(r.certificate.lower_bound_clique.size() == 4);
}

TEST_CASE("embedding") {
  const Embedding chain = embed(chain_abc(), Realizer{{LinearOrder{"a", "b", "c"}}});
  CHECK(chain.at("a") == std::vector<std::size_t>{0});
  CHECK(chain.at("c") == std::vector<std::size_t>{2});
  const Realizer swap{{LinearOrder{"a", "b"}, LinearOrder{"b", "a"}}};
  const Embedding anti = embed(antichain_ab(), swap);
  CHECK(anti.at("a") == std::vector<std::size_t>{0, 1});
  CHECK(anti.at("b") == std::vector<std::size_t>{1, 0});
  CHECK(embedding_reproduces(antichain_ab(), anti));
  CHECK_ERROR_KIND(embed(antichain_ab(), Realizer{{LinearOrder{"a", "b"}}}), ErrorKind::NotARealizer);

  const Poset s2 = standard_example(2).underlying();
  const Embedding e = embed(s2, exact_dimension(s2).witness);
  for (std::size_t x = 0; x < s2.size(); ++x)
    for (std::size_t y = 0; y < s2.size(); ++y) {
      const auto& cx = e.at(s2.id(x));
      const auto& cy = e.at(s2.id(y));
      bool below = true;
      for (std::size_t i = 0; i < cx.size(); ++i) below = below && cx[i] <= cy[i];
      CHECK(below == s2.leq(x, y));
    }
}

TEST_CASE("greedy realizer") {
  CHECK(greedy_realizer(chain_abc()).size() == 1);
  CHECK(greedy_realizer(antichain_ab()).size() == 2);
  const Poset s3 = standard_example(3).underlying();
  const Realizer g = greedy_realizer(s3);
  CHECK(g.size() >= 3);
  CHECK(g.size() <= 9);
  CHECK(is_realizer(s3, g));
}

TEST_CASE("critical pairs are a subset of the incomparable pairs") {
  const Poset s3 = standard_example(3).underlying();
  const auto all = ordered_incomparable_pairs(s3);
  const auto crit = critical_pairs(s3);
  CHECK(all.size() == 18);
  for (const auto& [x, y] : all) {
    bool critical = true;
    for (std::size_t z = 0; z < s3.size(); ++z) {
      if (s3.less(z, y) && !s3.less(z, x)) critical = false;
      if (s3.less(x, z) && !s3.less(y, z)) critical = false;
    }
    const bool listed = std::find(crit.begin(), crit.end(), std::pair{x, y}) != crit.end();
    CHECK(listed == critical);
  }
}

TEST_CASE("random posets: oracle, formulations and thread counts agree") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Poset p = random_poset(n, 0.15 + 0.1 * (trial % 5), rng);
    const auto r = exact_dimension(p);
    CHECK(is_realizer(p, r.witness));
    CHECK(r.witness.size() == r.dimension);
    CHECK(r.dimension == oracle::brute_force_dimension(p));

    SolverOptions all_pairs;
    all_pairs.critical_pairs_only = false;
    CHECK(exact_dimension(p, all_pairs).dimension == r.dimension);

    SolverOptions threaded;
    threaded.threads = 3;
    const auto t = exact_dimension(p, threaded);
    CHECK(t.dimension == r.dimension);
    CHECK(t.witness == r.witness);

    CHECK(embedding_reproduces(p, embed(p, r.witness)));
  }
}

TEST_CASE("dimension is monotone under induced sub-posets") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Poset p = random_poset(8, 0.3, rng);
    const std::size_t d = exact_dimension(p).dimension;
    std::vector<Id> subset;
    for (const auto& id : p.ids())
      if (rng() % 3) subset.push_back(id);
    if (subset.empty()) continue;
    CHECK(exact_dimension(induced_subposet(p, subset)).dimension <= d);
  }
}

TEST_CASE("every ordered incomparable pair is placed by some witness order") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Poset p = random_poset(7, 0.3, rng);
    const auto r = exact_dimension(p);
    for (const auto& [x, y] : ordered_incomparable_pairs(p)) {
      bool placed = false;
      for (const auto& order : r.witness.orders) {
        const auto rank = order.ranks_in(p);
        placed = placed || rank[x] < rank[y];
      }
      CHECK(placed);
    }
  }
}

}  // TEST_SUITE
