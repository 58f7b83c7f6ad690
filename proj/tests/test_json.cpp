#include <random>

#include "posetdim/constructions.hpp"
#include "posetdim/json_io.hpp"
#include "posetdim/random.hpp"
#include "test_support.hpp"

using posetdim::Error;
using posetdim::ErrorKind;
using posetdim::LinearOrder;
using posetdim::Matching;
using posetdim::Poset;
using posetdim::Realizer;
using posetdim::complete_minus_matching;
using posetdim::make_bound_report;
using posetdim::random_poset;
using posetdim::stacked_standard;
using posetdim::standard_example;
namespace testing = posetdim::testing;
namespace io = posetdim::json;
using nlohmann::json;

TEST_SUITE("json") {

TEST_CASE("parse a poset document") {
  const auto doc = io::parse_poset(std::string(R"({"elements":["a","b","c"],"relations":[["a","b"],["b","c"]]})"));
  CHECK(doc.poset == testing::chain_abc());
  CHECK_FALSE(doc.parts.has_value());
  CHECK_ERROR_KIND(io::require_multipartite(doc), ErrorKind::MissingParts);
}

TEST_CASE("malformed documents") {
  CHECK_ERROR_KIND(io::parse_poset(std::string("{not json")), ErrorKind::ParseError);
  CHECK_ERROR_KIND(io::parse_poset(std::string(R"({"relations":[]})")), ErrorKind::ParseError);
  CHECK_ERROR_KIND(io::parse_poset(std::string(R"({"elements":["a"],"relations":[["a"]]})")), ErrorKind::ParseError);
  CHECK_ERROR_KIND(io::parse_poset(std::string(R"({"elements":[1,2]})")), ErrorKind::ParseError);
  CHECK_ERROR_KIND(io::parse_poset(std::string(R"({"elements":["a","b"],"relations":[["a","b"],["b","a"]]})")),
                   ErrorKind::CycleDetected);
  CHECK_ERROR_KIND(io::parse_realizer(json::parse(R"({"orders":"a"})")), ErrorKind::ParseError);
}

TEST_CASE("realizer round trip") {
  const Realizer r{{LinearOrder{"a", "b"}, LinearOrder{"b", "a"}}};
  const json doc = io::to_json(r);
  CHECK(doc == json::parse(R"({"orders":[["a","b"],["b","a"]]})"));
  CHECK(io::parse_realizer(doc) == r);
}

TEST_CASE("multipartite documents keep their parts") {
  const auto mp = stacked_standard(3);
  const auto back = io::require_multipartite(io::parse_poset(io::to_json(mp).dump()));
  CHECK(back.parts() == mp.parts());
  CHECK(back.underlying() == mp.underlying());

  const auto bp = complete_minus_matching(3, 4, Matching{{{1, 2}}});
  const auto doc = io::parse_poset(io::to_json(bp));
  REQUIRE(doc.parts.has_value());
  CHECK(doc.parts->at(0) == bp.lower);
  CHECK(doc.parts->at(1) == bp.upper);
  CHECK(doc.poset == bp.poset);
}

TEST_CASE("serialization is closure-stable on random posets") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = random_poset(1 + trial % 12, 0.4, rng);
    const std::string text = io::to_json(p).dump();
    CHECK(io::parse_poset(text).poset == p);
    CHECK(io::to_json(io::parse_poset(text).poset).dump() == text);
  }
}

TEST_CASE("report keys") {
  const json r = io::to_json(make_bound_report(standard_example(3)));
  for (const char* key : {"m", "B", "is_exact", "pairs", "sum_bound", "sum_realizer_size", "theorem_coefficient",
                          "theorem_bound", "pairwise_bound", "witness_size", "witness", "fm_envelope", "exact_dim"})
    CHECK_MESSAGE(r.contains(key), key);
  CHECK(r["pairs"][0]["i"] == 1);
  CHECK(r["pairs"][0]["j"] == 2);
  CHECK(r["exact_dim"] == 3);
}

}  // TEST_SUITE
