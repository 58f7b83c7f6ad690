#include "posetdim/random.hpp"

#include <algorithm>
#include <numeric>

#include "posetdim/constructions.hpp"

namespace posetdim {

Poset random_poset(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<Id> ids;
  const std::size_t width = std::to_string(std::max<std::size_t>(n, 1)).size();
  for (std::size_t i = 1; i <= n; ++i) ids.push_back(indexed_id("e", i, width));
  std::vector<std::size_t> hidden(n);
  std::iota(hidden.begin(), hidden.end(), 0);
  std::shuffle(hidden.begin(), hidden.end(), rng);

  std::bernoulli_distribution coin(density);
  std::vector<IdPair> rel;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) rel.emplace_back(ids[hidden[a]], ids[hidden[b]]);
  return Poset::from_relations(ids, rel);
}

MultipartitePoset random_multipartite(std::size_t m, std::size_t max_part_size, double density,
                                      std::mt19937_64& rng) {
  if (max_part_size == 0) throw Error(ErrorKind::BadParameters, "parts need at least one element");
  std::uniform_int_distribution<std::size_t> part_size(1, max_part_size);
  std::bernoulli_distribution coin(density);
  const std::size_t width = std::to_string(std::max(m, max_part_size)).size();

  std::vector<std::vector<Id>> parts(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t s = part_size(rng);
    for (std::size_t e = 1; e <= s; ++e) parts[i].push_back(indexed_id("p", i + 1, e, width));
  }
  std::vector<IdPair> rel;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (const auto& lo : parts[i])
        for (const auto& hi : parts[j])
          if (coin(rng)) rel.emplace_back(lo, hi);
  return MultipartitePoset::create(std::move(parts), rel);
}

}  // namespace posetdim
