#pragma once

#include <cstddef>
#include <random>

#include "posetdim/multipartite.hpp"

namespace posetdim {

/// Random poset on n elements e1..en: a hidden random linear order is drawn
/// and each pair that agrees with it becomes a generating relation with
/// probability `density`.
Poset random_poset(std::size_t n, double density, std::mt19937_64& rng);

/// Random m-partite poset with part sizes uniform in [1, max_part_size]; each
/// pair from parts i < j becomes a generating relation with probability `density`.
MultipartitePoset random_multipartite(std::size_t m, std::size_t max_part_size, double density,
                                      std::mt19937_64& rng);

}  // namespace posetdim
