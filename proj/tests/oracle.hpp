#pragma once

// Brute-force dimension oracle for small posets. It shares nothing with the
// solver beyond Poset::leq: it enumerates every linear extension, records which
// ordered incomparable pairs each one puts in order, and searches exhaustively
// for the fewest extensions that together do so for all pairs. The last
// extension of a candidate cover is found by an acyclicity test instead of a scan.

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "posetdim/poset.hpp"

namespace posetdim::oracle {

inline std::vector<std::vector<std::size_t>> all_linear_extensions(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&] {
    if (prefix.size() == n) {
      out.push_back(prefix);
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool minimal = true;
      for (std::size_t y = 0; y < n && minimal; ++y)
        if (!used[y] && y != x && p.leq(y, x)) minimal = false;
      if (!minimal) continue;
      used[x] = true;
      prefix.push_back(x);
      rec();
      prefix.pop_back();
      used[x] = false;
    }
  };
  rec();
  return out;
}

using PairMask = std::bitset<128>;

inline std::size_t brute_force_dimension(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw std::invalid_argument("empty poset");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && !p.leq(x, y) && !p.leq(y, x)) pairs.emplace_back(x, y);
  if (pairs.empty()) return 1;
  if (pairs.size() > 128) throw std::invalid_argument("oracle handles at most 128 ordered pairs");
  if (n > 64) throw std::invalid_argument("oracle handles at most 64 elements");

  std::vector<PairMask> masks;
  for (const auto& ext : all_linear_extensions(p)) {
    std::vector<std::size_t> pos(n);
    for (std::size_t r = 0; r < n; ++r) pos[ext[r]] = r;
    PairMask mask;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pos[pairs[i].first] < pos[pairs[i].second]) mask.set(i);
    masks.push_back(mask);
  }
  // One extension puts every pair of `wanted` in order iff the strict order plus
  // those pairs is acyclic.
  std::vector<std::uint64_t> base_pred(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && p.leq(x, y)) base_pred[y] |= std::uint64_t{1} << x;
  auto one_extension_suffices = [&](const PairMask& wanted) {
    std::array<std::uint64_t, 64> pred{};
    std::copy(base_pred.begin(), base_pred.end(), pred.begin());
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (wanted.test(i)) pred[pairs[i].second] |= std::uint64_t{1} << pairs[i].first;
    std::uint64_t left = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    bool progress = true;
    while (left && progress) {
      progress = false;
      for (std::size_t x = 0; x < n; ++x)
        if ((left >> x & 1) && (pred[x] & left) == 0) {
          left &= ~(std::uint64_t{1} << x);
          progress = true;
        }
    }
    return left == 0;
  };
  std::vector<std::vector<std::size_t>> containing(pairs.size());
  for (std::size_t k = 0; k < masks.size(); ++k)
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (masks[k].test(i)) containing[i].push_back(k);
  PairMask all;
  for (std::size_t i = 0; i < pairs.size(); ++i) all.set(i);

  std::function<bool(const PairMask&, std::size_t)> cover = [&](const PairMask& covered, std::size_t left) {
    std::size_t first = pairs.size();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (!covered.test(i)) {
        first = i;
        break;
      }
    if (first == pairs.size()) return true;
    if (left == 0) return false;
    if (left == 1) return one_extension_suffices(all & ~covered);
    for (std::size_t k : containing[first])
      if (cover(covered | masks[k], left - 1)) return true;
    return false;
  };
  for (std::size_t d = 1;; ++d)
    if (cover(PairMask{}, d)) return d;
}

}  // namespace posetdim::oracle
