#include "posetdim/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace posetdim {
namespace {

std::size_t digits(std::size_t n) {
  std::size_t w = 1;
  while (n >= 10) {
    n /= 10;
    ++w;
  }
  return w;
}

std::string pad(std::size_t i, std::size_t width) {
  std::string s = std::to_string(i);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

void require_at_least(std::string_view what, std::size_t value, std::size_t minimum) {
  if (value < minimum)
    throw Error(ErrorKind::TooSmall, std::string(what) + " must be at least " + std::to_string(minimum) +
                                         ", got " + std::to_string(value));
}

// All size-r subsets of {1..n} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(r);
  std::iota(cur.begin(), cur.end(), 1);
  for (;;) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Id subset_id(char side, const std::vector<std::size_t>& s, std::size_t width) {
  std::string id(1, side);
  id += '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) id += ',';
    id += pad(s[i], width);
  }
  id += '}';
  return id;
}

}  // namespace

Id indexed_id(std::string_view prefix, std::size_t i, std::size_t width) {
  return std::string(prefix) + pad(i, width);
}

Id indexed_id(std::string_view prefix, std::size_t i, std::size_t j, std::size_t width) {
  return std::string(prefix) + pad(i, width) + "_" + pad(j, width);
}

void Matching::validate(std::size_t h, std::size_t k) const {
  std::vector<bool> row(h + 1, false);
  std::vector<bool> col(k + 1, false);
  for (const auto& [r, c] : pairs) {
    if (r < 1 || r > h || c < 1 || c > k)
      throw Error(ErrorKind::BadMatching, "pair (" + std::to_string(r) + "," + std::to_string(c) +
                                              ") outside [" + std::to_string(h) + "]x[" + std::to_string(k) + "]");
    if (row[r]) throw Error(ErrorKind::BadMatching, "row " + std::to_string(r) + " matched twice");
    if (col[c]) throw Error(ErrorKind::BadMatching, "column " + std::to_string(c) + " matched twice");
    row[r] = col[c] = true;
  }
}

Matching random_matching(std::size_t h, std::size_t k, std::size_t g, std::mt19937_64& rng) {
  if (g > std::min(h, k))
    throw Error(ErrorKind::BadMatching, "matching of size " + std::to_string(g) + " does not fit [" +
                                            std::to_string(h) + "]x[" + std::to_string(k) + "]");
  std::vector<std::size_t> rows(h);
  std::vector<std::size_t> cols(k);
  std::iota(rows.begin(), rows.end(), 1);
  std::iota(cols.begin(), cols.end(), 1);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  Matching m;
  for (std::size_t t = 0; t < g; ++t) m.pairs.emplace_back(rows[t], cols[t]);
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

MultipartitePoset standard_example(std::size_t n) {
  require_at_least("n", n, 2);
  const std::size_t w = digits(n);
  std::vector<Id> a;
  std::vector<Id> b;
  for (std::size_t i = 1; i <= n; ++i) {
    a.push_back(indexed_id("a", i, w));
    b.push_back(indexed_id("b", i, w));
  }
  std::vector<IdPair> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) rel.emplace_back(a[i], b[j]);
  return MultipartitePoset::create({a, b}, rel);
}

MultipartitePoset stacked_standard(std::size_t n) {
  require_at_least("n", n, 2);
  const std::size_t w = digits(n);
  std::vector<Id> a;
  std::vector<Id> b;
  std::vector<Id> c;
  std::vector<IdPair> rel;
  for (std::size_t i = 1; i <= n; ++i) {
    a.push_back(indexed_id("a", i, w));
    b.push_back(indexed_id("b", i, w));
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      c.push_back(indexed_id("c", i, j, w));
      rel.emplace_back(a[i - 1], c.back());
      rel.emplace_back(c.back(), b[j - 1]);
    }
  return MultipartitePoset::create({a, c, b}, rel);
}

BipartitePoset complete_minus_matching(std::size_t h, std::size_t k, const Matching& m) {
  require_at_least("h", h, 2);
  require_at_least("k", k, 2);
  m.validate(h, k);
  const std::size_t w = digits(std::max(h, k));
  std::vector<Id> xs;
  std::vector<Id> ys;
  for (std::size_t i = 1; i <= h; ++i) xs.push_back(indexed_id("x", i, w));
  for (std::size_t j = 1; j <= k; ++j) ys.push_back(indexed_id("y", j, w));
  std::vector<IdPair> rel;
  for (std::size_t i = 1; i <= h; ++i)
    for (std::size_t j = 1; j <= k; ++j)
      if (std::find(m.pairs.begin(), m.pairs.end(), std::pair{i, j}) == m.pairs.end())
        rel.emplace_back(xs[i - 1], ys[j - 1]);
  std::vector<Id> all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  return BipartitePoset{xs, ys, Poset::from_relations(std::move(all), rel)};
}

Realizer complete_minus_matching_realizer(std::size_t h, std::size_t k, const Matching& m) {
  require_at_least("h", h, 2);
  require_at_least("k", k, 2);
  m.validate(h, k);
  const std::size_t g = m.size();
  if (g == 0) throw Error(ErrorKind::BadMatching, "the explicit realizer needs a nonempty matching");

  // Relabel so the matching becomes the diagonal {(1,1), ..., (g,g)}:
  // row_of[t] / col_of[t] give the original index of canonical index t.
  auto sorted = m.pairs;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> row_of{0};
  std::vector<std::size_t> col_of{0};
  for (const auto& [r, c] : sorted) {
    row_of.push_back(r);
    col_of.push_back(c);
  }
  for (std::size_t r = 1; r <= h; ++r)
    if (std::find(row_of.begin() + 1, row_of.end(), r) == row_of.end()) row_of.push_back(r);
  for (std::size_t c = 1; c <= k; ++c)
    if (std::find(col_of.begin() + 1, col_of.end(), c) == col_of.end()) col_of.push_back(c);

  const std::size_t w = digits(std::max(h, k));
  auto x = [&](std::size_t t) { return indexed_id("x", row_of[t], w); };
  auto y = [&](std::size_t t) { return indexed_id("y", col_of[t], w); };

  // Base orders 1, 3, 4, ..., size, 2 over canonical indices.
  auto base = [](std::size_t size, auto name) {
    std::vector<Id> seq{name(1)};
    for (std::size_t t = 3; t <= size; ++t) seq.push_back(name(t));
    seq.push_back(name(2));
    return LinearOrder(std::move(seq));
  };
  const LinearOrder lx = base(h, x);
  const LinearOrder ly = base(k, y);
  auto pivot = [&](std::size_t t) { return LinearOrder{y(t), x(t)}; };

  Realizer r;
  {
    const LinearOrder parts[] = {reverse(erase(lx, x(1))), pivot(1), erase(ly, y(1))};
    r.orders.push_back(concat(parts));
  }
  if (g == 1) {
    const LinearOrder parts[] = {LinearOrder{x(1)}, erase(lx, x(1)), reverse(erase(ly, y(1))), LinearOrder{y(1)}};
    r.orders.push_back(concat(parts));
  }
  for (std::size_t l = 2; l <= g; ++l) {
    const LinearOrder parts[] = {erase(lx, x(l)), pivot(l), reverse(erase(ly, y(l)))};
    r.orders.push_back(concat(parts));
  }

  if (!is_realizer(complete_minus_matching(h, k, m).poset, r))
    throw Error(ErrorKind::Internal, "constructed orders fail to realize C_{-g}(h,k)");
  return r;
}

MultipartitePoset lower_bound_family(std::size_t d, std::size_t h, std::size_t k, bool allow_unit_block) {
  require_at_least("d", d, allow_unit_block ? 1 : 2);
  require_at_least("h", h, 2);
  require_at_least("k", k, 2);
  const std::size_t rows = d * h;
  const std::size_t cols = d * k;
  const std::size_t w = digits(std::max(rows, cols));

  std::vector<std::vector<Id>> parts(h + k);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) {
      parts[(i - 1) / d].push_back(indexed_id("x", i, j, w));
      parts[h + (j - 1) / d].push_back(indexed_id("y", i, j, w));
    }

  std::vector<IdPair> rel;
  rel.reserve(rows * cols * rows * cols);
  for (std::size_t i1 = 1; i1 <= rows; ++i1)
    for (std::size_t j1 = 1; j1 <= cols; ++j1)
      for (std::size_t i2 = 1; i2 <= rows; ++i2)
        for (std::size_t j2 = 1; j2 <= cols; ++j2)
          if (i1 != i2 || j1 != j2) rel.emplace_back(indexed_id("x", i1, j1, w), indexed_id("y", i2, j2, w));
  return MultipartitePoset::create(std::move(parts), rel);
}

BipartitePoset subset_poset(std::size_t k1, std::size_t k2, std::size_t n) {
  if (!(k1 < k2 && k2 <= n))
    throw Error(ErrorKind::BadParameters, "need 0 <= k1 < k2 <= n, got k1=" + std::to_string(k1) +
                                              " k2=" + std::to_string(k2) + " n=" + std::to_string(n));
  const std::size_t w = digits(n);
  const auto low = combinations(n, k1);
  const auto high = combinations(n, k2);
  std::vector<Id> lower;
  std::vector<Id> upper;
  for (const auto& s : low) lower.push_back(subset_id('L', s, w));
  for (const auto& t : high) upper.push_back(subset_id('U', t, w));

  std::vector<IdPair> rel;
  for (std::size_t a = 0; a < low.size(); ++a)
    for (std::size_t b = 0; b < high.size(); ++b)
      if (std::includes(high[b].begin(), high[b].end(), low[a].begin(), low[a].end()))
        rel.emplace_back(lower[a], upper[b]);
  std::vector<Id> all = lower;
  all.insert(all.end(), upper.begin(), upper.end());
  return BipartitePoset{lower, upper, Poset::from_relations(std::move(all), rel)};
}

}  // namespace posetdim
