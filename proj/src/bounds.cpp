#include "posetdim/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace posetdim {
namespace {

void require_parts(std::uint64_t m) {
  if (m < 2) throw Error(ErrorKind::TooSmall, "need m >= 2, got " + std::to_string(m));
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Looks up L_{i,j} and checks it against P_{i,j}.
const Realizer& checked_pair_realizer(const MultipartitePoset& mp, const PairRealizers& realizers, std::size_t i,
                                      std::size_t j) {
  auto it = realizers.find({i, j});
  if (it == realizers.end())
    throw Error(ErrorKind::NotABipartiteRealizer, "no realizer supplied for pair " + pair_name(i, j));
  const Poset sub = mp.bipartite_subposet(i, j).poset;
  bool ok = false;
  try {
    ok = is_realizer(sub, it->second);
  } catch (const Error&) {
    ok = false;
  }
  if (!ok)
    throw Error(ErrorKind::NotABipartiteRealizer, "orders for pair " + pair_name(i, j) + " do not realize P_{i,j}");
  return it->second;
}

PairDimension solve_pair(const MultipartitePoset& mp, std::size_t i, std::size_t j, const BOptions& options) {
  PairDimension row;
  row.i = i;
  row.j = j;
  const Poset sub = mp.bipartite_subposet(i, j).poset;
  if (options.mode == BMode::Exact && sub.size() <= options.exact_size_cap) {
    SolverOptions solver;
    solver.node_limit = options.exact_node_limit;
    try {
      auto result = exact_dimension(sub, solver);
      row.dimension = result.dimension;
      row.realizer = std::move(result.witness);
      row.exact = true;
      return row;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchLimit) throw;
    }
  }
  row.realizer = greedy_realizer(sub);
  row.dimension = row.realizer.size();
  row.exact = false;
  return row;
}

}  // namespace

PairRealizers BValue::realizers() const {
  PairRealizers out;
  for (const auto& row : table) out.emplace(std::pair{row.i, row.j}, row.realizer);
  return out;
}

BValue compute_B(const MultipartitePoset& mp, const BOptions& options) {
  const std::size_t m = mp.part_count();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

  BValue out;
  out.table.resize(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < pairs.size();)
      out.table[t] = solve_pair(mp, pairs[t].first, pairs[t].second, options);
  };
  const unsigned threads = std::clamp<unsigned>(options.threads, 1, static_cast<unsigned>(pairs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  for (const auto& row : out.table) {
    out.value = std::max(out.value, row.dimension);
    out.is_exact = out.is_exact && row.exact;
  }
  return out;
}

Realizer sum_bound_realizer(const MultipartitePoset& mp, const PairRealizers& realizers) {
  const std::size_t m = mp.part_count();
  Realizer out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (const auto& order : checked_pair_realizer(mp, realizers, i, j).orders)
        out.orders.push_back(extend_linear_order(mp.underlying(), order));
  return out;
}

Realizer theorem_bound_realizer(const MultipartitePoset& mp, const PairRealizers& realizers) {
  const std::size_t m = mp.part_count();
  std::map<std::pair<std::size_t, std::size_t>, const Realizer*> table;
  std::size_t b = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Realizer& r = checked_pair_realizer(mp, realizers, i, j);
      table[{i, j}] = &r;
      b = std::max(b, r.size());
    }
  // Pairs with fewer than b orders repeat their last one.
  auto order_at = [&](std::size_t i, std::size_t j, std::size_t t) -> const LinearOrder& {
    const auto& orders = table.at({i, j})->orders;
    return orders[std::min(t, orders.size() - 1)];
  };

  Realizer out;
  const std::size_t chained_span = (m + 1) / 2;
  // A pair (i, j) spans k = j - i + 1 consecutive parts.
  for (std::size_t k = 2; k <= m; ++k) {
    if (k <= chained_span) {
      // Pairs with equal i mod k cover disjoint runs of parts, ordered bottom
      // to top, so their orders stack into one extension.
      for (std::size_t residue = 0; residue < k; ++residue) {
        std::vector<std::size_t> starts;
        for (std::size_t i = residue; i + k - 1 < m; i += k) starts.push_back(i);
        if (starts.empty()) continue;
        for (std::size_t t = 0; t < b; ++t) {
          std::vector<LinearOrder> stack;
          for (std::size_t i : starts) stack.push_back(order_at(i, i + k - 1, t));
          out.orders.push_back(extend_linear_order(mp.underlying(), concat(stack)));
        }
      }
    } else {
      for (std::size_t i = 0; i + k - 1 < m; ++i)
        for (std::size_t t = 0; t < b; ++t)
          out.orders.push_back(extend_linear_order(mp.underlying(), order_at(i, i + k - 1, t)));
    }
  }
  return out;
}

std::uint64_t theorem_bound_coefficient(std::uint64_t m) {
  require_parts(m);
  return (m - 1) * (m + 3) / 4;
}

std::uint64_t chain_count_sum(std::uint64_t m) {
  require_parts(m);
  const std::uint64_t half = (m + 1) / 2;
  std::uint64_t total = 0;
  for (std::uint64_t k = 2; k <= half; ++k) total += k;
  for (std::uint64_t t = 1; t <= m - half; ++t) total += t;
  return total;
}

FmEnvelope fm_envelope(std::uint64_t m) {
  require_parts(m);
  return FmEnvelope{m, m * m / 4, theorem_bound_coefficient(m)};
}

std::uint64_t remark_incomparable_count(std::uint64_t m) {
  require_parts(m);
  const std::uint64_t mid = (m + 1) / 2;
  std::uint64_t count = 0;
  std::uint64_t max_left = 0;
  std::uint64_t min_right = m + 1;
  for (std::uint64_t i = 1; i <= m; ++i)
    for (std::uint64_t j = i + 1; j <= m; ++j) {
      if (i > mid || j < mid) continue;
      ++count;
      max_left = std::max(max_left, i);
      min_right = std::min(min_right, j);
    }
  // Intervals are pairwise incomparable in the interval order exactly when
  // every left end is at most every right end.
  if (count > 1 && max_left > min_right)
    throw Error(ErrorKind::Internal, "2-sets through ceil(m/2) are not pairwise incomparable");
  return count;
}

BoundReport make_bound_report(const MultipartitePoset& mp, const ReportOptions& options) {
  BoundReport report;
  report.m = mp.part_count();
  report.b = compute_B(mp, options.b);
  const auto realizers = report.b.realizers();
  for (const auto& row : report.b.table) report.sum_bound += row.dimension;
  report.theorem_coefficient = theorem_bound_coefficient(report.m);
  report.theorem_bound = report.theorem_coefficient * report.b.value;
  report.pairwise_bound = report.m * (report.m - 1) / 2 * report.b.value;
  report.witness = theorem_bound_realizer(mp, realizers);
  report.sum_realizer_size = sum_bound_realizer(mp, realizers).size();
  if (!is_realizer(mp.underlying(), report.witness))
    throw Error(ErrorKind::Internal, "chained construction failed to realize the poset");

  if (mp.underlying().size() <= options.exact_dim_cap) {
    SolverOptions solver;
    solver.node_limit = options.exact_node_limit;
    solver.threads = options.b.threads;
    try {
      report.exact_dim = exact_dimension(mp.underlying(), solver).dimension;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchLimit) throw;
    }
  }
  report.envelope = fm_envelope(report.m);
  return report;
}

}  // namespace posetdim
