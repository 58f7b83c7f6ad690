#include "posetdim/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <set>
#include <thread>

namespace posetdim {
namespace {

using Word = BitMatrix::Word;
using Pair = std::pair<std::size_t, std::size_t>;
constexpr std::size_t kWordBits = BitMatrix::kWordBits;

bool subset_of(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

// One partial assignment: `open` of the `d` color classes are in use. Class c
// keeps the transitive closure of the strict order plus every pair assigned to
// it, so an ordered pair (x, y) fits class c iff y does not already reach x.
struct Node {
  std::size_t open = 0;
  std::vector<Word> reach;
};

class CoverSearch {
public:
  CoverSearch(const Poset& p, const std::vector<Pair>& items, std::size_t d)
      : n_(p.size()), words_(p.strict_up().words_per_row()), d_(d), items_(items) {
    root_.reach.resize(d_ * n_ * words_);
    for (std::size_t c = 0; c < d_; ++c)
      for (std::size_t u = 0; u < n_; ++u) {
        auto src = p.strict_up().row(u);
        std::copy(src.begin(), src.end(), row(root_, c, u));
      }
  }

  const Node& root() const noexcept { return root_; }

  enum class Step { Solved, Dead, Branch };

  // Picks the uncovered pair with the fewest admissible classes and emits one
  // child per admissible class, at most one of them a freshly opened class.
  Step expand(const Node& node, std::vector<Node>& kids) const {
    std::size_t best = items_.size();
    std::size_t best_options = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const auto [x, y] = items_[i];
      bool covered = false;
      std::size_t options = 0;
      for (std::size_t c = 0; c < node.open && !covered; ++c) {
        if (test(node, c, x, y)) covered = true;
        else if (!test(node, c, y, x)) ++options;
      }
      if (covered) continue;
      if (node.open < d_) ++options;
      if (options == 0) return Step::Dead;
      if (options < best_options) {
        best_options = options;
        best = i;
      }
    }
    if (best == items_.size()) return Step::Solved;

    const auto [x, y] = items_[best];
    kids.clear();
    for (std::size_t c = 0; c < node.open; ++c) {
      if (test(node, c, y, x)) continue;
      kids.push_back(node);
      add_edge(kids.back(), c, x, y);
    }
    if (node.open < d_) {
      kids.push_back(node);
      add_edge(kids.back(), kids.back().open++, x, y);
    }
    return Step::Branch;
  }

  template <class Stop>
  bool dfs(const Node& node, Node& solution, std::uint64_t& nodes, const Stop& stop) const {
    ++nodes;
    if (stop()) return false;
    std::vector<Node> kids;
    switch (expand(node, kids)) {
      case Step::Solved: solution = node; return true;
      case Step::Dead: return false;
      case Step::Branch: break;
    }
    for (const auto& kid : kids)
      if (dfs(kid, solution, nodes, stop)) return true;
    return false;
  }

  // Class c of a solved node as a strict-successor matrix.
  BitMatrix class_relation(const Node& node, std::size_t c) const {
    BitMatrix m(n_);
    for (std::size_t u = 0; u < n_; ++u) {
      const Word* r = crow(node, c, u);
      std::copy(r, r + words_, m.row(u).begin());
    }
    return m;
  }

private:
  Word* row(Node& node, std::size_t c, std::size_t u) const {
    return node.reach.data() + (c * n_ + u) * words_;
  }
  const Word* crow(const Node& node, std::size_t c, std::size_t u) const {
    return node.reach.data() + (c * n_ + u) * words_;
  }
  bool test(const Node& node, std::size_t c, std::size_t u, std::size_t v) const {
    return (crow(node, c, u)[v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  // Adds x -> y to class c and restores transitivity. The caller guarantees
  // y does not reach x, so row x is unchanged by the update and may be read
  // while other rows are written.
  void add_edge(Node& node, std::size_t c, std::size_t x, std::size_t y) const {
    const Word* ry = crow(node, c, y);
    const Word ybit = Word{1} << (y % kWordBits);
    for (std::size_t u = 0; u < n_; ++u) {
      if (u != x && !test(node, c, u, x)) continue;
      Word* ru = row(node, c, u);
      for (std::size_t w = 0; w < words_; ++w) ru[w] |= ry[w];
      ru[y / kWordBits] |= ybit;
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::size_t d_;
  const std::vector<Pair>& items_;
  Node root_;
};

// Two ordered pairs conflict when no single linear extension can place both
// lower elements below their partners: y <= u and v <= x closes a cycle.
bool conflict(const Poset& p, Pair a, Pair b) {
  return p.leq(a.second, b.first) && p.leq(b.second, a.first);
}

std::vector<std::size_t> greedy_conflict_clique(const Poset& p, const std::vector<Pair>& items) {
  const std::size_t count = items.size();
  if (count == 0) return {};
  const std::size_t words = (count + kWordBits - 1) / kWordBits;
  std::vector<Word> adj(count * words, 0);
  std::vector<std::size_t> degree(count, 0);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if (conflict(p, items[a], items[b])) {
        adj[a * words + b / kWordBits] |= Word{1} << (b % kWordBits);
        adj[b * words + a / kWordBits] |= Word{1} << (a % kWordBits);
        ++degree[a];
        ++degree[b];
      }

  std::vector<std::size_t> by_degree(count);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  std::vector<std::size_t> best{0};
  std::vector<Word> cand(words);
  for (std::size_t seed : by_degree) {
    if (degree[seed] + 1 <= best.size()) break;
    std::vector<std::size_t> clique{seed};
    std::copy_n(adj.begin() + static_cast<std::ptrdiff_t>(seed * words), words, cand.begin());
    for (std::size_t v : by_degree) {
      if (!((cand[v / kWordBits] >> (v % kWordBits)) & 1U)) continue;
      clique.push_back(v);
      for (std::size_t w = 0; w < words; ++w) cand[w] &= adj[v * words + w];
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

struct Budget {
  std::optional<std::uint64_t> limit;
  bool exhausted = false;
};

std::optional<Node> solve_parallel(const CoverSearch& search, unsigned threads, std::uint64_t& nodes,
                                   Budget& budget) {
  // Unfold the top of the tree in depth-first order until there is enough work
  // to share. Tasks are then claimed in order, and a solution in task t cancels
  // only tasks after t, so the lowest-index solution is the sequential one.
  std::vector<Node> frontier{search.root()};
  std::vector<bool> solved{false};
  const std::size_t target = 8 * static_cast<std::size_t>(threads);
  for (int level = 0; level < 16 && frontier.size() < target; ++level) {
    std::vector<Node> next;
    std::vector<bool> next_solved;
    std::vector<Node> kids;
    bool grew = false;
    for (std::size_t t = 0; t < frontier.size(); ++t) {
      if (solved[t]) {
        next.push_back(std::move(frontier[t]));
        next_solved.push_back(true);
        continue;
      }
      ++nodes;
      switch (search.expand(frontier[t], kids)) {
        case CoverSearch::Step::Solved:
          next.push_back(std::move(frontier[t]));
          next_solved.push_back(true);
          break;
        case CoverSearch::Step::Dead: grew = true; break;
        case CoverSearch::Step::Branch:
          grew = true;
          for (auto& kid : kids) {
            next.push_back(std::move(kid));
            next_solved.push_back(false);
          }
          break;
      }
    }
    frontier = std::move(next);
    solved = std::move(next_solved);
    if (!grew) break;
  }
  if (frontier.empty()) return std::nullopt;

  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> best_task{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> spent{nodes};
  std::atomic<bool> exhausted{false};
  std::vector<std::optional<Node>> results(frontier.size());

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= frontier.size() || t > best_task.load() || exhausted.load()) break;
      Node solution;
      std::uint64_t local = 0;
      auto stop = [&] {
        if (best_task.load(std::memory_order_relaxed) < t) return true;
        if (budget.limit && spent.load(std::memory_order_relaxed) + local > *budget.limit) {
          exhausted = true;
          return true;
        }
        return false;
      };
      const bool found = search.dfs(frontier[t], solution, local, stop);
      spent += local;
      if (found) {
        results[t] = std::move(solution);
        std::size_t cur = best_task.load();
        while (t < cur && !best_task.compare_exchange_weak(cur, t)) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  pool.clear();
  nodes = spent.load();
  if (exhausted) {
    budget.exhausted = true;
    return std::nullopt;
  }

  for (auto& r : results)
    if (r) return std::move(r);
  return std::nullopt;
}

std::optional<Node> solve(const CoverSearch& search, unsigned threads, std::uint64_t& nodes, Budget& budget) {
  if (threads > 1) return solve_parallel(search, threads, nodes, budget);
  Node solution;
  auto stop = [&] {
    if (budget.limit && nodes > *budget.limit) budget.exhausted = true;
    return budget.exhausted;
  };
  if (search.dfs(search.root(), solution, nodes, stop)) return solution;
  return std::nullopt;
}

}  // namespace

std::vector<Pair> ordered_incomparable_pairs(const Poset& p) {
  std::vector<Pair> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (x != y && p.incomparable(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<Pair> critical_pairs(const Poset& p) {
  std::vector<Pair> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (x != y && p.incomparable(x, y) && subset_of(p.strict_down().row(y), p.strict_down().row(x)) &&
          subset_of(p.strict_up().row(x), p.strict_up().row(y)))
        out.emplace_back(x, y);
  return out;
}

std::optional<RealizerViolation> find_realizer_violation(const Poset& p, const Realizer& r) {
  using Kind = RealizerViolation::Kind;
  if (r.orders.empty()) return RealizerViolation{Kind::Empty, {}, {}, 0};
  std::vector<std::vector<std::size_t>> ranks;
  ranks.reserve(r.size());
  for (const auto& order : r.orders) ranks.push_back(order.ranks_in(p));

  for (std::size_t o = 0; o < ranks.size(); ++o)
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.less(x, y) && ranks[o][x] > ranks[o][y])
          return RealizerViolation{Kind::NotExtension, p.id(x), p.id(y), o};

  for (const auto& [x, y] : ordered_incomparable_pairs(p)) {
    bool placed = std::any_of(ranks.begin(), ranks.end(), [&](const auto& rk) { return rk[x] < rk[y]; });
    if (!placed) return RealizerViolation{Kind::NeverReversed, p.id(y), p.id(x), 0};
  }
  return std::nullopt;
}

bool is_realizer(const Poset& p, const Realizer& r) { return !find_realizer_violation(p, r); }

void canonicalize(Realizer& r) { std::sort(r.orders.begin(), r.orders.end()); }

DimensionResult exact_dimension(const Poset& p, const SolverOptions& options) {
  if (p.empty()) throw Error(ErrorKind::EmptyPoset, "dimension of the empty poset is undefined");
  if (options.max_d && *options.max_d == 0) throw Error(ErrorKind::BadParameters, "max_d must be at least 1");

  const std::vector<Pair> items = options.critical_pairs_only ? critical_pairs(p) : ordered_incomparable_pairs(p);

  Certificate cert;
  cert.pairs_to_cover = items.size();
  std::size_t lower = items.empty() ? 1 : 2;
  if (options.clique_lower_bound && !items.empty()) {
    auto clique = greedy_conflict_clique(p, items);
    lower = std::max(lower, clique.size());
    for (std::size_t i : clique) cert.lower_bound_clique.emplace_back(p.id(items[i].first), p.id(items[i].second));
  }
  cert.lower_bound = lower;

  const std::size_t cap = options.max_d.value_or(std::max<std::size_t>(p.size(), 1));
  const unsigned threads = std::max(1U, options.threads);
  Budget budget{options.node_limit};
  for (std::size_t d = lower; d <= cap; ++d) {
    cert.max_d_probed = d;
    CoverSearch search(p, items, d);
    auto solution = solve(search, threads, cert.nodes_explored, budget);
    if (budget.exhausted)
      throw Error(ErrorKind::SearchLimit, "gave up after " + std::to_string(cert.nodes_explored) +
                                              " nodes while probing d=" + std::to_string(d));
    if (!solution) continue;

    DimensionResult result;
    result.dimension = d;
    for (std::size_t c = 0; c < solution->open; ++c) {
      std::vector<Id> seq;
      for (std::size_t x : canonical_topological_order(search.class_relation(*solution, c))) seq.push_back(p.id(x));
      result.witness.orders.emplace_back(std::move(seq));
    }
    if (result.witness.orders.empty()) {
      std::vector<Id> seq;
      for (std::size_t x : canonical_topological_order(p.strict_up())) seq.push_back(p.id(x));
      result.witness.orders.emplace_back(std::move(seq));
    }
    while (result.witness.size() < d) result.witness.orders.push_back(result.witness.orders.back());
    canonicalize(result.witness);
    cert.dimension = d;
    result.certificate = std::move(cert);
    return result;
  }
  cert.max_d_probed = std::max(cert.max_d_probed, std::min(cap, lower));
  throw CapExceeded(std::move(cert));
}

Realizer greedy_realizer(const Poset& p) {
  if (p.empty()) throw Error(ErrorKind::EmptyPoset, "no realizer for the empty poset");
  const auto items = ordered_incomparable_pairs(p);
  std::vector<bool> covered(items.size(), false);
  Realizer r;
  for (;;) {
    BitMatrix reach = p.strict_up();
    bool any = false;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (covered[i]) continue;
      const auto [x, y] = items[i];
      if (reach.test(y, x) || reach.test(x, y)) continue;
      any = true;
      for (std::size_t u = 0; u < p.size(); ++u)
        if (u == x || reach.test(u, x)) {
          reach.or_row(u, y);
          reach.set(u, y);
        }
    }
    if (!any && !r.orders.empty()) break;
    std::vector<Id> seq;
    const auto topo = canonical_topological_order(reach);
    std::vector<std::size_t> rank(p.size());
    for (std::size_t k = 0; k < topo.size(); ++k) {
      rank[topo[k]] = k;
      seq.push_back(p.id(topo[k]));
    }
    r.orders.emplace_back(std::move(seq));
    for (std::size_t i = 0; i < items.size(); ++i)
      if (rank[items[i].first] < rank[items[i].second]) covered[i] = true;
    if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) break;
  }
  return r;
}

Embedding embed(const Poset& p, const Realizer& r) {
  if (auto v = find_realizer_violation(p, r))
    throw Error(ErrorKind::NotARealizer, "cannot embed with orders that do not realize the poset");
  Embedding out;
  std::vector<std::vector<std::size_t>> ranks;
  for (const auto& order : r.orders) ranks.push_back(order.ranks_in(p));
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::vector<std::size_t> coords;
    coords.reserve(ranks.size());
    for (const auto& rk : ranks) coords.push_back(rk[x]);
    out.emplace(p.id(x), std::move(coords));
  }
  return out;
}

bool embedding_reproduces(const Poset& p, const Embedding& embedding) {
  std::vector<const std::vector<std::size_t>*> point(p.size(), nullptr);
  for (std::size_t x = 0; x < p.size(); ++x) {
    auto it = embedding.find(p.id(x));
    if (it == embedding.end()) return false;
    point[x] = &it->second;
  }
  std::set<std::vector<std::size_t>> distinct;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!distinct.insert(*point[x]).second) return false;
    for (std::size_t y = 0; y < p.size(); ++y) {
      const auto& a = *point[x];
      const auto& b = *point[y];
      if (a.size() != b.size()) return false;
      bool dominated = true;
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) dominated = false;
      if (dominated != p.leq(x, y)) return false;
    }
  }
  return true;
}

}  // namespace posetdim
