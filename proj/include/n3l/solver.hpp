#pragma once

/**
 * @file solver.hpp
 * @brief Exact maximum, maximum-count and full profile of no-three-in-line
 * placements, i.e. independent sets of the 3-uniform hypergraph of
 * forbidden triples.
 *
 * The search is a depth-first branch and bound over points in index order.
 * A node holds the chosen points and the candidate set (points above the
 * last choice not excluded by any chosen pair). Two bounds prune it:
 *
 *  - class bound: the lines of one direction are disjoint and each holds at
 *    most two chosen points, so per parallel class the candidates of a line
 *    contribute at most its remaining capacity;
 *  - star bound: the lines through a chosen point each hold at most one more
 *    chosen point.
 *
 * Work is split into tasks by the first two chosen points. Aggregation over
 * tasks is by max and sum in task order, so the results do not depend on
 * the number of threads.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "n3l/bits.hpp"
#include "n3l/checker.hpp"
#include "n3l/constraints.hpp"

namespace n3l {

struct SolveOptions {
  bool count_all = false;
  std::optional<std::chrono::duration<double>> time_limit;
  int threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::chrono::duration<double> elapsed{0};
  int threads = 1;
};

struct SolveResult {
  int T = 0;
  Placement witness;
  std::optional<std::uint64_t> count_max;
  /// Tori only: maximum placements counted up to translation.
  std::optional<std::uint64_t> count_classes;
  SearchStats stats;
};

struct PlacementProfile {
  std::vector<std::uint64_t> counts;  // counts[d] = number of valid d-point placements
  int T = 0;
  std::uint64_t solutions_at_max = 0;
};

/// Raised when a time limit expires. Carries what was proven so far:
/// lower <= T <= upper, and the best placement found.
class TimeoutError : public Error {
 public:
  TimeoutError(int lower, int upper, std::optional<Placement> best)
      : Error("time limit exceeded: " + std::to_string(lower) + " <= T <= " + std::to_string(upper)),
        lower_(lower),
        upper_(upper),
        best_(std::move(best)) {}

  [[nodiscard]] int lower() const { return lower_; }
  [[nodiscard]] int upper() const { return upper_; }
  [[nodiscard]] const std::optional<Placement>& best() const { return best_; }

 private:
  int lower_;
  int upper_;
  std::optional<Placement> best_;
};

/// Certified upper bound on T for a torus: the best of the parallel-class
/// bound (at most two points per coset), and, when every pair of points lies
/// on a line, the star bound lambda + 1, lowered by one when it is odd and
/// the lines form a linear space (a parity argument through an empty point).
inline int upper_bound(const LineSystem& sys) {
  const auto& g = sys.geometry();
  if (!g.is_torus()) throw UnsupportedGeometry("upper_bound is defined on tori only");
  const int n = g.size();
  int best = n;

  for (auto d : liftable_directions(g)) {
    int ord = detail::element_order(g, d);
    best = std::min(best, (n / ord) * std::min(ord, 2));
  }

  // Lines through each point and pair coverage.
  std::vector<int> through(static_cast<std::size_t>(n), 0);
  for (const auto& l : sys.lines())
    for (auto p : l.points) ++through[static_cast<std::size_t>(g.index(p))];
  std::vector<int> pair_lines(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (std::size_t li = 0; li < sys.lines().size(); ++li) {
    const auto& idx = sys.line_indices(li);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        ++pair_lines[static_cast<std::size_t>(idx[i]) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(idx[j])];
  }
  bool covered = n >= 3;
  bool linear = true;
  for (int i = 0; i < n && covered; ++i)
    for (int j = i + 1; j < n; ++j) {
      int c = pair_lines[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
      if (c == 0) {
        covered = false;
        break;
      }
      if (c > 1) linear = false;
    }
  if (covered) {
    const int lambda = *std::min_element(through.begin(), through.end());
    const bool uniform = *std::max_element(through.begin(), through.end()) == lambda;
    int star = lambda + 1;
    // If star points were placed, every line through a placed point would
    // meet the placement twice; the lines through any unplaced point would
    // then pair up the placement, forcing an even size.
    if (linear && uniform && star % 2 == 1 && star < n) star -= 1;
    best = std::min(best, star);
  }
  return best;
}

namespace detail {

template <std::size_t W>
class Engine {
 public:
  using Set = Bits<W>;
  static constexpr int kMaxDepth = 64 * static_cast<int>(W);

  explicit Engine(const LineSystem& sys) : n_(sys.size()) {
    const auto nn = static_cast<std::size_t>(n_);
    const auto& g = sys.geometry();
    if (g.is_torus()) {
      shift_.resize(nn * nn);
      for (int t = 0; t < n_; ++t)
        for (int i = 0; i < n_; ++i) {
          Point a = g.point(t), b = g.point(i);
          shift_[static_cast<std::size_t>(t) * nn + static_cast<std::size_t>(i)] = g.index(g.wrap(a.x + b.x, a.y + b.y));
        }
      negate_.resize(nn);
      for (int i = 0; i < n_; ++i) {
        Point a = g.point(i);
        negate_[static_cast<std::size_t>(i)] = g.index(g.wrap(-a.x, -a.y));
      }
    }
    excl_.resize(nn * nn);
    for (int p = 0; p < n_; ++p)
      for (int q = 0; q < n_; ++q) {
        const auto* row = sys.exclusion_row(p, q);
        auto& dst = excl_[static_cast<std::size_t>(p) * nn + static_cast<std::size_t>(q)];
        for (std::size_t w = 0; w < W && w < sys.words(); ++w) dst.words[w] = row[w];
      }

    const auto& lines = sys.lines();
    std::map<Direction, std::vector<Set>> by_direction;
    stars_.resize(nn);
    star_union_.resize(nn);
    for (std::size_t li = 0; li < lines.size(); ++li) {
      Set mask;
      for (int i : sys.line_indices(li)) mask.set(static_cast<std::size_t>(i));
      by_direction[lines[li].direction].push_back(mask);
      for (int i : sys.line_indices(li)) {
        stars_[static_cast<std::size_t>(i)].push_back(mask);
        star_union_[static_cast<std::size_t>(i)] |= mask;
      }
    }
    for (auto& [dir, cells] : by_direction) {
      int cap = n_;
      for (const auto& c : cells) cap -= c.count() - 2;
      if (cap < n_) classes_.push_back({cap, std::move(cells)});
    }
    std::stable_sort(classes_.begin(), classes_.end(),
                     [](const Class& a, const Class& b) { return a.static_bound < b.static_bound; });
    if (classes_.size() > kMaxClasses) classes_.resize(kMaxClasses);
  }

  [[nodiscard]] int size() const { return n_; }

  [[nodiscard]] const Set& excl(int p, int q) const {
    return excl_[static_cast<std::size_t>(p) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(q)];
  }

  struct Node {
    std::array<int, 64 * W> chosen{};
    int k = 0;
    Set chosen_mask;
    Set cand;
  };

  /// Node with prefix (i) or (i, j); cand = points above the prefix.
  [[nodiscard]] Node root(std::initializer_list<int> prefix) const {
    Node nd;
    int last = -1;
    for (int v : prefix) {
      nd.chosen[static_cast<std::size_t>(nd.k++)] = v;
      nd.chosen_mask.set(static_cast<std::size_t>(v));
      last = v;
    }
    nd.cand = Set::from(static_cast<std::size_t>(last + 1), static_cast<std::size_t>(n_));
    for (int a = 0; a < nd.k; ++a)
      for (int b = a + 1; b < nd.k; ++b)
        nd.cand.subtract(excl(nd.chosen[static_cast<std::size_t>(a)], nd.chosen[static_cast<std::size_t>(b)]));
    return nd;
  }

  /// Upper bound on the size of any completion of the node, or a value <=
  /// target as soon as one bound proves it.
  [[nodiscard]] int bound(const Node& nd, int target) const {
    const int c = nd.cand.count();
    int best = nd.k + c;
    if (best <= target) return best;
    for (const auto& cls : classes_) {
      int excess = 0;
      for (const auto& cell : cls.cells) {
        int x = count_and(nd.cand, cell);
        if (x == 0) continue;
        int cap = 2 - count_and(nd.chosen_mask, cell);
        if (x > cap) excess += x - cap;
      }
      best = std::min(best, nd.k + c - excess);
      if (best <= target) return best;
    }
    if (nd.k > 0) {
      best = std::min(best, star(nd, nd.chosen[0], c));
      if (best <= target) return best;
      if (nd.k > 1) best = std::min(best, star(nd, nd.chosen[static_cast<std::size_t>(nd.k - 1)], c));
    }
    return best;
  }

  [[nodiscard]] bool has_translations() const { return !shift_.empty(); }

  /// Number of torus translations fixing the chosen set.
  [[nodiscard]] int stabilizer(const Node& nd) const {
    const auto nn = static_cast<std::size_t>(n_);
    const int base = negate_[static_cast<std::size_t>(nd.chosen[0])];
    int s = 0;
    for (int i = 0; i < nd.k; ++i) {
      // t maps chosen[0] onto chosen[i].
      const int t = shift_[static_cast<std::size_t>(base) * nn + static_cast<std::size_t>(nd.chosen[static_cast<std::size_t>(i)])];
      bool fixed = true;
      for (int j = 0; j < nd.k && fixed; ++j)
        fixed = nd.chosen_mask.test(static_cast<std::size_t>(
            shift_[static_cast<std::size_t>(t) * nn + static_cast<std::size_t>(nd.chosen[static_cast<std::size_t>(j)])]));
      if (fixed) ++s;
    }
    return s;
  }

  [[nodiscard]] Node child(const Node& nd, int v, const Set& rest) const {
    Node ch;
    ch.chosen = nd.chosen;
    ch.k = nd.k;
    ch.chosen[static_cast<std::size_t>(ch.k++)] = v;
    ch.chosen_mask = nd.chosen_mask;
    ch.chosen_mask.set(static_cast<std::size_t>(v));
    ch.cand = rest;
    for (int a = 0; a < nd.k; ++a) ch.cand.subtract(excl(v, nd.chosen[static_cast<std::size_t>(a)]));
    return ch;
  }

 private:
  static constexpr std::size_t kMaxClasses = 16;

  struct Class {
    int static_bound;
    std::vector<Set> cells;
  };

  [[nodiscard]] int star(const Node& nd, int p, int c) const {
    const auto& lines = stars_[static_cast<std::size_t>(p)];
    int b = nd.k + c - count_and(nd.cand, star_union_[static_cast<std::size_t>(p)]);
    for (const auto& l : lines)
      if (intersects(nd.cand, l)) ++b;
    return b;
  }

  int n_;
  std::vector<Set> excl_;
  std::vector<Class> classes_;
  std::vector<std::vector<Set>> stars_;
  std::vector<Set> star_union_;
  std::vector<int> shift_;   // shift_[t * n + i] = index of point(i) + point(t)
  std::vector<int> negate_;
};

/// Per-worker search with private counters. Shares only the stop flag and
/// (in maximize mode) the incumbent size.
template <std::size_t W>
class Worker {
 public:
  using E = Engine<W>;
  using Node = typename E::Node;

  Worker(const E& e, std::atomic<bool>& stop, std::optional<std::chrono::steady_clock::time_point> deadline)
      : e_(e), stop_(stop), deadline_(deadline) {}

  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;

  // --- maximize ---------------------------------------------------------
  struct MaxState {
    std::atomic<int>* best;
    int local_best = 0;
    std::vector<int> local_witness;
  };

  void maximize(Node nd, MaxState& st) {
    if (tick()) return;
    if (nd.k > st.local_best) {
      st.local_best = nd.k;
      st.local_witness.assign(nd.chosen.begin(), nd.chosen.begin() + nd.k);
      int cur = st.best->load();
      while (nd.k > cur && !st.best->compare_exchange_weak(cur, nd.k)) {
      }
    }
    while (nd.cand.any()) {
      int target = st.best->load(std::memory_order_relaxed);
      if (e_.bound(nd, target) <= target) {
        ++pruned;
        return;
      }
      int v = nd.cand.lowest();
      nd.cand.reset(static_cast<std::size_t>(v));
      maximize(e_.child(nd, v, nd.cand), st);
      if (stop_.load(std::memory_order_relaxed)) return;
    }
  }

  // --- enumerate placements of exactly `target` points --------------------
  struct CountState {
    int target;
    bool first_only;
    std::uint64_t count = 0;
    std::uint64_t stabilizer_sum = 0;
    std::vector<int> first;
  };

  void enumerate(Node nd, CountState& st) {
    if (tick()) return;
    if (nd.k == st.target) {
      if (st.count++ == 0) st.first.assign(nd.chosen.begin(), nd.chosen.begin() + nd.k);
      if (!st.first_only && e_.has_translations()) st.stabilizer_sum += static_cast<std::uint64_t>(e_.stabilizer(nd));
      return;
    }
    while (nd.cand.any()) {
      if (e_.bound(nd, st.target - 1) < st.target) {
        ++pruned;
        return;
      }
      int v = nd.cand.lowest();
      nd.cand.reset(static_cast<std::size_t>(v));
      enumerate(e_.child(nd, v, nd.cand), st);
      if (stop_.load(std::memory_order_relaxed)) return;
      if (st.first_only && st.count > 0) return;
    }
  }

  // --- count every independent set by size ---------------------------------
  void profile(Node nd, std::vector<std::uint64_t>& counts) {
    if (tick()) return;
    ++counts[static_cast<std::size_t>(nd.k)];
    while (nd.cand.any()) {
      int v = nd.cand.lowest();
      nd.cand.reset(static_cast<std::size_t>(v));
      profile(e_.child(nd, v, nd.cand), counts);
      if (stop_.load(std::memory_order_relaxed)) return;
    }
  }

 private:
  /// Counts the node; true when the search must stop.
  bool tick() {
    ++nodes;
    if ((nodes & 0x3FF) == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_)
      stop_.store(true);
    return stop_.load(std::memory_order_relaxed);
  }

  const E& e_;
  std::atomic<bool>& stop_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

/// Runs body(task, worker) for task in [0, count) on `threads` workers; tasks
/// are handed out in increasing order.
template <std::size_t W, typename Body>
void run_tasks(const Engine<W>& e, std::size_t count, int threads, std::atomic<bool>& stop,
               std::optional<std::chrono::steady_clock::time_point> deadline, SearchStats& stats,
               Body&& body) {
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto work = [&] {
    Worker<W> w(e, stop, deadline);
    for (std::size_t t = next++; t < count && !stop.load(); t = next++) body(t, w);
    std::lock_guard lock(mu);
    stats.nodes += w.nodes;
    stats.pruned += w.pruned;
  };
  const int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
}

inline std::vector<std::pair<int, int>> pair_prefixes(int n, bool anchor_origin) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < (anchor_origin ? 1 : n); ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

template <std::size_t W>
SolveResult solve_with(const LineSystem& sys, const SolveOptions& opts) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (opts.time_limit)
    deadline = start + std::chrono::duration_cast<Clock::duration>(*opts.time_limit);

  const auto& g = sys.geometry();
  const int n = sys.size();
  SearchStats stats;
  stats.threads = std::max(1, opts.threads);

  if (n <= 2) {
    std::vector<int> all;
    for (int i = 0; i < n; ++i) all.push_back(i);
    stats.nodes = 1;
    stats.elapsed = Clock::now() - start;
    std::optional<std::uint64_t> cnt;
    if (opts.count_all) cnt = 1;
    return {n, Placement::from_indices(g, all), cnt, g.is_torus() ? cnt : std::nullopt, stats};
  }

  Engine<W> engine(sys);
  std::atomic<bool> stop{false};

  // Phase 1: the maximum. Translations act transitively on a torus, so some
  // maximum placement contains the origin and only prefixes (0, j) are needed.
  const auto max_tasks = pair_prefixes(n, g.is_torus());
  std::atomic<int> best{2};
  std::vector<int> task_best(max_tasks.size(), -1);
  std::vector<std::vector<int>> task_witness(max_tasks.size());
  run_tasks<W>(engine, max_tasks.size(), opts.threads, stop, deadline, stats,
               [&](std::size_t t, Worker<W>& w) {
                 typename Worker<W>::MaxState st{&best, 0, {}};
                 w.maximize(engine.root({max_tasks[t].first, max_tasks[t].second}), st);
                 if (!stop.load()) task_best[t] = st.local_best;
                 task_witness[t] = std::move(st.local_witness);
               });

  auto timeout = [&]() -> TimeoutError {
    int lower = 2;
    std::optional<Placement> witness = Placement::from_indices(g, {0, 1});
    for (std::size_t t = 0; t < max_tasks.size(); ++t)
      if (static_cast<int>(task_witness[t].size()) > lower) {
        lower = static_cast<int>(task_witness[t].size());
        witness = Placement::from_indices(g, task_witness[t]);
      }
    int upper = lower;
    for (std::size_t t = 0; t < max_tasks.size(); ++t)
      if (task_best[t] < 0)
        upper = std::max(upper, engine.bound(engine.root({max_tasks[t].first, max_tasks[t].second}), n));
    if (g.is_torus()) upper = std::min(upper, upper_bound(sys));
    return {lower, std::max(upper, lower), std::move(witness)};
  };
  if (stop.load()) throw timeout();

  const int T = best.load();

  // Phase 2: enumerate placements of size T from every prefix, in
  // lexicographic order; the first task with a hit holds the least witness.
  const auto cnt_tasks = pair_prefixes(n, false);
  std::vector<std::uint64_t> counts(cnt_tasks.size(), 0);
  std::vector<std::uint64_t> stabilizers(cnt_tasks.size(), 0);
  std::vector<std::vector<int>> firsts(cnt_tasks.size());
  std::atomic<std::size_t> first_hit{cnt_tasks.size()};
  run_tasks<W>(engine, cnt_tasks.size(), opts.threads, stop, deadline, stats,
               [&](std::size_t t, Worker<W>& w) {
                 if (!opts.count_all && t > first_hit.load()) return;
                 typename Worker<W>::CountState st{T, !opts.count_all, 0, 0, {}};
                 w.enumerate(engine.root({cnt_tasks[t].first, cnt_tasks[t].second}), st);
                 counts[t] = st.count;
                 stabilizers[t] = st.stabilizer_sum;
                 firsts[t] = std::move(st.first);
                 if (st.count > 0) {
                   auto cur = first_hit.load();
                   while (t < cur && !first_hit.compare_exchange_weak(cur, t)) {
                   }
                 }
               });
  if (stop.load()) {
    auto e = timeout();
    throw TimeoutError(T, T, e.best());
  }

  SolveResult res{T, Placement::from_indices(g, {}), std::nullopt, std::nullopt, stats};
  std::uint64_t total = 0;
  std::uint64_t stab = 0;
  for (std::size_t t = 0; t < cnt_tasks.size(); ++t) {
    total += counts[t];
    stab += stabilizers[t];
    if (res.witness.size() == 0 && counts[t] > 0) res.witness = Placement::from_indices(g, firsts[t]);
  }
  if (opts.count_all) res.count_max = total;
  // Each orbit of size n / s contributes s / n per member.
  if (opts.count_all && g.is_torus()) res.count_classes = stab / static_cast<std::uint64_t>(n);
  res.stats = stats;
  res.stats.elapsed = Clock::now() - start;
  return res;
}

template <std::size_t W>
PlacementProfile profile_with(const LineSystem& sys, int threads) {
  const int n = sys.size();
  Engine<W> engine(sys);
  std::atomic<bool> stop{false};
  SearchStats stats;
  std::vector<std::vector<std::uint64_t>> per_task(static_cast<std::size_t>(n));
  run_tasks<W>(engine, static_cast<std::size_t>(n), threads, stop, std::nullopt, stats,
               [&](std::size_t t, Worker<W>& w) {
                 per_task[t].assign(static_cast<std::size_t>(n) + 1, 0);
                 w.profile(engine.root({static_cast<int>(t)}), per_task[t]);
               });
  PlacementProfile prof;
  prof.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  prof.counts[0] = 1;
  for (const auto& c : per_task)
    for (std::size_t d = 0; d < c.size(); ++d) prof.counts[d] += c[d];
  while (prof.counts.size() > 1 && prof.counts.back() == 0) prof.counts.pop_back();
  prof.T = static_cast<int>(prof.counts.size()) - 1;
  prof.solutions_at_max = prof.counts.back();
  return prof;
}

template <typename F>
decltype(auto) dispatch_words(int n, F&& f) {
  if (n <= 64) return f(std::integral_constant<std::size_t, 1>{});
  if (n <= 128) return f(std::integral_constant<std::size_t, 2>{});
  if (n <= 192) return f(std::integral_constant<std::size_t, 3>{});
  if (n <= 256) return f(std::integral_constant<std::size_t, 4>{});
  throw Refused("boards with more than 256 points are not supported by the solver");
}

}  // namespace detail

/// Exact T, a lexicographically least maximum placement, and optionally the
/// number of maximum placements.
inline SolveResult solve_max(const LineSystem& sys, const SolveOptions& opts = {}) {
  return detail::dispatch_words(sys.size(), [&](auto w) { return detail::solve_with<decltype(w)::value>(sys, opts); });
}

inline constexpr int kDefaultProfileGuard = 49;

/// Number of valid placements of every size.
inline PlacementProfile profile(const LineSystem& sys, std::optional<int> guard = std::nullopt, int threads = 1) {
  const int limit = guard.value_or(kDefaultProfileGuard);
  if (sys.size() > limit)
    throw Refused("profile of a " + std::to_string(sys.size()) + "-point board exceeds the guard of " +
                  std::to_string(limit) + " points");
  return detail::dispatch_words(sys.size(), [&](auto w) { return detail::profile_with<decltype(w)::value>(sys, threads); });
}

/// Exhaustive oracle for profile(): walks every subset, testing each added
/// point against every pair already present with geometry-level collinear().
inline PlacementProfile naive_profile(const LineSystem& sys) {
  const auto& g = sys.geometry();
  const int n = g.size();
  if (n > 25) throw Refused("naive_profile is limited to boards of at most 25 points");
  const auto nn = static_cast<std::size_t>(n);
  std::vector<char> col(nn * nn * nn, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        char v = collinear(g, g.point(a), g.point(b), g.point(c)) ? 1 : 0;
        col[(static_cast<std::size_t>(a) * nn + static_cast<std::size_t>(b)) * nn + static_cast<std::size_t>(c)] = v;
      }
  PlacementProfile prof;
  prof.counts.assign(nn + 1, 0);
  std::vector<int> cur;
  // Invalid sets only have invalid supersets, so a subset is skipped exactly
  // when it contains a collinear triple.
  auto rec = [&](auto&& self, int next) -> void {
    ++prof.counts[cur.size()];
    for (int r = next; r < n; ++r) {
      bool ok = true;
      for (std::size_t i = 0; i < cur.size() && ok; ++i)
        for (std::size_t j = i + 1; j < cur.size() && ok; ++j)
          ok = !col[(static_cast<std::size_t>(cur[i]) * nn + static_cast<std::size_t>(cur[j])) * nn +
                    static_cast<std::size_t>(r)];
      if (!ok) continue;
      cur.push_back(r);
      self(self, r + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  while (prof.counts.size() > 1 && prof.counts.back() == 0) prof.counts.pop_back();
  prof.T = static_cast<int>(prof.counts.size()) - 1;
  prof.solutions_at_max = prof.counts.back();
  return prof;
}

}  // namespace n3l
