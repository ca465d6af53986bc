// Orderly backtracking over isometric embeddings L -> Z^m.
//
// Rows are placed in vertex order. While row i is built, columns that agree
// on rows 0..i-1 are interchangeable ("tied"), and columns that are still
// zero may also be negated. Requiring tied columns to take non-increasing
// values, and still-zero columns to take nonnegative ones, admits exactly
// the matrices whose columns are sign-normalised and sorted in descending
// lexicographic order, i.e. exactly one canonical_form() per orbit.

#include "ratball/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace ratball::lattice {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t kMaxSearchNorm = std::int64_t{1} << 14;
constexpr std::size_t kMaxAmbient = 512;

std::int32_t isqrt(std::int32_t n) {
  std::int32_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void require_positive_definite(const GramLattice& l) {
  const IntMatrix& g = l.gram();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (g(i, i) < 1) throw usage_error("embedding search needs positive diagonal entries");
    if (g(i, i) > kMaxSearchNorm) {
      throw usage_error("vertex norm " + std::to_string(g(i, i)) + " exceeds the search limit " +
                        std::to_string(kMaxSearchNorm));
    }
  }
  for (std::size_t k = 1; k <= l.rank(); ++k) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(i, j);
    if (determinant(minor) <= 0) throw usage_error("lattice is not positive definite");
  }
}

struct Shared {
  const IntMatrix* gram = nullptr;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t lanes = 0;
  const simd::KernelTable* kernels = nullptr;
  SearchLimits limits;
  Clock::time_point start;
  /// k x lanes, row i holds G(i, r) for r < i and zero elsewhere.
  std::vector<std::int32_t> targets;
  /// k x lanes, full Gram rows.
  std::vector<std::int32_t> gram_rows;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
};

class Worker {
 public:
  /// Unwinds the search when a budget is exhausted.
  struct Halt {};

  explicit Worker(Shared& shared)
      : sh_(shared),
        cols_(sh_.m * sh_.lanes, 0),
        suffix_((sh_.m + 1) * sh_.lanes, 0),
        partial_(sh_.k * sh_.lanes, 0),
        tie_((sh_.k + 1) * sh_.m, 0),
        fresh_((sh_.k + 1) * sh_.m, 1),
        rows_(sh_.k * sh_.m, 0) {
    for (std::size_t j = 1; j < sh_.m; ++j) tie_[j] = 1;
  }

  /// Full search from the empty matrix.
  void run() {
    check_clock();
    descend(0);
  }

  /// Stops at depth `depth` and records the placed rows as tasks.
  void collect(std::size_t depth, std::vector<std::vector<std::int32_t>>& tasks) {
    check_clock();
    collect_depth_ = depth;
    tasks_ = &tasks;
    descend(0);
    tasks_ = nullptr;
  }

  /// Replays the rows of a collected task without counting them, then
  /// searches beneath.
  void run_task(const std::vector<std::int32_t>& task) {
    check_clock();
    const std::size_t depth = task.size() / sh_.m;
    for (std::size_t i = 0; i < depth; ++i) {
      std::copy_n(task.begin() + static_cast<std::ptrdiff_t>(i * sh_.m), sh_.m,
                  rows_.begin() + static_cast<std::ptrdiff_t>(i * sh_.m));
      place(i, false);
    }
    descend(depth);
  }

  SearchStats stats;
  std::set<EmbeddingMatrix> found;

 private:
  std::int32_t* row(std::size_t i) { return rows_.data() + i * sh_.m; }
  std::int32_t* col(std::size_t j) { return cols_.data() + j * sh_.lanes; }
  std::int32_t* partial(std::size_t i) { return partial_.data() + i * sh_.lanes; }
  const std::int32_t* target(std::size_t i) const { return sh_.targets.data() + i * sh_.lanes; }

  void check_clock() {
    if (sh_.stop.load(std::memory_order_relaxed)) throw Halt{};
    if (Clock::now() - sh_.start > sh_.limits.time_budget) {
      sh_.stop = true;
      throw Halt{};
    }
  }

  void descend(std::size_t i) {
    if (i == sh_.k) {
      leaf();
      return;
    }
    if (tasks_ != nullptr && i == collect_depth_) {
      tasks_->emplace_back(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(i * sh_.m));
      return;
    }
    extend(i, 0, static_cast<std::int32_t>((*sh_.gram)(i, i)));
  }

  void extend(std::size_t i, std::size_t j, std::int32_t rem) {
    if ((++stats.steps & 0xFFF) == 0) check_clock();
    const simd::KernelTable& kt = *sh_.kernels;
    std::int32_t* x = row(i);
    const std::uint8_t* tie = tie_.data() + i * sh_.m;
    const std::uint8_t* fresh = fresh_.data() + i * sh_.m;

    if (rem == 0) {
      // Remaining coordinates are zero; a zero after a negative tied entry
      // would break the ordering.
      if (j < sh_.m && j > 0 && tie[j] && x[j - 1] < 0) return;
      if (!kt.within_reach(target(i), partial(i), suffix_.data(), 0, sh_.lanes)) return;
      place(i, true);
      descend(i + 1);
      unplace(i);
      return;
    }
    if (j == sh_.m) return;
    if (!kt.within_reach(target(i), partial(i), suffix_.data() + j * sh_.lanes, rem, sh_.lanes)) {
      return;
    }
    std::int32_t hi = isqrt(rem);
    const std::int32_t lo = fresh[j] ? 0 : -hi;
    if (j > 0 && tie[j]) hi = std::min(hi, x[j - 1]);
    // Still-zero columns form a tied trailing block: once one of them is
    // forced to zero, so are the rest, and rem > 0 can never be spent.
    if (fresh[j] && hi <= 0) return;

    for (std::int32_t v = hi; v >= lo; --v) {
      x[j] = v;
      if (v != 0 && !fresh[j]) kt.axpy(partial(i), v, col(j), sh_.lanes);
      extend(i, j + 1, rem - v * v);
      if (v != 0 && !fresh[j]) kt.axpy(partial(i), -v, col(j), sh_.lanes);
    }
    x[j] = 0;
  }

  void place(std::size_t i, bool count) {
    if (count) {
      ++stats.nodes;
      const std::uint64_t total = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
      if (total > sh_.limits.node_budget) {
        sh_.stop = true;
        throw Halt{};
      }
      if ((stats.nodes & 0x3FF) == 0) check_clock();
    }
    const std::int32_t* x = row(i);
    const std::size_t m = sh_.m;
    const std::size_t lanes = sh_.lanes;
    std::int32_t running = 0;
    for (std::size_t j = m; j-- > 0;) {
      cols_[j * lanes + i] = x[j];
      running += x[j] * x[j];
      suffix_[j * lanes + i] = running;
    }
    const std::uint8_t* tie = tie_.data() + i * m;
    const std::uint8_t* fresh = fresh_.data() + i * m;
    std::uint8_t* next_tie = tie_.data() + (i + 1) * m;
    std::uint8_t* next_fresh = fresh_.data() + (i + 1) * m;
    for (std::size_t j = 0; j < m; ++j) {
      next_tie[j] = j > 0 && tie[j] && x[j] == x[j - 1];
      next_fresh[j] = fresh[j] && x[j] == 0;
    }
  }

  void unplace(std::size_t i) {
    for (std::size_t j = 0; j <= sh_.m; ++j) {
      if (j < sh_.m) cols_[j * sh_.lanes + i] = 0;
      suffix_[j * sh_.lanes + i] = 0;
    }
  }

  void leaf() {
    ++stats.leaves;
    const std::size_t k = sh_.k;
    const std::size_t m = sh_.m;
    const simd::KernelTable& kt = *sh_.kernels;
    // A A^T == G, one Gram row at a time.
    std::vector<std::int32_t> acc(sh_.lanes);
    for (std::size_t r = 0; r < k; ++r) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t j = 0; j < m; ++j) {
        if (rows_[r * m + j] != 0) kt.axpy(acc.data(), rows_[r * m + j], col(j), sh_.lanes);
      }
      if (!kt.within_reach(sh_.gram_rows.data() + r * sh_.lanes, acc.data(), acc.data(), 0,
                           sh_.lanes)) {
        throw internal_error("embedding search produced a non-isometric leaf");
      }
    }
    EmbeddingMatrix a(k, m);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t j = 0; j < m; ++j) a(r, j) = rows_[r * m + j];
    EmbeddingMatrix canon = canonical_form(a);
    if (canon != a) ++stats.noncanonical_leaves;
    found.insert(std::move(canon));
  }

  Shared& sh_;
  std::vector<std::int32_t> cols_;
  std::vector<std::int32_t> suffix_;
  std::vector<std::int32_t> partial_;
  std::vector<std::uint8_t> tie_;
  std::vector<std::uint8_t> fresh_;
  std::vector<std::int32_t> rows_;
  std::size_t collect_depth_ = 0;
  std::vector<std::vector<std::int32_t>>* tasks_ = nullptr;
};

class SearchDriver {
 public:
  SearchDriver(const GramLattice& l, std::size_t m, const SearchLimits& limits) {
    sh_.gram = &l.gram();
    sh_.k = l.rank();
    sh_.m = m;
    sh_.lanes = simd::padded(sh_.k);
    sh_.kernels = &simd::kernels(limits.isa);
    sh_.limits = limits;
    sh_.targets.assign(sh_.k * sh_.lanes, 0);
    sh_.gram_rows.assign(sh_.k * sh_.lanes, 0);
    for (std::size_t i = 0; i < sh_.k; ++i) {
      for (std::size_t r = 0; r < sh_.k; ++r) {
        const auto v = static_cast<std::int32_t>(l.gram()(i, r));
        sh_.gram_rows[i * sh_.lanes + r] = v;
        if (r < i) sh_.targets[i * sh_.lanes + r] = v;
      }
    }
  }

  EnumerationResult run() {
    sh_.start = Clock::now();
    std::set<EmbeddingMatrix> found;
    SearchStats stats;
    bool halted = false;

    auto absorb = [&](Worker& w) {
      stats.nodes += w.stats.nodes;
      stats.steps += w.stats.steps;
      stats.leaves += w.stats.leaves;
      stats.noncanonical_leaves += w.stats.noncanonical_leaves;
      found.merge(w.found);
    };

    const unsigned threads = std::max(1u, sh_.limits.threads);
    if (threads == 1 || sh_.k < 2) {
      Worker w(sh_);
      try {
        w.run();
      } catch (const Worker::Halt&) {
        halted = true;
      }
      absorb(w);
    } else {
      std::vector<std::vector<std::int32_t>> tasks;
      Worker seed(sh_);
      try {
        seed.collect(std::min<std::size_t>(sh_.k - 1, 2), tasks);
      } catch (const Worker::Halt&) {
        halted = true;
      }
      absorb(seed);

      std::atomic<std::size_t> next{0};
      std::mutex merge_mutex;
      std::exception_ptr failure;
      auto body = [&] {
        try {
          for (std::size_t t; !halted && (t = next.fetch_add(1)) < tasks.size();) {
            Worker task_worker(sh_);
            task_worker.run_task(tasks[t]);
            std::lock_guard lock(merge_mutex);
            absorb(task_worker);
          }
        } catch (const Worker::Halt&) {
        } catch (...) {
          std::lock_guard lock(merge_mutex);
          if (!failure) failure = std::current_exception();
          sh_.stop = true;
        }
      };
      if (!halted) {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body);
      }
      if (failure) std::rethrow_exception(failure);
      halted = halted || sh_.stop.load();
    }

    stats.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - sh_.start);
    stats.complete = !halted;
    if (halted) {
      const bool out_of_nodes = sh_.nodes.load() > sh_.limits.node_budget;
      throw search_limit_error(
          out_of_nodes ? "embedding search exceeded the node budget of " +
                             std::to_string(sh_.limits.node_budget)
                       : "embedding search exceeded the time budget of " +
                             std::to_string(sh_.limits.time_budget.count()) + " ms",
          stats);
    }

    EnumerationResult result;
    result.stats = stats;
    for (const EmbeddingMatrix& a : found) result.classes.push_back({a});
    return result;
  }

 private:
  Shared sh_;
};

}  // namespace

EnumerationResult enumerate_embedding_classes(const GramLattice& l, std::size_t m,
                                              const SearchLimits& limits) {
  if (m < 1) throw usage_error("ambient rank must be at least 1");
  if (m > kMaxAmbient) throw usage_error("ambient rank " + std::to_string(m) + " is too large");
  require_positive_definite(l);
  return SearchDriver(l, m, limits).run();
}

}  // namespace ratball::lattice
