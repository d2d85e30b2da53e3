#include "inflatable/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "inflatable/criteria.hpp"
#include "inflatable/error.hpp"

namespace inflatable {

// ---------------------------------------------------------------------------
// Enumeration

CentrallySymmetricEnumerator::CentrallySymmetricEnumerator(std::size_t n)
    : n_(n), values_(n, 0), used_(n + 1, false) {
  if (n == 0) throw PreconditionError("length must be >= 1");
  if (n % 2 == 1) {
    values_[n / 2] = static_cast<int>(n / 2 + 1);
    used_[n / 2 + 1] = true;
  }
}

// Fills positions depth..m-1 (and their mirrors) with the smallest available
// values, or advances the value at `depth` when it is already set.
bool CentrallySymmetricEnumerator::advance(std::size_t depth) {
  const std::size_t m = n_ / 2;
  if (depth == m) return true;
  const int top = static_cast<int>(n_) + 1;
  int start = values_[depth] + 1;
  if (values_[depth] != 0) {
    used_[values_[depth]] = used_[top - values_[depth]] = false;
    values_[depth] = values_[n_ - 1 - depth] = 0;
  }
  for (int v = start; v <= static_cast<int>(n_); ++v) {
    if (used_[v] || used_[top - v]) continue;
    values_[depth] = v;
    values_[n_ - 1 - depth] = top - v;
    used_[v] = used_[top - v] = true;
    if (advance(depth + 1)) return true;
    used_[v] = used_[top - v] = false;
    values_[depth] = values_[n_ - 1 - depth] = 0;
  }
  return false;
}

std::optional<Permutation> CentrallySymmetricEnumerator::next() {
  if (done_) return std::nullopt;
  const std::size_t m = n_ / 2;
  bool ok = false;
  if (!started_) {
    started_ = true;
    ok = advance(0);
  } else {
    // Odometer: bump the deepest position that still has a larger choice.
    for (std::size_t d = m; d-- > 0;) {
      // Clear everything below d, then try to advance d.
      for (std::size_t e = d + 1; e < m; ++e) {
        if (values_[e] != 0) {
          used_[values_[e]] = used_[n_ + 1 - values_[e]] = false;
          values_[e] = values_[n_ - 1 - e] = 0;
        }
      }
      if (advance(d)) {
        ok = true;
        break;
      }
    }
  }
  if (!ok) {
    done_ = true;
    return std::nullopt;
  }
  return Permutation(values_);
}

BigInt centrally_symmetric_count(std::size_t n) {
  const std::size_t m = n / 2;
  return (BigInt(1) << m) * factorial(m);
}

// ---------------------------------------------------------------------------
// Pruned search

namespace {

// Pattern index (Pattern3 order) of values x, y, z at increasing positions.
inline std::size_t classify(int x, int y, int z) {
  if (x < y) {
    if (y < z) return 0;  // 123
    return x < z ? 1 : 3;  // 132 : 231
  }
  if (x < z) return 2;     // 213
  return y < z ? 4 : 5;    // 312 : 321
}

struct Counters {
  std::array<std::uint64_t, 6> triples{};
  std::uint64_t ups = 0;    // 12
  std::uint64_t downs = 0;  // 21
};

// Placement order and value choices for one search mode.
//
// central: step d fills positions d and n-1-d with (v, n+1-v); for odd n the
//          center is pre-placed with (n+1)/2.
// full:    step d fills position d with any unused v.
// Trying values in ascending order visits leaves in lexicographic order.
class Layout {
 public:
  Layout(std::size_t n, bool central) : n_(n), central_(central) {
    depth_ = central ? n / 2 : n;
    leaves_below_.resize(depth_ + 1);
    for (std::size_t d = 0; d <= depth_; ++d) {
      const std::size_t rest = depth_ - d;
      leaves_below_[d] = central ? (BigInt(1) << rest) * factorial(rest)
                                 : factorial(rest);
    }
  }

  std::size_t n() const { return n_; }
  bool central() const { return central_; }
  std::size_t depth() const { return depth_; }
  const BigInt& leaves_below(std::size_t d) const { return leaves_below_[d]; }

 private:
  std::size_t n_;
  bool central_;
  std::size_t depth_;
  std::vector<BigInt> leaves_below_;
};

struct TaskHit {
  Permutation perm;
  std::vector<std::uint64_t> covered_before;  // histogram snapshot
};

struct TaskResult {
  std::vector<std::uint64_t> covered;  // covered[d]: finished nodes at depth d
  std::vector<TaskHit> hits;
  std::uint64_t nodes = 0;
  bool done = false;
};

class Worker {
 public:
  Worker(const Layout& layout, const PatternCounts3& targets,
         std::optional<std::uint64_t> limit, const std::atomic<bool>& stop)
      : layout_(layout), limit_(limit), stop_(stop) {
    for (std::size_t i = 0; i < 6; ++i) target_.triples[i] = targets.counts[i];
    target_.ups = targets.inv12;
    target_.downs = targets.inv21;
  }

  TaskResult run(std::span<const int> prefix) {
    const std::size_t n = layout_.n();
    values_.assign(n, 0);
    used_.assign(n + 2, false);
    placed_.clear();
    counters_ = Counters{};
    result_ = TaskResult{};
    result_.covered.assign(layout_.depth() + 1, 0);
    halted_ = false;
    stopped_ = false;

    if (layout_.central() && n % 2 == 1) {
      place(n / 2, static_cast<int>(n / 2 + 1));
    }
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      if (!step(d, prefix[d])) {
        ++result_.covered[prefix.size()];
        result_.done = true;
        return std::move(result_);
      }
    }
    descend(prefix.size());
    result_.done = !stopped_;
    return std::move(result_);
  }

 private:
  // Applies step d with first value v. Returns false when pruned (the state
  // is left for the caller to discard).
  bool step(std::size_t d, int v) {
    const int top = static_cast<int>(layout_.n()) + 1;
    if (used_[v]) return false;
    if (layout_.central()) {
      if (used_[top - v]) return false;
      return place(d, v) && place(layout_.n() - 1 - d, top - v);
    }
    return place(d, v);
  }

  bool place(std::size_t pos, int v) {
    const int p = static_cast<int>(pos);
    // placed_ is sorted by position.
    for (std::size_t a = 0; a < placed_.size(); ++a) {
      const int pa = placed_[a];
      const int va = values_[pa];
      if (pa < p ? va < v : v < va) {
        ++counters_.ups;
      } else {
        ++counters_.downs;
      }
      for (std::size_t b = a + 1; b < placed_.size(); ++b) {
        const int pb = placed_[b];
        const int vb = values_[pb];
        std::size_t idx;
        if (p < pa) {
          idx = classify(v, va, vb);
        } else if (p < pb) {
          idx = classify(va, v, vb);
        } else {
          idx = classify(va, vb, v);
        }
        ++counters_.triples[idx];
      }
    }
    values_[pos] = v;
    used_[v] = true;
    placed_.insert(std::upper_bound(placed_.begin(), placed_.end(), p), p);

    if (counters_.ups > target_.ups || counters_.downs > target_.downs) return false;
    for (std::size_t i = 0; i < 6; ++i) {
      if (counters_.triples[i] > target_.triples[i]) return false;
    }
    return true;
  }

  void unplace(std::size_t pos) {
    const int p = static_cast<int>(pos);
    used_[values_[pos]] = false;
    values_[pos] = 0;
    placed_.erase(std::lower_bound(placed_.begin(), placed_.end(), p));
  }

  void undo_step(std::size_t d, const Counters& saved) {
    const std::size_t n = layout_.n();
    if (layout_.central()) {
      if (values_[n - 1 - d] != 0) unplace(n - 1 - d);
    }
    if (values_[d] != 0) unplace(d);
    counters_ = saved;
  }

  void descend(std::size_t d) {
    ++result_.nodes;
    if ((result_.nodes & 0xFFF) == 0 && stop_.load(std::memory_order_relaxed)) {
      halted_ = stopped_ = true;
    }
    if (halted_) return;
    if (d == layout_.depth()) {
      if (counters_.triples == target_.triples && counters_.ups == target_.ups) {
        result_.hits.push_back({Permutation(values_), result_.covered});
      }
      ++result_.covered[d];
      if (limit_ && result_.hits.size() >= *limit_) halted_ = true;
      return;
    }
    const int top = static_cast<int>(layout_.n()) + 1;
    const int center = layout_.n() % 2 == 1 ? top / 2 : 0;
    for (int v = 1; v < top && !halted_; ++v) {
      if (used_[v]) continue;
      if (layout_.central() && (v == center || used_[top - v])) continue;
      const Counters saved = counters_;
      if (step(d, v)) {
        descend(d + 1);
      } else {
        ++result_.covered[d + 1];
      }
      undo_step(d, saved);
    }
  }

  const Layout& layout_;
  Counters target_;
  std::optional<std::uint64_t> limit_;
  const std::atomic<bool>& stop_;

  std::vector<int> values_;
  std::vector<bool> used_;
  std::vector<int> placed_;
  Counters counters_;
  TaskResult result_;
  bool halted_ = false;   // stop exploring this task
  bool stopped_ = false;  // halted by the global stop flag
};

// All value choices for the first `depth` steps, in lexicographic order.
std::vector<std::vector<int>> make_tasks(const Layout& layout, std::size_t depth) {
  const int top = static_cast<int>(layout.n()) + 1;
  const int center = layout.n() % 2 == 1 ? top / 2 : 0;
  std::vector<std::vector<int>> tasks;
  std::vector<int> prefix;
  std::vector<bool> used(top + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (prefix.size() == depth) {
      tasks.push_back(prefix);
      return;
    }
    for (int v = 1; v < top; ++v) {
      if (used[v]) continue;
      if (layout.central() && (v == center || used[top - v])) continue;
      used[v] = true;
      if (layout.central()) used[top - v] = true;
      prefix.push_back(v);
      self(self);
      prefix.pop_back();
      used[v] = false;
      if (layout.central()) used[top - v] = false;
    }
  };
  rec(rec);
  return tasks;
}

BigInt covered_total(const Layout& layout, const std::vector<std::uint64_t>& covered) {
  BigInt total = 0;
  for (std::size_t d = 0; d < covered.size(); ++d) {
    if (covered[d]) total += layout.leaves_below(d) * covered[d];
  }
  return total;
}

void check_config(const SearchConfig& config) {
  if (config.n < 3) {
    throw PreconditionError("search length must be >= 3, got " +
                            std::to_string(config.n));
  }
  if (config.threads < 1) throw PreconditionError("threads must be >= 1");
  if (!config.central_only && config.n > 20) {
    throw PreconditionError("full-space search is limited to n <= 20");
  }
  if (config.limit && *config.limit == 0) {
    throw PreconditionError("limit must be >= 1");
  }
}

}  // namespace

SearchResult search_3_inflatable(const SearchConfig& config) {
  check_config(config);
  auto targets = target_counts_3(config.n);
  if (!targets) {
    SearchResult result;
    result.status = SearchStatus::inadmissible;
    result.reason = "length " + std::to_string(config.n) +
                    " is not admissible: target pattern counts are not integral";
    return result;
  }
  return search_for_counts(config, *targets);
}

SearchResult search_for_counts(const SearchConfig& config,
                               const PatternCounts3& targets) {
  check_config(config);
  const auto started = std::chrono::steady_clock::now();
  const Layout layout(config.n, config.central_only);
  const std::size_t split = std::min<std::size_t>(2, layout.depth());
  const auto tasks = make_tasks(layout, split);

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  // Tasks after `cutoff` cannot contribute to the first `limit` hits.
  std::atomic<std::size_t> cutoff{tasks.size()};
  std::mutex mutex;

  auto worker_loop = [&] {
    Worker worker(layout, targets, config.limit, stop);
    while (!stop.load()) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size() || t > cutoff.load()) break;
      TaskResult r = worker.run(tasks[t]);

      std::lock_guard lock(mutex);
      if (config.emit_all && config.on_hit) {
        for (const auto& hit : r.hits) config.on_hit(t, hit.perm);
      }
      results[t] = std::move(r);
      if (config.limit) {
        std::uint64_t seen = 0;
        for (std::size_t i = 0; i < results.size() && results[i].done; ++i) {
          seen += results[i].hits.size();
          if (seen >= *config.limit) {
            cutoff.store(std::min(cutoff.load(), i));
            break;
          }
        }
      }
    }
  };

  std::thread watchdog;
  std::atomic<bool> finished{false};
  if (config.timeout) {
    watchdog = std::thread([&] {
      while (!finished.load()) {
        if (std::chrono::steady_clock::now() - started > *config.timeout) {
          timed_out = true;
          stop = true;
          return;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
      }
    });
  }

  std::vector<std::thread> pool;
  for (unsigned i = 1; i < config.threads; ++i) pool.emplace_back(worker_loop);
  worker_loop();
  for (auto& th : pool) th.join();
  finished = true;
  if (watchdog.joinable()) watchdog.join();

  SearchResult out;
  out.subtrees = tasks.size();
  for (const auto& r : results) out.nodes += r.nodes;

  if (timed_out) {
    out.status = SearchStatus::timed_out;
    out.reason = "timeout after " + std::to_string(config.timeout->count()) + " ms";
    for (const auto& r : results) {
      out.scanned += covered_total(layout, r.covered);
      for (const auto& h : r.hits) out.hits.push_back(h.perm);
    }
  } else {
    std::uint64_t remaining = config.limit.value_or(UINT64_MAX);
    for (std::size_t t = 0; t < results.size() && remaining > 0; ++t) {
      const auto& r = results[t];
      if (r.hits.size() >= remaining && config.limit) {
        const auto& last = r.hits[remaining - 1];
        out.scanned += covered_total(layout, last.covered_before) + 1;
        for (std::size_t h = 0; h < remaining; ++h) out.hits.push_back(r.hits[h].perm);
        remaining = 0;
        out.status = SearchStatus::limit_reached;
        break;
      }
      out.scanned += covered_total(layout, r.covered);
      for (const auto& h : r.hits) out.hits.push_back(h.perm);
      remaining -= r.hits.size();
    }
  }
  std::sort(out.hits.begin(), out.hits.end());
  out.hits.erase(std::unique(out.hits.begin(), out.hits.end()), out.hits.end());
  out.found = out.hits.size();
  return out;
}

SearchResult reference_search_for_counts(std::size_t n, bool central_only,
                                         const PatternCounts3& targets) {
  if (n < 3) throw PreconditionError("search length must be >= 3");
  SearchResult out;
  auto consider = [&](const Permutation& p) {
    ++out.nodes;
    out.scanned += 1;
    if (count_length3_all(p) == targets) out.hits.push_back(p);
  };
  if (central_only) {
    CentrallySymmetricEnumerator it(n);
    while (auto p = it.next()) consider(*p);
  } else {
    std::vector<int> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<int>(i + 1);
    do {
      consider(Permutation(values));
    } while (std::next_permutation(values.begin(), values.end()));
  }
  out.found = out.hits.size();
  return out;
}

}  // namespace inflatable
