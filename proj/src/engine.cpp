#include "dfam/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace dfam {

namespace {

// Depth-first search over normalized full blocks. A block is built element
// by element; every new element's differences against the earlier elements
// must be unused in the tracker. Keeping every gap strictly below b2 makes the
// block normalized by construction, since a valid block has distinct gaps.
class TaskSearch {
 public:
  TaskSearch(const Parameters& p, DeltaDedup mode, const std::atomic<bool>* abort)
      : p_(p),
        mode_(mode),
        abort_(abort),
        tracker_(p.v),
        blocks_(static_cast<std::size_t>(p.t), std::vector<Residue>(static_cast<std::size_t>(p.k))),
        seen_(static_cast<std::size_t>(p.t)) {
    tracker_.mark_short_orbit(p_);
  }

  std::vector<DifferenceFamily> run(Residue first_b2) {
    if (p_.t == 0) {
      found_.push_back(DifferenceFamily{p_, {}});
      return std::move(found_);
    }
    seen_[0].clear();
    open_block(0, first_b2);
    return std::move(found_);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void next_block(std::size_t depth, Residue min_b2) {
    if (depth == blocks_.size()) {
      emit_family();
      return;
    }
    if (abort_ && abort_->load(std::memory_order_relaxed)) return;
    seen_[depth].clear();
    const Residue hi = p_.v - p_.k + 1;
    for (Residue b2 = min_b2; b2 <= hi; ++b2) open_block(depth, b2);
  }

  void open_block(std::size_t depth, Residue b2) {
    if (tracker_.used(b2) || 2 * b2 == p_.v) return;
    auto& cur = blocks_[depth];
    cur[0] = 0;
    cur[1] = b2;
    tracker_.mark_pair(b2);
    ++nodes_;
    extend(depth, 2, b2);
    tracker_.unmark_pair(b2);
  }

  void extend(std::size_t depth, int pos, Residue b2) {
    auto& cur = blocks_[depth];
    if (pos == p_.k) {
      close_block(depth);
      return;
    }
    const Residue v = p_.v;
    const Residue prev = cur[static_cast<std::size_t>(pos - 1)];
    const Residue gaps_left = p_.k - pos;  // gaps after this element, wrap included
    const Residue lo = std::max(prev + 1, v - gaps_left * (b2 - 1));
    const Residue hi = std::min(prev + b2 - 1, v - gaps_left);
    for (Residue x = lo; x <= hi; ++x) {
      int j = 0;
      for (; j < pos; ++j) {
        const Residue d = x - cur[static_cast<std::size_t>(j)];
        if (tracker_.used(d) || 2 * d == v) break;
        tracker_.mark_pair(d);
      }
      if (j == pos) {
        cur[static_cast<std::size_t>(pos)] = x;
        ++nodes_;
        extend(depth, pos + 1, b2);
      }
      while (j-- > 0) tracker_.unmark_pair(x - cur[static_cast<std::size_t>(j)]);
    }
  }

  void close_block(std::size_t depth) {
    const auto& cur = blocks_[depth];
    if (mode_ == DeltaDedup::FullDeltaClass) {
      // The mirror has the same b2, so it is a candidate at this node too.
      if (mirror_block(Block{cur, true}, p_.v).elements < cur) return;
    } else if (mode_ == DeltaDedup::MirrorOnly) {
      if (!seen_[depth].insert(delta_set(cur, p_.v)).second) return;
    }
    next_block(depth + 1, cur[1] + 1);
  }

  void emit_family() {
    DifferenceFamily f{p_, {}};
    for (const auto& b : blocks_) f.full_blocks.push_back(Block{b, true});
    found_.push_back(std::move(f));
  }

  Parameters p_;
  DeltaDedup mode_;
  const std::atomic<bool>* abort_;
  DiffTracker tracker_;
  std::vector<std::vector<Residue>> blocks_;
  std::vector<std::set<std::vector<Residue>>> seen_;  // MirrorOnly, per depth
  std::vector<DifferenceFamily> found_;
  std::uint64_t nodes_ = 0;
};

std::vector<DifferenceFamily> run_task(const SearchTask& task, DeltaDedup mode, std::uint64_t* nodes,
                                       const std::atomic<bool>* abort) {
  TaskSearch s(task.params, mode, abort);
  auto out = s.run(task.b2);
  if (nodes) *nodes = s.nodes();
  return out;
}

std::string task_name(const SearchTask& t) {
  return "(v=" + std::to_string(t.params.v) + ",k=" + std::to_string(t.params.k) +
         ") b2=" + std::to_string(t.b2);
}

}  // namespace

std::vector<SearchTask> partition(const Parameters& p) {
  if (p.admissibility == Admissibility::Inadmissible)
    throw Error(ErrorKind::InvalidParameter, "cannot partition inadmissible parameters");
  if (p.t == 0) return {SearchTask{p, 0}};
  std::vector<SearchTask> tasks;
  const Residue lo = (p.v + p.k - 1) / p.k;
  for (Residue b2 = lo; b2 <= p.v - p.k + 1; ++b2) tasks.push_back(SearchTask{p, b2});
  return tasks;
}

std::vector<DifferenceFamily> search_task(const SearchTask& task, DeltaDedup mode, std::uint64_t* nodes) {
  return run_task(task, mode, nodes, nullptr);
}

std::vector<DifferenceFamily> enumerate(const Parameters& p, const SearchConfig& cfg) {
  std::vector<DifferenceFamily> all;
  for (const auto& task : partition(p)) {
    std::uint64_t nodes = 0;
    auto fs = run_task(task, cfg.delta_dedup, &nodes, nullptr);
    if (cfg.emit)
      for (const auto& f : fs) cfg.emit(f);
    if (cfg.progress) cfg.progress(SearchProgress{task, fs.size(), nodes});
    all.insert(all.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<DifferenceFamily> run_parallel(const Parameters& p, const SearchConfig& cfg) {
  if (cfg.thread_count < 1)
    throw Error(ErrorKind::InvalidParameter, "thread count must be positive");
  const auto tasks = partition(p);
  std::vector<std::vector<DifferenceFamily>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex sink_mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || abort.load()) return;
      try {
        std::uint64_t nodes = 0;
        std::vector<DifferenceFamily> fs;
        try {
          fs = run_task(tasks[i], cfg.delta_dedup, &nodes, &abort);
        } catch (const std::exception& e) {
          throw Error(ErrorKind::Worker, "search task " + task_name(tasks[i]) + " failed: " + e.what());
        }
        if (abort.load()) return;
        {
          std::lock_guard lock(sink_mutex);
          if (cfg.emit)
            for (const auto& f : fs) cfg.emit(f);
          if (cfg.progress) cfg.progress(SearchProgress{tasks[i], fs.size(), nodes});
        }
        results[i] = std::move(fs);
      } catch (...) {
        std::lock_guard lock(sink_mutex);
        if (!failure) failure = std::current_exception();
        abort.store(true);
        return;
      }
    }
  };

  const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(cfg.thread_count), tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<DifferenceFamily> all;
  for (auto& fs : results)
    all.insert(all.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace dfam
