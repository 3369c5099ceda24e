#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dfam/canon.hpp"

namespace dfam {

/// How candidate blocks sharing a difference multiset are pruned at a node.
enum class DeltaDedup {
  /// Expand only the lexicographically first block of each multiset.
  MirrorOnly,
  /// Expand one block per mirror pair; homometric blocks are all kept.
  FullDeltaClass,
  /// Expand every candidate. Diagnostic only: yields every labeled family.
  None,
};

/// One unit of parallel work: every family whose first block has this b2.
struct SearchTask {
  Parameters params;
  Residue b2 = 0;
};

struct SearchProgress {
  SearchTask task;
  std::uint64_t families = 0;
  std::uint64_t nodes = 0;
};

struct SearchConfig {
  int thread_count = 1;
  DeltaDedup delta_dedup = DeltaDedup::FullDeltaClass;
  /// Called for each base family as it is found. May be invoked from worker
  /// threads, but never concurrently. An exception aborts the run.
  std::function<void(const DifferenceFamily&)> emit;
  /// Called once per finished task, serialized like emit.
  std::function<void(const SearchProgress&)> progress;
};

/// Tasks for every b2 in [ceil(v/k), v-k+1], ascending.
std::vector<SearchTask> partition(const Parameters& p);

/// Runs a single task. Families come out in lexicographic order.
std::vector<DifferenceFamily> search_task(const SearchTask& task, DeltaDedup mode,
                                          std::uint64_t* nodes = nullptr);

/// Sequential search over all tasks. thread_count is ignored.
std::vector<DifferenceFamily> enumerate(const Parameters& p, const SearchConfig& cfg = {});

/// Same output as enumerate for any thread_count.
std::vector<DifferenceFamily> run_parallel(const Parameters& p, const SearchConfig& cfg = {});

}  // namespace dfam
