#include <set>

#include "doctest.h"
#include "dfam/designer.hpp"
#include "dfam/engine.hpp"
#include "dfam/oracle.hpp"

using namespace dfam;

namespace {

using V = std::vector<Residue>;

std::vector<CanonicalForm> class_set(const std::vector<DifferenceFamily>& base) {
  std::vector<DifferenceFamily> all;
  for (const auto& f : base) {
    auto ex = mirror_expand(f);
    all.insert(all.end(), ex.begin(), ex.end());
  }
  std::vector<CanonicalForm> out;
  for (const auto& c : dedup(all)) out.push_back(canonical_form(c));
  return out;
}

std::vector<CanonicalForm> oracle_class_set(const Parameters& p) {
  std::vector<CanonicalForm> out;
  for (const auto& c : dedup(oracle_enumerate(p))) out.push_back(canonical_form(c));
  return out;
}

}  // namespace

TEST_CASE("enumerate (15,3) finds exactly the worked base family") {
  const auto base = enumerate(classify(15, 3));
  REQUIRE(base.size() == 1);
  CHECK(base[0] == make_family(classify(15, 3), {{0, 7, 9}, {0, 11, 12}}));
  CHECK(class_set(base).size() == 2);
}

TEST_CASE("enumerate small cases") {
  CHECK(enumerate(classify(9, 3)).empty());
  const auto b13 = enumerate(classify(13, 3));
  CHECK(b13.size() == 1);
  CHECK(class_set(b13).size() == 1);
  CHECK(class_set(enumerate(classify(7, 3))).size() == 1);
}

TEST_CASE("enumerate rejects inadmissible parameters") {
  try {
    enumerate(classify(14, 3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
  }
}

TEST_CASE("partition ranges") {
  const auto t15 = partition(classify(15, 3));
  REQUIRE(t15.size() == 9);
  CHECK(t15.front().b2 == 5);
  CHECK(t15.back().b2 == 13);
  for (const auto& t : t15) {
    const auto fs = search_task(t, DeltaDedup::FullDeltaClass);
    CHECK(fs.empty() == (t.b2 != 7));
  }

  const auto t7 = partition(classify(7, 3));
  REQUIRE(t7.size() == 3);
  CHECK(t7[0].b2 == 3);
  CHECK(t7[2].b2 == 5);
  // The Fano block normalizes to (0,4,5) and lives in exactly one task.
  CHECK(normalize_block(V{0, 1, 3}, 7).elements == V{0, 4, 5});
  int hits = 0;
  for (const auto& t : t7)
    for (const auto& f : search_task(t, DeltaDedup::FullDeltaClass)) {
      hits += 1;
      CHECK(t.b2 == 4);
      CHECK(f.full_blocks[0].elements == V{0, 4, 5});
    }
  CHECK(hits == 1);
}

TEST_CASE("partition covers the search: task results concatenate to enumerate") {
  for (auto [v, k] : {std::pair{25, 3}, std::pair{31, 3}, std::pair{37, 4}, std::pair{40, 4}}) {
    const auto p = classify(v, k);
    std::vector<DifferenceFamily> joined;
    for (const auto& t : partition(p)) {
      auto fs = search_task(t, DeltaDedup::FullDeltaClass);
      for (const auto& f : fs) CHECK(f.full_blocks[0][1] == t.b2);
      joined.insert(joined.end(), fs.begin(), fs.end());
    }
    std::sort(joined.begin(), joined.end());
    CHECK(joined == enumerate(p));
  }
}

TEST_CASE("run_parallel matches enumerate for every thread count") {
  for (auto [v, k] : {std::pair{13, 3}, std::pair{15, 3}, std::pair{21, 3}, std::pair{25, 3}}) {
    const auto p = classify(v, k);
    const auto expected = enumerate(p);
    for (int threads : {1, 2, 4, 8}) {
      SearchConfig cfg;
      cfg.thread_count = threads;
      CHECK(run_parallel(p, cfg) == expected);
    }
  }
  // class count cross-checked with the oracle
  const auto p21 = classify(21, 3);
  CHECK(class_set(enumerate(p21)) == oracle_class_set(p21));
  CHECK(class_set(enumerate(p21)).size() == 7);
}

TEST_CASE("run_parallel streams every family to emit and reports each task") {
  const auto p = classify(31, 3);
  std::vector<DifferenceFamily> streamed;
  std::size_t tasks_seen = 0;
  std::uint64_t families_reported = 0;
  SearchConfig cfg;
  cfg.thread_count = 4;
  cfg.emit = [&](const DifferenceFamily& f) { streamed.push_back(f); };
  cfg.progress = [&](const SearchProgress& pr) {
    ++tasks_seen;
    families_reported += pr.families;
    CHECK(pr.nodes > 0);
  };
  const auto out = run_parallel(p, cfg);
  std::sort(streamed.begin(), streamed.end());
  CHECK(streamed == out);
  CHECK(tasks_seen == partition(p).size());
  CHECK(families_reported == out.size());
}

TEST_CASE("run_parallel propagates sink failures") {
  SearchConfig cfg;
  cfg.thread_count = 3;
  cfg.emit = [](const DifferenceFamily&) { throw std::runtime_error("sink full"); };
  CHECK_THROWS_WITH(run_parallel(classify(25, 3), cfg), "sink full");
  CHECK_THROWS_AS(run_parallel(classify(25, 3), SearchConfig{0}), Error);
}

TEST_CASE("every base family verifies (soundness)") {
  for (auto [v, k] : {std::pair{31, 3}, std::pair{33, 3}, std::pair{49, 4}, std::pair{52, 4}}) {
    for (auto mode : {DeltaDedup::FullDeltaClass, DeltaDedup::MirrorOnly}) {
      SearchConfig cfg;
      cfg.delta_dedup = mode;
      for (const auto& f : enumerate(classify(v, k), cfg)) {
        REQUIRE(verify_family(f).ok());
        for (const auto& b : f.full_blocks) REQUIRE(normalize_block(b.elements, v) == b);
        REQUIRE(std::is_sorted(f.full_blocks.begin(), f.full_blocks.end()));
      }
    }
  }
}

TEST_CASE("without delta dedup the engine yields exactly the oracle's labeled families") {
  for (auto [v, k] : {std::pair{13, 3}, std::pair{15, 3}, std::pair{25, 3}, std::pair{31, 3}, std::pair{37, 4},
                      std::pair{40, 4}}) {
    const auto p = classify(v, k);
    SearchConfig none;
    none.delta_dedup = DeltaDedup::None;
    const auto all = enumerate(p, none);
    CHECK(all == oracle_enumerate(p));
    // Dropping dedup changes multiplicity only.
    CHECK(class_set(all) == class_set(enumerate(p)));
  }
}

TEST_CASE("MirrorOnly retains one block per difference multiset") {
  // Every family found without dedup is reachable from a MirrorOnly base
  // family by replacing blocks with blocks of equal difference multiset.
  const auto p = classify(37, 4);
  SearchConfig mirror_only;
  mirror_only.delta_dedup = DeltaDedup::MirrorOnly;
  SearchConfig none;
  none.delta_dedup = DeltaDedup::None;
  const auto base = enumerate(p, mirror_only);
  auto signature = [&](const DifferenceFamily& f) {
    std::vector<V> s;
    for (const auto& b : f.full_blocks) s.push_back(delta_set(b, p.v));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::set<std::vector<V>> base_signatures;
  for (const auto& f : base) base_signatures.insert(signature(f));
  for (const auto& f : enumerate(p, none)) {
    auto s = signature(f);
    // Under a global mirror every signature is unchanged, so each labeled
    // family's multiset signature must appear among the base families'.
    CHECK(base_signatures.count(s) == 1);
  }
}
