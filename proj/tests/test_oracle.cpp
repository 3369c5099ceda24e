#include "doctest.h"
#include "dfam/designer.hpp"
#include "dfam/oracle.hpp"

using namespace dfam;

TEST_CASE("oracle small cases") {
  const auto f13 = oracle_enumerate(classify(13, 3));
  CHECK(f13.size() == 4);
  CHECK(dedup(f13).size() == 1);
  CHECK(f13.front() == make_family(classify(13, 3), {{0, 6, 8}, {0, 9, 10}}));

  const auto f15 = oracle_enumerate(classify(15, 3));
  CHECK(f15.size() == 4);
  CHECK(dedup(f15).size() == 2);

  CHECK(oracle_enumerate(classify(9, 3)).empty());
}

TEST_CASE("oracle_classes") {
  CHECK(oracle_classes(classify(13, 3)) == 1);
  CHECK(oracle_classes(classify(15, 3)) == 2);
  CHECK(oracle_classes(classify(25, 4)) == 0);
  CHECK(oracle_classes(classify(7, 3)) == 1);
}

TEST_CASE("oracle refuses large v and inadmissible parameters") {
  try {
    oracle_enumerate(classify(61, 3));
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
    CHECK(std::string(e.what()).find("cap") != std::string::npos);
  }
  CHECK_THROWS_AS(oracle_enumerate(classify(15, 3), 14), Error);
  CHECK(oracle_enumerate(classify(15, 3), 15).size() == 4);
  CHECK_THROWS_AS(oracle_enumerate(classify(14, 3)), Error);
}

TEST_CASE("every oracle family verifies and is in sorted normal form") {
  for (auto [v, k] : {std::pair{19, 3}, std::pair{27, 3}, std::pair{37, 4}, std::pair{41, 5}}) {
    const auto fs = oracle_enumerate(classify(v, k));
    CHECK(std::is_sorted(fs.begin(), fs.end()));
    for (const auto& f : fs) {
      REQUIRE(verify_family(f).ok());
      for (const auto& b : f.full_blocks) REQUIRE(normalize_block(b.elements, v) == b);
    }
  }
}
