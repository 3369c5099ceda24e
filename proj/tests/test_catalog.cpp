#include <sstream>

#include "doctest.h"
#include "dfam/catalog.hpp"
#include "dfam/designer.hpp"
#include "support.hpp"

using namespace dfam;

TEST_CASE("builtin_families") {
  const auto a = builtin_families(121, 6);
  REQUIRE(a.size() == 6);
  CHECK(a[0].blocks[0] == std::vector<Residue>{0, 25, 37, 55, 76, 99});

  const auto b = builtin_families(126, 6);
  REQUIRE(b.size() == 8);
  for (const auto& r : b)
    for (const auto& blk : r.blocks) CHECK(blk != std::vector<Residue>{0, 21, 42, 63, 84, 105});

  const auto c = builtin_families(169, 7);
  REQUIRE(c.size() == 4);
  std::vector<std::uint64_t> autos;
  for (const auto& r : c) autos.push_back(r.automorphisms.value_or(0));
  CHECK(autos == std::vector<std::uint64_t>{1, 1, 3, 3});

  CHECK(builtin_families(100, 5).empty());
  CHECK(builtin_families().size() == 18);
}

TEST_CASE("builtin normal-form flags: largest-gap-first listings vs least-translate listings") {
  for (const auto& r : builtin_families(121, 6)) CHECK(r.normalized);
  for (const auto& r : builtin_families(126, 6)) CHECK(r.normalized);
  for (const auto& r : builtin_families(169, 7)) CHECK(!r.normalized);
}

TEST_CASE("all 18 builtin records verify after normalization") {
  for (const auto& r : builtin_families()) {
    const auto f = to_family(r);
    CHECK_MESSAGE(verify_family(f).ok(), r.source);
    // the least-translate presentation and the normal form describe the same blocks
    for (std::size_t i = 0; i < r.blocks.size(); ++i) {
      const auto n = normalize_block(r.blocks[i], r.v);
      CHECK(std::find(f.full_blocks.begin(), f.full_blocks.end(), n) != f.full_blocks.end());
      CHECK(normalize_block(n.elements, r.v) == n);
    }
  }
}

TEST_CASE("parse_text") {
  const auto r = parse_text("{{0, 7, 9}, {0, 11, 12}}", 15, 3);
  CHECK(r.v == 15);
  CHECK(r.k == 3);
  CHECK(r.blocks == std::vector<std::vector<Residue>>{{0, 7, 9}, {0, 11, 12}});
  CHECK(r.normalized);
  CHECK(!parse_text("{{1, 2, 9}}", 13, 3).normalized);
  CHECK(parse_text(" {\n{0,7,9} ,{0,11,12}}  ", 15, 3).blocks.size() == 2);
}

TEST_CASE("parse_text errors") {
  try {
    parse_text("{{0, 7, 9}", 15, 3);
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("position 10") != std::string::npos);
  }
  try {
    parse_text("{{0, 7, 200}}", 15, 3);
    FAIL("expected a range error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Range);
  }
  try {
    parse_text("{{0, 7}}", 15, 3);
    FAIL("expected a size error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
  CHECK_THROWS_AS(parse_text("{{0, -7, 9}}", 15, 3), Error);
  CHECK_THROWS_AS(parse_text("{{0, 7, 9}} x", 15, 3), Error);
}

TEST_CASE("text and JSON-lines round trips") {
  auto records = builtin_families();
  for (int i = 0; i < 50; ++i) {
    const auto pairs = testing::admissible_pairs(300, 7);
    const auto [v, k] = pairs[static_cast<std::size_t>(testing::uniform(0, static_cast<int>(pairs.size()) - 1))];
    FamilyRecord r{v, k, {}, "random", false, {}};
    for (int b = 0, n = testing::uniform(0, 4); b < n; ++b) r.blocks.push_back(testing::random_sidon_block(v, k));
    records.push_back(r);
  }
  for (const auto& r : records) {
    auto back = parse_text(render_text(r), r.v, r.k, r.source);
    back.automorphisms = r.automorphisms;
    CHECK(back.blocks == r.blocks);
    CHECK(back.v == r.v);
    if (r.source != "random") CHECK(back == r);
    CHECK(from_json_line(to_json_line(r)) == r);
  }
  std::stringstream ss;
  write_jsonl(ss, records);
  CHECK(read_jsonl(ss) == records);
}

TEST_CASE("JSON-lines layout is fixed") {
  FamilyRecord r{15, 3, {{0, 7, 9}, {0, 11, 12}}, "x", true, {}};
  CHECK(to_json_line(r) == R"({"v":15,"k":3,"blocks":[[0,7,9],[0,11,12]],"source":"x","normalized":true})");
  r.automorphisms = 3;
  CHECK(to_json_line(r) ==
        R"({"v":15,"k":3,"blocks":[[0,7,9],[0,11,12]],"source":"x","normalized":true,"automorphisms":3})");
}

TEST_CASE("read_jsonl edge cases") {
  std::stringstream empty;
  CHECK(read_jsonl(empty).empty());

  std::stringstream with_comments("# header\n\n" + to_json_line(builtin_families(121, 6)[0]) + "\n");
  CHECK(read_jsonl(with_comments).size() == 1);

  std::stringstream bad(to_json_line(builtin_families(121, 6)[0]) + "\n" +
                        R"({"v":15,"k":3,"blocks":[[0,7,9,10]],"source":"x","normalized":false})" + "\n");
  try {
    read_jsonl(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("line 2:", 0) == 0);
  }

  std::stringstream garbage("{not json\n");
  CHECK_THROWS_AS(read_jsonl(garbage), Error);
  CHECK_THROWS_AS(read_jsonl(std::string("/nonexistent/path.jsonl")), Error);
}

TEST_CASE("file round trip of the (169,7) records") {
  const std::string path = "catalog_roundtrip_test.jsonl";
  const auto rs = builtin_families(169, 7);
  write_jsonl(path, rs);
  CHECK(read_jsonl(path) == rs);
  std::remove(path.c_str());
}
