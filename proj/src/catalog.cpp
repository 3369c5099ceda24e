#include "dfam/catalog.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace dfam {

namespace {

using Blocks = std::vector<std::vector<Residue>>;

struct Published {
  Residue v;
  int k;
  Blocks blocks;
  std::optional<std::uint64_t> automorphisms;
};

// Blocks exactly as published. The (169,7,1) listing uses the
// lexicographically least translate, the others the largest-gap-first form.
const std::vector<Published>& published() {
  static const std::vector<Published> data = {
      {121, 6, {{0, 25, 37, 55, 76, 99}, {0, 52, 57, 72, 110, 113}, {0, 54, 71, 81, 90, 97}, {0, 73, 75, 79, 107, 108}}, {}},
      {121, 6, {{0, 25, 45, 66, 79, 97}, {0, 39, 46, 51, 83, 99}, {0, 62, 63, 65, 71, 98}, {0, 64, 74, 78, 93, 104}}, {}},
      {121, 6, {{0, 26, 35, 54, 72, 97}, {0, 40, 47, 52, 91, 113}, {0, 42, 53, 57, 63, 80}, {0, 56, 76, 89, 90, 92}}, {}},
      {121, 6, {{0, 26, 41, 53, 73, 96}, {0, 50, 52, 87, 111, 117}, {0, 63, 72, 77, 105, 108}, {0, 64, 75, 82, 83, 104}}, {}},
      {121, 6, {{0, 29, 31, 56, 80, 93}, {0, 40, 46, 50, 66, 98}, {0, 45, 60, 67, 78, 79}, {0, 47, 68, 77, 82, 85}}, {}},
      {121, 6, {{0, 38, 39, 56, 61, 85}, {0, 45, 51, 58, 66, 78}, {0, 49, 53, 79, 90, 93}, {0, 52, 54, 86, 102, 111}}, {}},
      {126, 6, {{0, 26, 38, 56, 81, 103}, {0, 40, 48, 68, 99, 102}, {0, 41, 57, 93, 94, 107}, {0, 80, 82, 87, 91, 97}}, {}},
      {126, 6, {{0, 28, 46, 68, 85, 101}, {0, 45, 52, 65, 95, 99}, {0, 49, 59, 64, 78, 115}, {0, 82, 88, 90, 91, 114}}, {}},
      {126, 6, {{0, 30, 50, 69, 95, 123}, {0, 34, 59, 77, 82, 94}, {0, 64, 68, 79, 119, 120}, {0, 80, 88, 90, 104, 117}}, {}},
      {126, 6, {{0, 35, 36, 64, 89, 103}, {0, 44, 60, 70, 77, 92}, {0, 55, 57, 61, 102, 107}, {0, 75, 83, 86, 95, 113}}, {}},
      {126, 6, {{0, 36, 37, 47, 77, 108}, {0, 38, 52, 64, 91, 97}, {0, 46, 50, 66, 69, 94}, {0, 68, 70, 75, 83, 92}}, {}},
      {126, 6, {{0, 36, 37, 64, 93, 115}, {0, 45, 52, 83, 106, 118}, {0, 67, 71, 77, 101, 117}, {0, 68, 82, 85, 87, 100}}, {}},
      {126, 6, {{0, 36, 38, 48, 75, 95}, {0, 52, 68, 81, 82, 86}, {0, 53, 62, 70, 77, 103}, {0, 55, 61, 80, 83, 115}}, {}},
      {126, 6, {{0, 47, 48, 67, 91, 123}, {0, 49, 66, 74, 111, 120}, {0, 57, 61, 68, 90, 95}, {0, 73, 85, 87, 103, 113}}, {}},
      {169, 7, {{0, 1, 3, 11, 48, 65, 83}, {0, 4, 13, 29, 43, 81, 141}, {0, 5, 12, 36, 56, 78, 111}, {0, 6, 21, 40, 67, 90, 116}}, 1},
      {169, 7, {{0, 1, 3, 11, 48, 65, 83}, {0, 4, 13, 29, 43, 81, 141}, {0, 5, 12, 36, 56, 78, 111}, {0, 6, 59, 85, 108, 135, 154}}, 1},
      {169, 7, {{0, 1, 3, 11, 48, 65, 83}, {0, 4, 13, 29, 43, 81, 141}, {0, 5, 63, 96, 118, 138, 162}, {0, 6, 21, 40, 67, 90, 116}}, 3},
      {169, 7, {{0, 1, 3, 11, 48, 65, 83}, {0, 4, 32, 92, 130, 144, 160}, {0, 5, 63, 96, 118, 138, 162}, {0, 6, 21, 40, 67, 90, 116}}, 3},
  };
  return data;
}

bool all_normalized(const Blocks& blocks, Residue v) {
  for (const auto& b : blocks) {
    try {
      if (normalize_block(b, v).elements != b) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

FamilyRecord from_published(const Published& p, std::size_t index) {
  FamilyRecord r;
  r.v = p.v;
  r.k = p.k;
  r.blocks = p.blocks;
  r.source = "builtin (" + std::to_string(p.v) + "," + std::to_string(p.k) + ",1) #" + std::to_string(index);
  r.normalized = all_normalized(r.blocks, r.v);
  r.automorphisms = p.automorphisms;
  return r;
}

void check_block(const std::vector<Residue>& b, Residue v, int k, const std::string& where) {
  if (b.size() != static_cast<std::size_t>(k))
    throw Error(ErrorKind::Parse, where + "block has " + std::to_string(b.size()) + " elements, expected k=" +
                                      std::to_string(k));
  for (Residue x : b)
    if (x < 0 || x >= v)
      throw Error(ErrorKind::Range, where + "element " + std::to_string(x) + " is outside [0, " + std::to_string(v) + ")");
}

}  // namespace

std::vector<FamilyRecord> builtin_families(Residue v, int k) {
  std::vector<FamilyRecord> out;
  std::size_t index = 0;
  for (const auto& p : published()) {
    if (p.v != v || p.k != k) continue;
    out.push_back(from_published(p, ++index));
  }
  return out;
}

std::vector<FamilyRecord> builtin_families() {
  std::vector<FamilyRecord> out;
  for (auto [v, k] : {std::pair{121, 6}, std::pair{126, 6}, std::pair{169, 7}}) {
    auto rs = builtin_families(v, k);
    out.insert(out.end(), rs.begin(), rs.end());
  }
  return out;
}

FamilyRecord to_record(const DifferenceFamily& f, std::string source) {
  FamilyRecord r;
  r.v = f.params.v;
  r.k = f.params.k;
  for (const auto& b : f.full_blocks) r.blocks.push_back(b.elements);
  r.source = std::move(source);
  r.normalized = all_normalized(r.blocks, r.v);
  return r;
}

DifferenceFamily to_family(const FamilyRecord& r) {
  const Parameters p = classify(r.v, r.k);
  return make_family(p, r.blocks);
}

FamilyRecord parse_text(std::string_view text, Residue v, int k, std::string source) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorKind::Parse, "syntax error at position " + std::to_string(pos) + ": " + what);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size()) throw fail(std::string("expected '") + c + "', found end of input");
    if (text[pos] != c) throw fail(std::string("expected '") + c + "', found '" + text[pos] + "'");
    ++pos;
  };
  auto peek = [&]() -> char {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  };
  auto number = [&]() -> Residue {
    skip_ws();
    const std::size_t start = pos;
    std::int64_t x = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      x = x * 10 + (text[pos] - '0');
      if (x > (std::int64_t{1} << 31)) throw fail("number too large");
      ++pos;
    }
    if (pos == start) throw fail("expected a non-negative integer");
    return static_cast<Residue>(x);
  };

  FamilyRecord r;
  r.v = v;
  r.k = k;
  r.source = std::move(source);
  expect('{');
  if (peek() != '}') {
    for (;;) {
      expect('{');
      std::vector<Residue> block;
      if (peek() != '}') {
        for (;;) {
          block.push_back(number());
          if (peek() == ',') {
            ++pos;
            continue;
          }
          break;
        }
      }
      expect('}');
      check_block(block, v, k, "block " + std::to_string(r.blocks.size() + 1) + ": ");
      r.blocks.push_back(std::move(block));
      if (peek() == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  expect('}');
  skip_ws();
  if (pos != text.size()) throw fail("trailing characters");
  r.normalized = all_normalized(r.blocks, v);
  return r;
}

std::string render_text(const FamilyRecord& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    if (i) s += ", ";
    s += "{";
    for (std::size_t j = 0; j < r.blocks[i].size(); ++j) {
      if (j) s += ", ";
      s += std::to_string(r.blocks[i][j]);
    }
    s += "}";
  }
  return s + "}";
}

std::string to_json_line(const FamilyRecord& r) {
  nlohmann::ordered_json j;
  j["v"] = r.v;
  j["k"] = r.k;
  j["blocks"] = r.blocks;
  j["source"] = r.source;
  j["normalized"] = r.normalized;
  if (r.automorphisms) j["automorphisms"] = *r.automorphisms;
  return j.dump();
}

FamilyRecord from_json_line(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  FamilyRecord r;
  try {
    r.v = j.at("v").get<Residue>();
    r.k = j.at("k").get<int>();
    r.blocks = j.at("blocks").get<Blocks>();
    r.source = j.at("source").get<std::string>();
    r.normalized = j.at("normalized").get<bool>();
    if (j.contains("automorphisms")) r.automorphisms = j.at("automorphisms").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad record: ") + e.what());
  }
  if (r.v < 1 || r.k < 1) throw Error(ErrorKind::Parse, "v and k must be positive");
  for (std::size_t i = 0; i < r.blocks.size(); ++i)
    check_block(r.blocks[i], r.v, r.k, "block " + std::to_string(i + 1) + ": ");
  return r;
}

void write_jsonl(std::ostream& out, const std::vector<FamilyRecord>& records) {
  for (const auto& r : records) out << to_json_line(r) << '\n';
}

std::vector<FamilyRecord> read_jsonl(std::istream& in) {
  std::vector<FamilyRecord> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(from_json_line(line));
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

void write_jsonl(const std::string& path, const std::vector<FamilyRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
  write_jsonl(out, records);
  if (!out) throw Error(ErrorKind::Io, "write to " + path + " failed");
}

std::vector<FamilyRecord> read_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return read_jsonl(in);
}

}  // namespace dfam
