#include "dfam/designer.hpp"

#include <algorithm>

namespace dfam {

std::string FamilyReport::describe() const {
  if (ok()) return "ok";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    switch (v.kind) {
      case FamilyViolation::Kind::DuplicateDifference:
        s += "DuplicateDifference(" + std::to_string(v.value) + ")";
        break;
      case FamilyViolation::Kind::MissingDifference:
        s += "MissingDifference(" + std::to_string(v.value) + ")";
        break;
      case FamilyViolation::Kind::WrongBlockCount:
        s += "WrongBlockCount(" + std::to_string(v.value) + ")";
        break;
      case FamilyViolation::Kind::WrongBlockSize:
        s += "WrongBlockSize(block " + std::to_string(v.value) + ")";
        break;
    }
  }
  return s;
}

FamilyReport verify_family(const DifferenceFamily& f) {
  FamilyReport r;
  const Parameters& p = f.params;
  using K = FamilyViolation::Kind;
  if (f.full_blocks.size() != static_cast<std::size_t>(p.t))
    r.violations.push_back({K::WrongBlockCount, static_cast<std::int64_t>(f.full_blocks.size())});
  for (std::size_t i = 0; i < f.full_blocks.size(); ++i)
    if (f.full_blocks[i].size() != static_cast<std::size_t>(p.k))
      r.violations.push_back({K::WrongBlockSize, static_cast<std::int64_t>(i)});
  if (!r.ok()) return r;

  std::vector<std::uint32_t> hits(static_cast<std::size_t>(p.v), 0);
  for (const auto& b : f.full_blocks)
    for (Residue d : delta_set(b, p.v)) ++hits[static_cast<std::size_t>(d)];

  // Duplicates first, then gaps, each in increasing order.
  const Residue step = p.has_short_block() ? p.short_step() : 0;
  auto in_short_orbit = [&](Residue d) { return d == 0 || (step != 0 && d % step == 0); };
  for (Residue d = 0; d < p.v; ++d) {
    const auto h = hits[static_cast<std::size_t>(d)];
    if (h > (in_short_orbit(d) ? 0u : 1u)) r.violations.push_back({K::DuplicateDifference, d});
  }
  for (Residue d = 1; d < p.v; ++d)
    if (!in_short_orbit(d) && hits[static_cast<std::size_t>(d)] == 0)
      r.violations.push_back({K::MissingDifference, d});
  return r;
}

Design develop(const DifferenceFamily& f) {
  const auto report = verify_family(f);
  if (!report.ok()) throw Error(ErrorKind::Verification, "cannot develop an invalid family: " + report.describe());
  const Parameters& p = f.params;
  Design d{p.v, p.k, {}};
  auto add_orbit = [&](const std::vector<Residue>& base, Residue length) {
    for (Residue g = 0; g < length; ++g) {
      std::vector<Residue> b;
      b.reserve(base.size());
      for (Residue x : base) b.push_back(mod(static_cast<std::int64_t>(x) + g, p.v));
      std::sort(b.begin(), b.end());
      d.blocks.push_back(std::move(b));
    }
  };
  for (const auto& b : f.full_blocks) add_orbit(b.elements, p.v);
  if (p.has_short_block()) add_orbit(short_block(p).elements, p.short_step());
  std::sort(d.blocks.begin(), d.blocks.end());
  return d;
}

std::string DesignReport::describe() const {
  if (ok()) return "ok";
  std::string s;
  if (first_uncovered)
    s += "PairUncovered(" + std::to_string(first_uncovered->p) + "," + std::to_string(first_uncovered->q) +
         ") x" + std::to_string(uncovered_pairs);
  if (first_multiply_covered) {
    if (!s.empty()) s += "; ";
    s += "PairMultiplyCovered(" + std::to_string(first_multiply_covered->p) + "," +
         std::to_string(first_multiply_covered->q) + "," + std::to_string(first_multiply_covered->count) +
         ") x" + std::to_string(multiply_covered_pairs);
  }
  return s;
}

DesignReport verify_design(const Design& d) {
  const auto v = static_cast<std::size_t>(d.v);
  // Row p of the triangle holds pairs (p,q), q > p.
  std::vector<std::uint32_t> count(v * (v - 1) / 2 + 1, 0);
  auto index = [v](std::size_t p, std::size_t q) { return p * (2 * v - p - 1) / 2 + (q - p - 1); };
  for (const auto& block : d.blocks) {
    auto b = block;
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw Error(ErrorKind::Range, "design block has a repeated point");
    for (Residue x : b)
      if (x < 0 || x >= d.v) throw Error(ErrorKind::Range, "design point " + std::to_string(x) + " out of range");
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        ++count[index(static_cast<std::size_t>(b[i]), static_cast<std::size_t>(b[j]))];
  }
  DesignReport r;
  for (std::size_t p = 0; p < v; ++p) {
    for (std::size_t q = p + 1; q < v; ++q) {
      const auto c = count[index(p, q)];
      if (c == 0) {
        ++r.uncovered_pairs;
        if (!r.first_uncovered) r.first_uncovered = PairCoverage{Residue(p), Residue(q), 0};
      } else if (c > 1) {
        ++r.multiply_covered_pairs;
        if (!r.first_multiply_covered) r.first_multiply_covered = PairCoverage{Residue(p), Residue(q), c};
      }
    }
  }
  return r;
}

}  // namespace dfam
