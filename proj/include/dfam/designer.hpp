#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfam/canon.hpp"

namespace dfam {

struct FamilyViolation {
  enum class Kind { DuplicateDifference, MissingDifference, WrongBlockCount, WrongBlockSize };
  Kind kind;
  std::int64_t value;  ///< the difference, the block count, or the offending block index

  friend bool operator==(const FamilyViolation&, const FamilyViolation&) = default;
};

struct FamilyReport {
  std::vector<FamilyViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// Checks that the full blocks' differences are disjoint and cover every
/// nonzero residue outside the short orbit.
FamilyReport verify_family(const DifferenceFamily& f);

struct Design {
  Residue v = 0;
  int k = 0;
  std::vector<std::vector<Residue>> blocks;
};

/// All translates of the full blocks plus the v/k translates of the short
/// block. Blocks are sorted internally and as a list. Throws Verification
/// if the family does not verify.
Design develop(const DifferenceFamily& f);

struct PairCoverage {
  Residue p = 0, q = 0;
  std::uint32_t count = 0;
};

struct DesignReport {
  std::optional<PairCoverage> first_uncovered;
  std::optional<PairCoverage> first_multiply_covered;
  std::uint64_t uncovered_pairs = 0;
  std::uint64_t multiply_covered_pairs = 0;
  bool ok() const { return !first_uncovered && !first_multiply_covered; }
  std::string describe() const;
};

/// Brute-force pair count over all C(v,2) pairs. Throws Range on blocks with
/// out-of-range or repeated points.
DesignReport verify_design(const Design& d);

}  // namespace dfam
