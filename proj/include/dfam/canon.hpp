#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "dfam/modring.hpp"

namespace dfam {

/// Full blocks of a cyclic (v,k,1) family. The short block, when the
/// parameters call for one, is implicit and never stored.
struct DifferenceFamily {
  Parameters params;
  std::vector<Block> full_blocks;

  friend bool operator==(const DifferenceFamily& a, const DifferenceFamily& b) {
    return a.params == b.params && a.full_blocks == b.full_blocks;
  }
  friend std::strong_ordering operator<=>(const DifferenceFamily& a, const DifferenceFamily& b) {
    return a.full_blocks <=> b.full_blocks;
  }
};

/// Builds a family from raw blocks, normalizing each and sorting.
DifferenceFamily make_family(const Parameters& p, const std::vector<std::vector<Residue>>& blocks);

/// The lexicographically least multiplier image of a family.
struct CanonicalForm {
  std::vector<std::vector<Residue>> key;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Translates s so that its largest circular gap follows 0. Among several
/// largest gaps the lexicographically least translate wins. Residues are
/// reduced mod v first; duplicates raise InvalidParameter.
Block normalize_block(std::span<const Residue> s, Residue v);

/// b -> (b_2 - b) mod v, renormalized. An involution preserving 0, b_2 and
/// the difference multiset.
Block mirror_block(const Block& b, Residue v);

/// The 2^(t-1) families obtained by mirroring any subset of the blocks
/// other than the first. Sorted; duplicates kept.
std::vector<DifferenceFamily> mirror_expand(const DifferenceFamily& f);

/// Units of Z_v in increasing order.
std::vector<Residue> units(Residue v);

/// a*f with each block renormalized and the blocks sorted.
DifferenceFamily multiply(const DifferenceFamily& f, Residue a);

CanonicalForm canonical_form(const DifferenceFamily& f);

/// Rebuilds a family from a canonical key.
DifferenceFamily family_from_key(const Parameters& p, const CanonicalForm& c);

/// One family per multiplier class, each equal to its canonical key,
/// sorted by key.
std::vector<DifferenceFamily> dedup(std::span<const DifferenceFamily> fs);

/// Number of units a with a*f == f up to per-block translation and block order.
std::uint64_t multiplier_automorphisms(const DifferenceFamily& f);

}  // namespace dfam
