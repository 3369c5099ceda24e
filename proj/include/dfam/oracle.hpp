#pragma once

#include <cstddef>
#include <vector>

#include "dfam/canon.hpp"

namespace dfam {

inline constexpr Residue kDefaultOracleCap = 60;

/// Every family of normalized full blocks, found without any difference
/// multiset or mirror shortcuts. Blocks are generated by brute force over all
/// k-subsets through 0 and the family is assembled as an exact cover of the
/// required differences. Output is sorted. Refuses v > cap with CapExceeded.
std::vector<DifferenceFamily> oracle_enumerate(const Parameters& p, Residue cap = kDefaultOracleCap);

/// Number of multiplier classes among oracle_enumerate(p).
std::size_t oracle_classes(const Parameters& p, Residue cap = kDefaultOracleCap);

}  // namespace dfam
