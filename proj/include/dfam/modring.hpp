#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dfam/error.hpp"

namespace dfam {

using Residue = std::int32_t;

enum class Admissibility { FullOnly, WithShortBlock, Inadmissible };

const char* to_string(Admissibility a);

/// Search parameters for a cyclic (v,k,1) difference family.
struct Parameters {
  Residue v = 0;
  int k = 0;
  int t = 0;  ///< number of full blocks, floor(v / (k(k-1)))
  Admissibility admissibility = Admissibility::Inadmissible;

  /// Step of the short block, v/k. Only meaningful for WithShortBlock.
  Residue short_step() const { return v / k; }
  bool has_short_block() const { return admissibility == Admissibility::WithShortBlock; }

  friend bool operator==(const Parameters&, const Parameters&) = default;
};

/// Classifies (v,k). Inadmissible pairs are returned, not rejected; only
/// k < 3 or v < k raise InvalidParameter.
Parameters classify(Residue v, int k);

/// Same as classify, but an inadmissible pair raises InvalidParameter
/// naming the residue v mod k(k-1).
Parameters require_admissible(Residue v, int k);

/// A block of residues starting at 0. Ordering and equality ignore the flag.
struct Block {
  std::vector<Residue> elements;
  bool normalized = false;

  std::size_t size() const { return elements.size(); }
  Residue operator[](std::size_t i) const { return elements[i]; }

  friend bool operator==(const Block& a, const Block& b) { return a.elements == b.elements; }
  friend std::strong_ordering operator<=>(const Block& a, const Block& b) {
    return a.elements <=> b.elements;
  }
};

std::string to_string(const Block& b);

/// The arithmetic progression {0, v/k, ..., (k-1)v/k}.
Block short_block(const Parameters& p);

/// All k(k-1) ordered differences b_i - b_j (mod v), sorted ascending.
std::vector<Residue> delta_set(std::span<const Residue> block, Residue v);
inline std::vector<Residue> delta_set(const Block& b, Residue v) { return delta_set(b.elements, v); }

/// Nonzero residues already covered as differences. d and v-d are always
/// stored together.
class DiffTracker {
 public:
  DiffTracker() = default;
  explicit DiffTracker(Residue v) : v_(v), used_(static_cast<std::size_t>(v), 0) {}

  Residue modulus() const { return v_; }
  std::size_t count() const { return count_; }
  bool used(Residue d) const { return used_[static_cast<std::size_t>(d)] != 0; }

  /// Adds every difference of b. Atomic: on CollisionError the tracker is
  /// unchanged. A block with an internal repeat collides with itself.
  void add(const Block& b);
  /// Removes every difference of b. Throws Precondition if any is unused.
  void remove(const Block& b);

  /// Marks the nonzero multiples of v/k covered by the short orbit.
  void mark_short_orbit(const Parameters& p);

  /// Hot-path primitives used by the searches. No checking.
  void mark_pair(Residue d) {
    const Residue e = v_ - d;
    used_[static_cast<std::size_t>(d)] = 1;
    used_[static_cast<std::size_t>(e)] = 1;
    count_ += (d == e) ? 1 : 2;
  }
  void unmark_pair(Residue d) {
    const Residue e = v_ - d;
    used_[static_cast<std::size_t>(d)] = 0;
    used_[static_cast<std::size_t>(e)] = 0;
    count_ -= (d == e) ? 1 : 2;
  }

  std::vector<Residue> used_residues() const;

  friend bool operator==(const DiffTracker&, const DiffTracker&) = default;

 private:
  Residue v_ = 0;
  std::vector<std::uint8_t> used_;
  std::size_t count_ = 0;
};

inline Residue mod(std::int64_t x, Residue v) {
  auto r = static_cast<Residue>(x % v);
  return r < 0 ? r + v : r;
}

}  // namespace dfam
