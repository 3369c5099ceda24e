#include "dfam/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace dfam {

namespace {

class Bits {
 public:
  explicit Bits(Residue n = 0) : words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}
  void set(Residue i) { words_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(Residue i) const { return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1; }
  bool disjoint(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return false;
    return true;
  }
  void toggle(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Candidate {
  std::vector<Residue> elements;
  Bits differences;
};

// Every Sidon k-subset through 0 that is already in normal form. Each
// translate class of a Sidon set is hit exactly once.
std::vector<Candidate> candidate_blocks(const Parameters& p) {
  std::vector<Candidate> out;
  const auto k = static_cast<std::size_t>(p.k);
  std::vector<Residue> s(k);
  std::vector<int> seen(static_cast<std::size_t>(p.v), 0);
  int stamp = 0;
  // s[0] = 0; s[1..k-1] walks all increasing tuples in [1, v).
  for (std::size_t i = 1; i < k; ++i) s[i] = static_cast<Residue>(i);
  for (;;) {
    ++stamp;
    bool sidon = true;
    for (std::size_t i = 0; i < k && sidon; ++i)
      for (std::size_t j = 0; j < k && sidon; ++j) {
        if (i == j) continue;
        auto& slot = seen[static_cast<std::size_t>(mod(s[i] - s[j], p.v))];
        if (slot == stamp) sidon = false;
        slot = stamp;
      }
    if (sidon && normalize_block(s, p.v).elements == s) {
      Candidate c{s, Bits(p.v)};
      for (Residue d : delta_set(s, p.v)) c.differences.set(d);
      out.push_back(std::move(c));
    }
    std::size_t i = k - 1;
    while (i >= 1 && s[i] == p.v - static_cast<Residue>(k - i)) --i;
    if (i == 0) break;
    ++s[i];
    for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

class ExactCover {
 public:
  ExactCover(const Parameters& p, std::vector<Candidate> blocks)
      : p_(p), blocks_(std::move(blocks)), covered_(p.v), by_difference_(static_cast<std::size_t>(p.v)) {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (Residue d = 1; d < p.v; ++d)
        if (blocks_[i].differences.test(d)) by_difference_[static_cast<std::size_t>(d)].push_back(i);
    if (p.has_short_block()) {
      for (Residue d = p.short_step(); d < p.v; d += p.short_step()) covered_.set(d);
    }
  }

  std::vector<DifferenceFamily> run() {
    solve(1);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void solve(Residue from) {
    Residue d = from;
    while (d < p_.v && covered_.test(d)) ++d;
    if (d == p_.v) {
      if (chosen_.size() == static_cast<std::size_t>(p_.t)) record();
      return;
    }
    if (chosen_.size() == static_cast<std::size_t>(p_.t)) return;
    for (std::size_t i : by_difference_[static_cast<std::size_t>(d)]) {
      const auto& c = blocks_[i];
      if (!covered_.disjoint(c.differences)) continue;
      covered_.toggle(c.differences);
      chosen_.push_back(i);
      solve(d + 1);
      chosen_.pop_back();
      covered_.toggle(c.differences);
    }
  }

  void record() {
    DifferenceFamily f{p_, {}};
    for (std::size_t i : chosen_) f.full_blocks.push_back(Block{blocks_[i].elements, true});
    std::sort(f.full_blocks.begin(), f.full_blocks.end());
    found_.push_back(std::move(f));
  }

  Parameters p_;
  std::vector<Candidate> blocks_;
  Bits covered_;
  std::vector<std::vector<std::size_t>> by_difference_;
  std::vector<std::size_t> chosen_;
  std::vector<DifferenceFamily> found_;
};

}  // namespace

std::vector<DifferenceFamily> oracle_enumerate(const Parameters& p, Residue cap) {
  if (p.admissibility == Admissibility::Inadmissible)
    throw Error(ErrorKind::InvalidParameter, "oracle needs admissible parameters");
  if (p.v > cap)
    throw Error(ErrorKind::CapExceeded, "oracle refuses v=" + std::to_string(p.v) + " above the cap of " +
                                            std::to_string(cap) +
                                            "; brute force grows too fast, raise the cap explicitly to proceed");
  if (p.t == 0) return {DifferenceFamily{p, {}}};
  return ExactCover(p, candidate_blocks(p)).run();
}

std::size_t oracle_classes(const Parameters& p, Residue cap) {
  const auto fs = oracle_enumerate(p, cap);
  return dedup(fs).size();
}

}  // namespace dfam
