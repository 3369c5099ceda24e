#pragma once

// Test-only generators and brute-force reference routines. Nothing here calls
// into the library paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace dfam::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0xd1ffu);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Every v <= max_v with v = 1 or k mod k(k-1) and at least min_blocks full
/// blocks, for k in [3, max_k]. Random Sidon sampling wants min_blocks >= 2;
/// near v = k(k-1)+1 such blocks are too rare to hit by chance.
inline std::vector<std::pair<int, int>> admissible_pairs(int max_v, int max_k, int min_blocks = 2) {
  std::vector<std::pair<int, int>> out;
  for (int k = 3; k <= max_k; ++k)
    for (int v = min_blocks * k * (k - 1) + 1; v <= max_v; ++v) {
      const int r = v % (k * (k - 1));
      if (r == 1 || r == k) out.emplace_back(v, k);
    }
  return out;
}

/// Random k-subset of Z_v with all k(k-1) differences distinct. Returns
/// the residues in random order, translated by a random offset.
inline std::vector<int> random_sidon_block(int v, int k) {
  for (;;) {
    std::vector<int> s;
    std::vector<char> diff(static_cast<std::size_t>(v), 0);
    int attempts = 0;
    while (static_cast<int>(s.size()) < k && attempts++ < 200) {
      const int x = uniform(0, v - 1);
      bool ok = std::find(s.begin(), s.end(), x) == s.end();
      std::vector<int> fresh;
      for (int y : s) {
        if (!ok) break;
        const int d1 = ((x - y) % v + v) % v, d2 = v - d1;
        if (d1 == d2 || diff[d1] || diff[d2]) {
          ok = false;
          break;
        }
        diff[d1] = diff[d2] = 1;
        fresh.push_back(d1);
      }
      if (!ok) {
        for (int d : fresh) diff[d] = diff[v - d] = 0;
        continue;
      }
      s.push_back(x);
    }
    if (static_cast<int>(s.size()) == k) {
      std::shuffle(s.begin(), s.end(), rng());
      return s;
    }
  }
}

/// Reference normalizer: try every translation, keep those whose sorted
/// form starts with 0 followed by a largest circular gap, take the least.
inline std::vector<int> brute_normalize(const std::vector<int>& s, int v) {
  std::vector<int> best;
  for (int c = 0; c < v; ++c) {
    std::vector<int> t;
    for (int x : s) t.push_back(((x - c) % v + v) % v);
    std::sort(t.begin(), t.end());
    if (t[0] != 0) continue;
    int max_gap = v - t.back();
    for (std::size_t i = 0; i + 1 < t.size(); ++i) max_gap = std::max(max_gap, t[i + 1] - t[i]);
    if (t.size() > 1 && t[1] - t[0] != max_gap) continue;
    if (best.empty() || t < best) best = t;
  }
  return best;
}

/// Reference difference multiset by counting.
inline std::vector<int> brute_deltas(const std::vector<int>& s, int v) {
  std::vector<int> out;
  for (int a : s)
    for (int b : s)
      if (a != b) out.push_back(((a - b) % v + v) % v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dfam::testing
