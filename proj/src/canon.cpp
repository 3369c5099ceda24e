#include "dfam/canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dfam {

namespace {

std::vector<Block> sorted_blocks(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

Block normalize_block(std::span<const Residue> s, Residue v) {
  std::vector<Residue> e;
  e.reserve(s.size());
  for (Residue x : s) e.push_back(mod(x, v));
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end())
    throw Error(ErrorKind::InvalidParameter, "block has repeated residues mod " + std::to_string(v));
  const std::size_t n = e.size();
  if (n == 0) return Block{{}, true};

  auto gap = [&](std::size_t i) { return i + 1 < n ? e[i + 1] - e[i] : v - e[n - 1] + e[0]; };
  Residue max_gap = 0;
  for (std::size_t i = 0; i < n; ++i) max_gap = std::max(max_gap, gap(i));

  // Translating by -e[i] turns the rotation starting at i into a sorted tuple.
  std::vector<Residue> best, cand(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gap(i) != max_gap) continue;
    for (std::size_t j = 0; j < n; ++j) cand[j] = mod(static_cast<std::int64_t>(e[(i + j) % n]) - e[i], v);
    if (best.empty() || cand < best) best = cand;
  }
  return Block{std::move(best), true};
}

Block mirror_block(const Block& b, Residue v) {
  std::vector<Residue> m;
  m.reserve(b.size());
  const Residue b2 = b.size() > 1 ? b[1] : 0;
  for (Residue x : b.elements) m.push_back(mod(static_cast<std::int64_t>(b2) - x, v));
  return normalize_block(m, v);
}

DifferenceFamily make_family(const Parameters& p, const std::vector<std::vector<Residue>>& blocks) {
  DifferenceFamily f;
  f.params = p;
  for (const auto& b : blocks) f.full_blocks.push_back(normalize_block(b, p.v));
  std::sort(f.full_blocks.begin(), f.full_blocks.end());
  return f;
}

std::vector<DifferenceFamily> mirror_expand(const DifferenceFamily& f) {
  const std::size_t t = f.full_blocks.size();
  std::vector<DifferenceFamily> out;
  if (t == 0) return {f};
  std::vector<Block> mirrored;
  for (const auto& b : f.full_blocks) mirrored.push_back(mirror_block(b, f.params.v));
  const std::uint64_t combos = std::uint64_t{1} << (t - 1);
  out.reserve(combos);
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    DifferenceFamily g{f.params, {}};
    g.full_blocks.push_back(f.full_blocks[0]);
    for (std::size_t i = 1; i < t; ++i)
      g.full_blocks.push_back((mask >> (i - 1)) & 1 ? mirrored[i] : f.full_blocks[i]);
    g.full_blocks = sorted_blocks(std::move(g.full_blocks));
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Residue> units(Residue v) {
  std::vector<Residue> out;
  for (Residue a = 1; a < v; ++a)
    if (std::gcd(a, v) == 1) out.push_back(a);
  if (v == 1) out.push_back(0);
  return out;
}

DifferenceFamily multiply(const DifferenceFamily& f, Residue a) {
  DifferenceFamily g{f.params, {}};
  std::vector<Residue> img;
  for (const auto& b : f.full_blocks) {
    img.clear();
    for (Residue x : b.elements) img.push_back(mod(static_cast<std::int64_t>(a) * x, f.params.v));
    g.full_blocks.push_back(normalize_block(img, f.params.v));
  }
  g.full_blocks = sorted_blocks(std::move(g.full_blocks));
  return g;
}

namespace {

CanonicalForm key_of(const DifferenceFamily& f) {
  CanonicalForm c;
  for (const auto& b : f.full_blocks) c.key.push_back(b.elements);
  return c;
}

}  // namespace

CanonicalForm canonical_form(const DifferenceFamily& f) {
  CanonicalForm best;
  bool first = true;
  for (Residue a : units(f.params.v)) {
    CanonicalForm c = key_of(multiply(f, a));
    if (first || c < best) {
      best = std::move(c);
      first = false;
    }
  }
  return best;
}

DifferenceFamily family_from_key(const Parameters& p, const CanonicalForm& c) {
  DifferenceFamily f{p, {}};
  for (const auto& b : c.key) f.full_blocks.push_back(Block{b, true});
  return f;
}

std::vector<DifferenceFamily> dedup(std::span<const DifferenceFamily> fs) {
  std::map<CanonicalForm, Parameters> classes;
  for (const auto& f : fs) classes.emplace(canonical_form(f), f.params);
  std::vector<DifferenceFamily> out;
  out.reserve(classes.size());
  for (const auto& [key, p] : classes) out.push_back(family_from_key(p, key));
  return out;
}

std::uint64_t multiplier_automorphisms(const DifferenceFamily& f) {
  const DifferenceFamily self = multiply(f, 1);
  std::uint64_t count = 0;
  for (Residue a : units(f.params.v))
    if (multiply(f, a).full_blocks == self.full_blocks) ++count;
  return count;
}

}  // namespace dfam
