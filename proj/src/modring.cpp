#include "dfam/modring.hpp"

#include <algorithm>

namespace dfam {

const char* to_string(Admissibility a) {
  switch (a) {
    case Admissibility::FullOnly:
      return "FullOnly";
    case Admissibility::WithShortBlock:
      return "WithShortBlock";
    case Admissibility::Inadmissible:
      return "Inadmissible";
  }
  return "?";
}

Parameters classify(Residue v, int k) {
  if (k < 3) throw Error(ErrorKind::InvalidParameter, "k must be at least 3 (got " + std::to_string(k) + ")");
  if (v < k)
    throw Error(ErrorKind::InvalidParameter,
                "v must be at least k (got v=" + std::to_string(v) + ", k=" + std::to_string(k) + ")");
  Parameters p;
  p.v = v;
  p.k = k;
  const Residue kk = static_cast<Residue>(k) * (k - 1);
  p.t = static_cast<int>(v / kk);
  const Residue r = v % kk;
  if (r == 1)
    p.admissibility = Admissibility::FullOnly;
  else if (r == k)
    p.admissibility = Admissibility::WithShortBlock;
  else
    p.admissibility = Admissibility::Inadmissible;
  return p;
}

Parameters require_admissible(Residue v, int k) {
  Parameters p = classify(v, k);
  if (p.admissibility == Admissibility::Inadmissible) {
    const Residue kk = static_cast<Residue>(k) * (k - 1);
    throw Error(ErrorKind::InvalidParameter,
                "(v,k)=(" + std::to_string(v) + "," + std::to_string(k) + ") is inadmissible: " +
                    std::to_string(v) + " mod " + std::to_string(kk) + " = " + std::to_string(v % kk) +
                    ", expected 1 or " + std::to_string(k));
  }
  return p;
}

std::string to_string(const Block& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b[i]);
  }
  return s + ")";
}

Block short_block(const Parameters& p) {
  if (!p.has_short_block())
    throw Error(ErrorKind::Precondition,
                std::string("short block requires WithShortBlock parameters, got ") + to_string(p.admissibility));
  Block b;
  const Residue step = p.short_step();
  for (int i = 0; i < p.k; ++i) b.elements.push_back(step * i);
  b.normalized = true;
  return b;
}

std::vector<Residue> delta_set(std::span<const Residue> block, Residue v) {
  std::vector<Residue> out;
  out.reserve(block.size() * (block.size() - 1));
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = 0; j < block.size(); ++j)
      if (i != j) out.push_back(mod(static_cast<std::int64_t>(block[i]) - block[j], v));
  std::sort(out.begin(), out.end());
  return out;
}

void DiffTracker::add(const Block& b) {
  const auto ds = delta_set(b, v_);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] == 0) throw CollisionError(0);
    if (used(ds[i]) || (i > 0 && ds[i] == ds[i - 1])) throw CollisionError(ds[i]);
  }
  for (Residue d : ds) {
    used_[static_cast<std::size_t>(d)] = 1;
  }
  count_ += ds.size();
}

void DiffTracker::remove(const Block& b) {
  const auto ds = delta_set(b, v_);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const Residue d = ds[i];
    if (d == 0 || !used(d) || (i > 0 && d == ds[i - 1]))
      throw Error(ErrorKind::Precondition,
                  "cannot remove " + to_string(b) + ": difference " + std::to_string(d) + " is not in use");
  }
  for (Residue d : ds) used_[static_cast<std::size_t>(d)] = 0;
  count_ -= ds.size();
}

void DiffTracker::mark_short_orbit(const Parameters& p) {
  if (!p.has_short_block()) return;
  const Residue step = p.short_step();
  for (Residue d = step; d < v_; d += step) {
    if (!used(d)) {
      used_[static_cast<std::size_t>(d)] = 1;
      ++count_;
    }
  }
}

std::vector<Residue> DiffTracker::used_residues() const {
  std::vector<Residue> out;
  for (Residue d = 1; d < v_; ++d)
    if (used(d)) out.push_back(d);
  return out;
}

}  // namespace dfam
