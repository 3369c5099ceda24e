#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfam/canon.hpp"

namespace dfam {

/// A family as stored on disk: full blocks only, short block implied by (v,k).
struct FamilyRecord {
  Residue v = 0;
  int k = 0;
  std::vector<std::vector<Residue>> blocks;
  std::string source;
  bool normalized = false;
  std::optional<std::uint64_t> automorphisms;  ///< published multiplier-automorphism count

  friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

/// Published families for (121,6), (126,6) and (169,7). Empty for anything else.
std::vector<FamilyRecord> builtin_families(Residue v, int k);
/// Every builtin record, in (v,k) order.
std::vector<FamilyRecord> builtin_families();

FamilyRecord to_record(const DifferenceFamily& f, std::string source);
/// Classifies (v,k), normalizes each block and sorts them. Does not verify.
DifferenceFamily to_family(const FamilyRecord& r);

/// Parses "{{0, 7, 9}, {0, 11, 12}}". Blocks are kept verbatim; the
/// normalized flag reports whether every block was already in normal form.
FamilyRecord parse_text(std::string_view text, Residue v, int k, std::string source = "text");
std::string render_text(const FamilyRecord& r);

/// One compact JSON object per line with keys v, k, blocks, source,
/// normalized, then automorphisms when present.
std::string to_json_line(const FamilyRecord& r);
FamilyRecord from_json_line(std::string_view line);

void write_jsonl(std::ostream& out, const std::vector<FamilyRecord>& records);
/// Blank lines and lines starting with '#' are skipped. Errors name the line.
std::vector<FamilyRecord> read_jsonl(std::istream& in);
void write_jsonl(const std::string& path, const std::vector<FamilyRecord>& records);
std::vector<FamilyRecord> read_jsonl(const std::string& path);

}  // namespace dfam
