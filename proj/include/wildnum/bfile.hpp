#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wildnum/natural.hpp"
#include "wildnum/sequence.hpp"

namespace wildnum {

struct BFileEntry {
  std::int64_t index = 0;
  Natural value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// OEIS b-file: "n a(n)" lines with strictly increasing n, plus '#' comment
/// lines kept verbatim (including the leading '#').
struct BFile {
  std::vector<BFileEntry> entries;
  std::vector<std::string> comments;

  friend bool operator==(const BFile&, const BFile&) = default;
};

/// Comments first, then one "n a(n)" line per entry; every line ends in '\n'.
/// Throws UsageError if indices are not strictly increasing or a comment does
/// not start with '#'.
std::string write_bfile(const BFile& bfile);

/// Exhausted records become value 0 plus a comment naming the reason.
/// Throws UsageError for records not in strictly increasing index order.
BFile to_bfile(std::span<const SequenceRecord> records);

inline std::string write_bfile(std::span<const SequenceRecord> records) {
  return write_bfile(to_bfile(records));
}

/// Blank lines are skipped; '#' lines become comments. Each other line must
/// hold exactly two integer fields separated by whitespace; the index may be
/// signed, the value is a Natural of any size. Trailing '\r' is tolerated.
/// Throws ParseError (with line number) or FormatError for non-increasing
/// indices.
BFile read_bfile(std::string_view text);

/// Turns b-file entries into a table. Throws UsageError unless indices are
/// nonnegative and consecutive.
ReferenceTable to_reference(const BFile& bfile, std::string name);

}  // namespace wildnum
