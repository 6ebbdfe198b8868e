#include "wildnum/bfile.hpp"

#include <charconv>

#include "wildnum/errors.hpp"

namespace wildnum {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (is_space(s.front()))) s.remove_prefix(1);
  while (!s.empty() && (is_space(s.back()) || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_index(std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("bad index \"" + std::string(field) + "\"", line);
  }
  return value;
}

Natural parse_value(std::string_view field, std::size_t line) {
  try {
    return Natural::parse(field);
  } catch (const ParseError&) {
    throw ParseError("bad value \"" + std::string(field) + "\"", line);
  }
}

}  // namespace

std::string write_bfile(const BFile& bfile) {
  std::string out;
  for (const auto& comment : bfile.comments) {
    if (comment.empty() || comment.front() != '#' ||
        comment.find('\n') != std::string::npos) {
      throw UsageError("b-file comment must be a single line starting with '#'");
    }
    out += comment;
    out += '\n';
  }
  for (std::size_t i = 0; i < bfile.entries.size(); ++i) {
    const auto& e = bfile.entries[i];
    if (i > 0 && e.index <= bfile.entries[i - 1].index) {
      throw UsageError("b-file entries must have strictly increasing indices (index " +
                       std::to_string(e.index) + " follows " +
                       std::to_string(bfile.entries[i - 1].index) + ")");
    }
    out += std::to_string(e.index);
    out += ' ';
    out += e.value.to_string();
    out += '\n';
  }
  return out;
}

BFile to_bfile(std::span<const SequenceRecord> records) {
  BFile bfile;
  bfile.entries.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (i > 0 && rec.index <= records[i - 1].index) {
      throw UsageError("records are not in increasing index order");
    }
    if (rec.index > static_cast<std::uint64_t>(INT64_MAX)) {
      throw UsageError("record index too large for a b-file");
    }
    if (rec.exhausted) {
      bfile.comments.push_back("# a(" + std::to_string(rec.index) + ") = 0: exhausted (" +
                               std::string(to_string(*rec.exhausted)) + ")");
    }
    bfile.entries.push_back(
        {static_cast<std::int64_t>(rec.index), rec.exhausted ? Natural{} : rec.value});
  }
  return bfile;
}

BFile read_bfile(std::string_view text) {
  BFile bfile;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      // Verbatim unless indented; indented comments lose the indent.
      if (raw.front() == '#') {
        if (raw.back() == '\r') raw.remove_suffix(1);
        bfile.comments.emplace_back(raw);
      } else {
        bfile.comments.emplace_back(line);
      }
      continue;
    }
    std::size_t split = 0;
    while (split < line.size() && !is_space(line[split])) ++split;
    std::string_view index_field = line.substr(0, split);
    std::string_view value_field = trim(line.substr(split));
    if (value_field.empty()) throw ParseError("expected \"index value\"", line_no);
    for (char c : value_field) {
      if (is_space(c)) throw ParseError("more than two fields", line_no);
    }
    BFileEntry entry{parse_index(index_field, line_no), parse_value(value_field, line_no)};
    if (!bfile.entries.empty() && entry.index <= bfile.entries.back().index) {
      throw FormatError("index " + std::to_string(entry.index) + " does not increase (previous " +
                            std::to_string(bfile.entries.back().index) + ")",
                        line_no);
    }
    bfile.entries.push_back(std::move(entry));
  }
  return bfile;
}

ReferenceTable to_reference(const BFile& bfile, std::string name) {
  ReferenceTable table;
  table.name = std::move(name);
  if (bfile.entries.empty()) throw UsageError("b-file \"" + table.name + "\" has no entries");
  if (bfile.entries.front().index < 0) {
    throw UsageError("reference indices must be nonnegative");
  }
  table.offset = static_cast<std::uint64_t>(bfile.entries.front().index);
  for (std::size_t i = 0; i < bfile.entries.size(); ++i) {
    if (bfile.entries[i].index != bfile.entries.front().index + static_cast<std::int64_t>(i)) {
      throw UsageError("reference indices must be consecutive (gap before index " +
                       std::to_string(bfile.entries[i].index) + ")");
    }
    table.values.push_back(bfile.entries[i].value);
  }
  return table;
}

}  // namespace wildnum
