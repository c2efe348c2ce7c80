#pragma once

#include "core/eco.hpp"
#include "core/enumerator.hpp"
#include "core/series.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordeco {

// Uniform result shape for every command: named columns, string cells and
// free-form notes. Integers are always decimal strings.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
};

enum class Format { Text, Csv, Json };

std::optional<Format> parse_format(std::string_view name);

// Text: aligned columns with notes appended as "note: ..." lines.
// Csv: header and rows only; notes are not part of CSV output.
// Json: {"columns": [...], "rows": [[...]], "notes": [...]}.
std::string render(const Table& table, Format format);

Table alpha_to_table(const AlphaMatrix& alpha);
Table eco_to_table(const EcoMatrix& matrix);
Table series_to_table(const TruncatedSeries& series);

} // namespace wordeco
