#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "qwell/analysis.hpp"

namespace qwell {

enum class OutputFormat { Csv, Json };

OutputFormat output_format_from_string(const std::string& name);

/// A serializable table. Cells are empty, numeric, integer, or text; empty
/// cells serialize as an empty CSV field and JSON null. Comment lines appear
/// as '#'-prefixed lines in CSV only.
struct Table {
  using Cell = std::variant<std::monostate, double, long long, std::string>;
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

/// Writes the table to `path` (or stdout when empty). Byte-deterministic.
void emit_table(const Table& table, OutputFormat format, const std::filesystem::path& path);

/// Parses CSV produced by write_csv back into a table (comments preserved,
/// numeric-looking cells parsed as doubles).
Table parse_csv(std::istream& in);

// Long-format conversions: one output row per available method.
Table to_table(const std::vector<ComparisonRow>& rows);
Table to_table(const std::vector<CriticalRow>& rows);

}  // namespace qwell
