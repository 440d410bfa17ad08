#include "qwell/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qwell {

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::domain_error("unknown output format: " + name);
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_to_csv(const Table::Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return {};
  if (const double* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const long long* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

nlohmann::ordered_json cell_to_json(const Table::Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return nullptr;
  if (const double* d = std::get_if<double>(&cell)) return *d;
  if (const long long* i = std::get_if<long long>(&cell)) return *i;
  return std::get<std::string>(cell);
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  for (const std::string& comment : table.comments) out << "# " << comment << "\n";
  for (size_t i = 0; i < table.columns.size(); ++i)
    out << table.columns[i] << (i + 1 < table.columns.size() ? "," : "");
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      out << cell_to_csv(row[i]) << (i + 1 < row.size() ? "," : "");
    out << "\n";
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_to_json(row[i]);
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << "\n";
}

void emit_table(const Table& table, OutputFormat format, const std::filesystem::path& path) {
  const auto write = [&](std::ostream& out) {
    format == OutputFormat::Csv ? write_csv(table, out) : write_json(table, out);
  };
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  write(out);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Table parse_csv(std::istream& in) {
  Table table;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.starts_with("#")) {
      table.comments.push_back(line.size() > 2 ? line.substr(2) : std::string());
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (line.ends_with(',')) fields.emplace_back();
    if (!header_seen) {
      table.columns = fields;
      header_seen = true;
      continue;
    }
    std::vector<Table::Cell> row;
    for (const std::string& f : fields) {
      if (f.empty()) {
        row.emplace_back(std::monostate{});
        continue;
      }
      double value = 0.0;
      const auto res = std::from_chars(f.data(), f.data() + f.size(), value);
      if (res.ec == std::errc() && res.ptr == f.data() + f.size())
        row.emplace_back(value);
      else
        row.emplace_back(f);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

Table::Cell opt_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

}  // namespace

Table to_table(const std::vector<ComparisonRow>& rows) {
  Table table;
  table.columns = {"potential", "xi", "n", "l", "method", "energy", "ref_energy",
                   "abs_err", "rel_err"};
  for (const ComparisonRow& row : rows) {
    const auto add = [&](Method method, const std::optional<double>& energy,
                         const std::optional<double>& abs_err,
                         const std::optional<double>& rel_err) {
      if (!energy) return;
      table.rows.push_back({to_string(row.kind), row.xi, static_cast<long long>(row.n),
                            static_cast<long long>(row.l), to_string(method), *energy,
                            opt_cell(row.e_reference), opt_cell(abs_err), opt_cell(rel_err)});
    };
    add(Method::Koksal, row.e_koksal, row.abs_err_koksal, row.rel_err_koksal);
    add(Method::Variational, row.e_variational, row.abs_err_variational,
        row.rel_err_variational);
    add(Method::Reference, row.e_reference, std::nullopt, std::nullopt);
  }
  return table;
}

Table to_table(const std::vector<CriticalRow>& rows) {
  Table table;
  table.columns = {"potential", "l", "method", "xi_crit", "ref_xi", "abs_err", "rel_err"};
  for (const CriticalRow& row : rows) {
    const auto add = [&](Method method, const std::optional<double>& xi, bool with_err) {
      if (!xi) return;
      std::optional<double> abs_err, rel_err;
      if (with_err) {
        abs_err = std::fabs(*xi - row.xi_reference);
        if (row.xi_reference != 0.0) rel_err = *abs_err / std::fabs(row.xi_reference);
      }
      table.rows.push_back({to_string(row.kind), static_cast<long long>(row.l),
                            to_string(method), *xi, row.xi_reference, opt_cell(abs_err),
                            opt_cell(rel_err)});
    };
    add(Method::Koksal, row.xi_koksal, true);
    add(Method::Variational, row.xi_variational, true);
    add(Method::Reference, row.xi_reference, false);
  }
  return table;
}

}  // namespace qwell
