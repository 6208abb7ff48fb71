#include "exactpot/table_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "exactpot/errors.hpp"

namespace exactpot {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

namespace {

std::string cell_text(const Cell& cell) {
  if (const double* x = std::get_if<double>(&cell)) return format_number(*x);
  return std::get<std::string>(cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  if (const double* x = std::get_if<double>(&cell)) {
    // JSON has no inf/nan literal; keep them as strings so they survive a re-read.
    if (!std::isfinite(*x)) return format_number(*x);
    return *x;
  }
  return std::get<std::string>(cell);
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  if (!table.title.empty()) out << "# " << table.title << '\n';
  for (const auto& [key, value] : table.meta.items()) {
    out << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  for (std::size_t j = 0; j < table.columns.size(); ++j) out << (j ? "," : "") << table.columns[j];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << cell_text(row[j]);
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["title"] = table.title;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto cells = nlohmann::ordered_json::array();
    for (const Cell& cell : row) cells.push_back(cell_json(cell));
    rows.push_back(std::move(cells));
  }
  doc["rows"] = std::move(rows);
  doc["meta"] = table.meta;
  out << doc.dump(2) << '\n';
}

Table read_json(std::istream& in) {
  nlohmann::ordered_json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON table: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("columns") || !doc.contains("rows")) {
    throw ValidationError("JSON table needs 'columns' and 'rows'");
  }
  Table table;
  table.title = doc.value("title", "");
  table.columns = doc["columns"].get<std::vector<std::string>>();
  for (const auto& row : doc["rows"]) {
    std::vector<Cell> cells;
    for (const auto& cell : row) {
      if (cell.is_number()) {
        cells.emplace_back(cell.get<double>());
      } else if (cell.is_string()) {
        const std::string s = cell.get<std::string>();
        if (s == "nan") {
          cells.emplace_back(std::nan(""));
        } else if (s == "inf" || s == "-inf") {
          cells.emplace_back(s == "inf" ? HUGE_VAL : -HUGE_VAL);
        } else {
          cells.emplace_back(s);
        }
      } else {
        throw ValidationError("JSON table cells must be numbers or strings");
      }
    }
    table.rows.push_back(std::move(cells));
  }
  if (doc.contains("meta")) table.meta = doc["meta"];
  return table;
}

}  // namespace exactpot
