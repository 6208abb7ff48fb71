#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace exactpot {

using Cell = std::variant<double, std::string>;

/// Column-major report: named columns, rows of numbers or short labels, and
/// free-form metadata.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

/// 17 significant digits, '.' decimal point, locale independent.
std::string format_number(double x);

/// Metadata as leading "# key: value" lines, then the header and the rows.
void write_csv(const Table& table, std::ostream& out);

void write_json(const Table& table, std::ostream& out);
Table read_json(std::istream& in);

}  // namespace exactpot
