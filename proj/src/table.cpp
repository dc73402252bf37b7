#include "extel/table.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "extel/numerics.hpp"

namespace extel {

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("table row has " + std::to_string(row.size()) +
                                " values, expected " + std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_double(row[i]);
    }
    out << '\n';
  }
}

std::string to_csv(const Table& table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

std::string to_json(const Table& table) {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << "{";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      const double v = table.rows[r][i];
      out << (i ? ", " : "") << '"' << table.columns[i] << "\": "
          << (std::isfinite(v) ? format_double(v) : std::string("null"));
    }
    out << "}";
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
  return out.str();
}

}  // namespace extel
