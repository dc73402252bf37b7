#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extel {

/// Column-named numeric table, written with shortest round-trip formatting.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Throws std::invalid_argument if the row width differs from the header.
  void add_row(std::vector<double> row);
};

/// Header line, then one line per row; '.' decimal separator, '\n' endings.
void write_csv(std::ostream& out, const Table& table);
std::string to_csv(const Table& table);

/// Array of row objects keyed by column name. Non-finite values become null.
std::string to_json(const Table& table);

}  // namespace extel
