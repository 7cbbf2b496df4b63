#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grover {

// Column-labeled numeric table; the common currency between the sweep/figure
// producers and the CSV writer.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// 17 significant digits (%.17g): round-trips any double exactly, and renders
// integral values without a fractional part.
std::string format_value(double v);

// Header row, then one comma-separated line per data row. Output depends only
// on the table contents, so identical tables serialize byte-identically.
void write_csv(std::ostream& out, const Table& table);

}  // namespace grover
