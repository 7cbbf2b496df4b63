#include "groverphase/csv.hpp"

#include <cstdio>
#include <ostream>

namespace grover {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) {
      out << ',';
    }
    out << table.columns[c];
  }
  out << '\n';
  for (const std::vector<double>& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        out << ',';
      }
      out << format_value(row[c]);
    }
    out << '\n';
  }
}

}  // namespace grover
