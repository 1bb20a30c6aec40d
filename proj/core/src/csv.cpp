#include "mtc/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mtc::csv {

CsvTable::CsvTable(std::vector<std::string> columns)
    : columns_(std::move(columns)) {
  if (columns_.empty())
    throw std::invalid_argument("CsvTable: at least one column required");
}

void CsvTable::add_row(const std::vector<double>& row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("CsvTable: row width mismatch");
  for (double v : row)
    if (!std::isfinite(v))
      throw std::invalid_argument("CsvTable: non-finite cell rejected");
  data_.push_back(row);
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvTable::write(std::ostream& os) const {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (j) os << ',';
    os << columns_[j];
  }
  os << '\n';
  for (const auto& row : data_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      os << format_number(row[j]);
    }
    os << '\n';
  }
}

std::string CsvTable::to_string() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

double CsvTable::at(std::size_t row, std::size_t col) const {
  return data_.at(row).at(col);
}

}  // namespace mtc::csv
