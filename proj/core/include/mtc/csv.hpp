#ifndef MTC_CSV_HPP
#define MTC_CSV_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mtc::csv {

/// Rectangular, column-labeled table of finite numbers; the only
/// output format of the CLI. Serialization is byte-deterministic:
/// 17 significant digits, '.' decimal separator, '\n' line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  void add_row(const std::vector<double>& row);
  void write(std::ostream& os) const;
  std::string to_string() const;

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<std::string>& columns() const { return columns_; }
  double at(std::size_t row, std::size_t col) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> data_;
};

/// 17-significant-digit decimal rendering used for every cell.
std::string format_number(double v);

}  // namespace mtc::csv

#endif
