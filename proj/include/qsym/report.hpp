#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qsym {

/// %.15g rendering used for every real in reports.
std::string format_real(double v);

/// Flat table with a stable column order; the unit all commands emit.
class ReportTable {
 public:
  using Cell = std::variant<std::int64_t, double, std::string>;
  using Row = std::vector<Cell>;

  explicit ReportTable(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void add_row(Row row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }

  std::string to_csv() const;
  std::string to_json() const;  // array of objects, keys in column order

 private:
  std::vector<std::string> columns_;
  std::vector<Row> rows_;
};

/// Minimal CSV reader for round-trip checks (no quoting in our tables).
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace qsym
