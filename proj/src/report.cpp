#include "qsym/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qsym {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

void ReportTable::add_row(Row row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("ReportTable: row width mismatch");
  rows_.push_back(std::move(row));
}

namespace {

std::string cell_text(const ReportTable::Cell& c) {
  if (std::holds_alternative<std::int64_t>(c))
    return std::to_string(std::get<std::int64_t>(c));
  if (std::holds_alternative<double>(c))
    return format_real(std::get<double>(c));
  return std::get<std::string>(c);
}

}  // namespace

std::string ReportTable::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < columns_.size(); ++i)
    out << (i ? "," : "") << columns_[i];
  out << "\n";
  for (const Row& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << cell_text(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string ReportTable::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Row& row : rows_) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      if (std::holds_alternative<std::int64_t>(c))
        obj[columns_[i]] = std::get<std::int64_t>(c);
      else if (std::holds_alternative<double>(c))
        obj[columns_[i]] = format_real(std::get<double>(c));
      else
        obj[columns_[i]] = std::get<std::string>(c);
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        cells.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    cells.push_back(cur);
    out.push_back(std::move(cells));
  }
  return out;
}

}  // namespace qsym
