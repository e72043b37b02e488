#include "corrclust/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "corrclust/errors.hpp"

namespace corrclust {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) {
    cells.push_back(trim(cell));
  }
  if (!line.empty() && line.back() == ',') {
    cells.push_back("");
  }
  return cells;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw data_error("cannot open " + path);
  }
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) {
    throw data_error(path + ": missing header row");
  }
  table.header = split_line(line);
  while (std::getline(in, line)) {
    if (trim(line).empty()) {
      continue;
    }
    auto cells = split_line(line);
    if (cells.size() != table.header.size()) {
      throw data_error(path + ": row with " + std::to_string(cells.size()) +
                       " cells, expected " +
                       std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) {
    throw data_error("cannot write " + path);
  }
  for (std::size_t j = 0; j < header.size(); ++j) {
    out << (j ? "," : "") << header[j];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? "," : "") << row[j];
    }
    out << '\n';
  }
  if (!out) {
    throw data_error("write failed for " + path);
  }
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

double parse_double(const std::string& cell, const std::string& context) {
  if (cell.empty()) {
    throw data_error(context + ": empty numeric cell");
  }
  char* end = nullptr;
  const double value = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size()) {
    throw data_error(context + ": non-numeric cell '" + cell + "'");
  }
  return value;
}

void write_two_view_csv(const std::string& path, const std::string& id_name,
                        const std::vector<std::string>& col_names,
                        const std::vector<std::string>& keys, const Matrix& m) {
  std::vector<std::string> header;
  header.push_back(id_name);
  header.insert(header.end(), col_names.begin(), col_names.end());
  std::vector<std::vector<std::string>> rows(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    rows[i].push_back(keys[i]);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rows[i].push_back(format_double(m(i, j)));
    }
  }
  write_csv(path, header, rows);
}

std::size_t column_index(const CsvTable& table, const std::string& name) {
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (table.header[j] == name) {
      return j;
    }
  }
  throw data_error("missing column '" + name + "'");
}

std::vector<int> read_label_column(const std::string& path,
                                   const std::string& column) {
  const CsvTable table = read_csv(path);
  const std::size_t idx = column_index(table, column);
  std::vector<int> labels;
  labels.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    const double value = parse_double(row[idx], path);
    labels.push_back(static_cast<int>(value));
  }
  return labels;
}

}  // namespace corrclust
