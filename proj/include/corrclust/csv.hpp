#pragma once

#include <string>
#include <vector>

#include "corrclust/matrix_ops.hpp"

namespace corrclust {

/// Raw comma-separated table: header row plus string cells. Fields may not
/// contain commas (no quoting); surrounding whitespace and trailing CR are
/// stripped. Throws data_error on missing files or ragged rows.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Shortest exact decimal form would suffice for printing, but 17
/// significant digits guarantee bit-identical CSV round-trips.
std::string format_double(double value);

/// strtod with full-cell validation; context names the cell in errors.
double parse_double(const std::string& cell, const std::string& context);

/// Two-view CSV: identifier column followed by numeric columns.
void write_two_view_csv(const std::string& path, const std::string& id_name,
                        const std::vector<std::string>& col_names,
                        const std::vector<std::string>& keys, const Matrix& m);

/// Column index by header name; throws data_error when absent.
std::size_t column_index(const CsvTable& table, const std::string& name);

/// Integer labels read from the named column.
std::vector<int> read_label_column(const std::string& path,
                                   const std::string& column);

}  // namespace corrclust
