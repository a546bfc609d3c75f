#pragma once

#include <string>
#include <utility>
#include <vector>

namespace scband {

// Tabular report emitted by the CLI: fixed 12-significant-digit decimal
// formatting, one formula tag per row.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> row_refs;
};

std::string format_sig12(double value);

// Comma-separated, header row, '.' decimal separator, LF line endings.
std::string to_csv(const Report& report);

// {"command": ..., "params": {...}, "columns": [...], "rows": [[...]],
//  "paper_refs": [...]} with numbers rounded through the same 12-digit
// formatting as the CSV output.
std::string to_json(const Report& report);

}  // namespace scband
