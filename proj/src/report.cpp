#include "scband/report.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace scband {

std::string format_sig12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string to_csv(const Report& report) {
  std::string out;
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    if (c) out += ",";
    out += report.columns[c];
  }
  out += "\n";
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += format_sig12(row[c]);
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  j["params"] = params;
  j["columns"] = report.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (double v : row) r.push_back(std::strtod(format_sig12(v).c_str(), nullptr));
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["paper_refs"] = report.row_refs;
  return j.dump(2) + "\n";
}

}  // namespace scband
