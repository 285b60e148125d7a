#include "medrx/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace medrx::report {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

void CsvTable::add_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (const double v : values) cells.push_back(format_double(v));
  add_row(cells);
}

void CsvTable::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns.size()) {
    throw std::invalid_argument("CsvTable: row width " +
                                std::to_string(cells.size()) +
                                " does not match " +
                                std::to_string(columns.size()) + " columns");
  }
  rows.push_back(cells);
}

namespace {

std::string provenance_lines(const Provenance& prov) {
  std::ostringstream os;
  os << "# config_hash=" << prov.config_hash << "\n";
  os << "# seed=" << prov.seed << "\n";
  os << "# version=" << prov.version << "\n";
  return os.str();
}

}  // namespace

std::string render_csv(const CsvTable& table, const Provenance& prov) {
  std::ostringstream os;
  os << provenance_lines(prov);
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << (c ? "," : "") << table.columns[c];
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << row[c];
    }
    os << "\n";
  }
  return os.str();
}

CsvTable parse_csv(const std::string& text) {
  CsvTable table;
  std::istringstream is(text);
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    if (!have_header) {
      table.columns = cells;
      have_header = true;
    } else {
      table.add_row(cells);
    }
  }
  if (!have_header) throw std::invalid_argument("parse_csv: no header found");
  return table;
}

std::string render_json(const nlohmann::json& payload, const Provenance& prov) {
  nlohmann::json root;
  root["provenance"] = {{"config_hash", prov.config_hash},
                        {"seed", prov.seed},
                        {"version", prov.version}};
  root["data"] = payload;
  return root.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << content;
}

}  // namespace medrx::report
