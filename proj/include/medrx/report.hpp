#ifndef MEDRX_REPORT_HPP
#define MEDRX_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

// Plot-ready output emitters. Every file starts with provenance comment
// lines (config hash, seed, tool version) and serializes doubles with 17
// significant digits so values round-trip losslessly.

namespace medrx::report {

struct Provenance {
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string version;
};

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // pre-rendered cells

  void add_row(const std::vector<double>& values);
  void add_row(const std::vector<std::string>& cells);
};

std::string format_double(double v);

std::string render_csv(const CsvTable& table, const Provenance& prov);

// Parses a CSV produced by render_csv (comment lines skipped). Throws on
// structural problems; used by the round-trip tests.
CsvTable parse_csv(const std::string& text);

std::string render_json(const nlohmann::json& payload, const Provenance& prov);

// Writes `content` to `path` (parent directory must exist).
void write_file(const std::string& path, const std::string& content);

}  // namespace medrx::report

#endif  // MEDRX_REPORT_HPP
