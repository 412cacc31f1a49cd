#include "qcarpet/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qcarpet/errors.hpp"

namespace qcarpet {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::vector<std::string> grid_metadata(const CarpetField& field) {
  const auto& g = field.grid();
  return {
      "nx = " + std::to_string(g.x.n),
      "nt = " + std::to_string(g.t.n),
      "x_range = " + format_double(g.x.lo) + " " + format_double(g.x.hi),
      "t_range = " + format_double(g.t.lo) + " " + format_double(g.t.hi),
      std::string("signed = ") + (field.is_signed() ? "true" : "false"),
  };
}

void write_csv(const CarpetField& field,
               const std::vector<std::string>& provenance,
               const std::string& path) {
  std::ostringstream body;
  for (const auto& line : grid_metadata(field)) body << "# " << line << '\n';
  for (const auto& line : provenance) body << "# " << line << '\n';
  for (std::size_t it = 0; it < field.nt(); ++it) {
    const auto col = field.column(it);
    for (std::size_t ix = 0; ix < col.size(); ++ix) {
      if (ix) body << ',';
      body << format_double(col[ix]);
    }
    body << '\n';
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", path);
  const std::string s = body.str();
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
  if (!out) throw IoError("write failed", path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path);
  CsvTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      table.metadata.push_back(line.substr(2));
      continue;
    }
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t end = std::min(line.find(',', pos), line.size());
      double v = 0.0;
      const auto res = std::from_chars(line.data() + pos, line.data() + end, v);
      if (res.ec != std::errc{} || res.ptr != line.data() + end) {
        throw IoError("malformed CSV value", path);
      }
      row.push_back(v);
      pos = end + 1;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace qcarpet
