#pragma once

#include <string>
#include <vector>

#include "qcarpet/core_model.hpp"

namespace qcarpet {

// Shortest-safe decimal for binary64: 17 significant digits, locale-free.
std::string format_double(double v);

// Grid description lines (without the "# " prefix).
std::vector<std::string> grid_metadata(const CarpetField& field);

// "# " lines: grid metadata followed by `provenance`, then nt rows of nx
// comma-separated values (row = time slice, column = increasing x).
void write_csv(const CarpetField& field,
               const std::vector<std::string>& provenance,
               const std::string& path);

struct CsvTable {
  std::vector<std::string> metadata;  // comment lines without "# "
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path);

}  // namespace qcarpet
