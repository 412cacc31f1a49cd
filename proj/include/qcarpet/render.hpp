#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcarpet/core_model.hpp"

namespace qcarpet {

enum class Colormap {
  density,    // gray (128,128,128) at 0 -> red (255,0,0) at norm
  diverging,  // blue at -norm -> gray at 0 -> red at +norm
};

enum class OutputFormat { ppm, csv };

struct RenderSpec {
  Colormap colormap = Colormap::density;
  // Empty means normalise to the field's global max |value|.
  std::optional<double> fixed_norm;
  OutputFormat format = OutputFormat::ppm;
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Row-major RGB raster, row 0 at the top.
struct Raster {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Rgb> pixels;
};

Rgb map_color(double value, double norm, Colormap map);

// Time runs left to right; position increases upward (top row = largest x).
Raster colorize(const CarpetField& field, const RenderSpec& spec);

// Binary P6. Throws before writing anything if the raster is inconsistent.
void write_ppm(const Raster& raster, const std::string& path);

// Writes "# "-prefixed lines, one per entry.
void write_meta(const std::vector<std::string>& metadata,
                const std::string& path);

}  // namespace qcarpet
