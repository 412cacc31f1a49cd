#include "qcarpet/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "qcarpet/errors.hpp"

namespace qcarpet {

namespace {

struct RealRgb {
  double r, g, b;
};

constexpr RealRgb kGray{128.0 / 255.0, 128.0 / 255.0, 128.0 / 255.0};
constexpr RealRgb kRed{1.0, 0.0, 0.0};
constexpr RealRgb kBlue{0.0, 0.0, 1.0};

RealRgb lerp(RealRgb a, RealRgb b, double s) {
  return {a.r + s * (b.r - a.r), a.g + s * (b.g - a.g), a.b + s * (b.b - a.b)};
}

std::uint8_t to_byte(double c) {
  return static_cast<std::uint8_t>(std::floor(255.0 * std::clamp(c, 0.0, 1.0) + 0.5));
}

}  // namespace

Rgb map_color(double value, double norm, Colormap map) {
  if (!(norm > 0.0)) throw InvalidParameter("normalization must be positive");
  const double s = value / norm;
  RealRgb c;
  if (map == Colormap::density) {
    c = lerp(kGray, kRed, std::clamp(s, 0.0, 1.0));
  } else if (s >= 0.0) {
    c = lerp(kGray, kRed, std::min(s, 1.0));
  } else {
    c = lerp(kGray, kBlue, std::min(-s, 1.0));
  }
  return {to_byte(c.r), to_byte(c.g), to_byte(c.b)};
}

Raster colorize(const CarpetField& field, const RenderSpec& spec) {
  if (field.is_signed() && spec.colormap == Colormap::density) {
    throw InvalidParameter("signed fields need the diverging colormap");
  }
  double norm = 1.0;
  if (spec.fixed_norm) {
    if (!(*spec.fixed_norm > 0.0)) throw InvalidParameter("fixed normalization must be positive");
    norm = *spec.fixed_norm;
  } else if (const double m = field.max_abs(); m > 0.0) {
    norm = m;
  }
  Raster r;
  r.width = field.nt();
  r.height = field.nx();
  r.pixels.resize(r.width * r.height);
  for (std::size_t row = 0; row < r.height; ++row) {
    const std::size_t ix = r.height - 1 - row;
    for (std::size_t it = 0; it < r.width; ++it) {
      r.pixels[row * r.width + it] = map_color(field.at(ix, it), norm, spec.colormap);
    }
  }
  return r;
}

void write_ppm(const Raster& raster, const std::string& path) {
  if (raster.width == 0 || raster.height == 0) {
    throw InvalidParameter("raster is empty");
  }
  if (raster.pixels.size() != raster.width * raster.height) {
    throw InvalidParameter("raster dimensions do not match its pixel count");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", path);
  const std::string header = "P6\n" + std::to_string(raster.width) + " " +
                             std::to_string(raster.height) + "\n255\n";
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  std::vector<char> bytes;
  bytes.reserve(raster.pixels.size() * 3);
  for (const Rgb& p : raster.pixels) {
    bytes.push_back(static_cast<char>(p.r));
    bytes.push_back(static_cast<char>(p.g));
    bytes.push_back(static_cast<char>(p.b));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed", path);
}

void write_meta(const std::vector<std::string>& metadata,
                const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", path);
  for (const auto& line : metadata) out << "# " << line << '\n';
  if (!out) throw IoError("write failed", path);
}

}  // namespace qcarpet
