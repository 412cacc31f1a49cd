#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qcarpet {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Infinite square well on (0, L) in natural units (hbar = mass = 1).
struct WellConfig {
  double L = 1.0;
  double hbar = 1.0;
  double mass = 1.0;
  double T = 4.0 / kPi;  // revival time 4 m L^2 / (pi hbar)

  static double revival_time(double L, double hbar, double mass) {
    return 4.0 * mass * L * L / (kPi * hbar);
  }
};

WellConfig make_well(double L);

// Initial Gaussian wave packet, stored in dimensionful (natural) units.
struct GaussianPacket {
  double xbar = 0.0;
  double sx = 0.0;
  double pbar = 0.0;
  double sp = 0.0;  // hbar / (2 sx), minimum uncertainty

  // min(xbar, L - xbar) / sx; below kConfinementWarning the packet leaks
  // noticeably past the walls.
  double confinement_ratio = 0.0;
  bool leakage_warning = false;
};

inline constexpr double kConfinementWarning = 4.0;

// Arguments are the dimensionless ratios xbar/L, sx/L and pbar L / hbar.
GaussianPacket make_packet(const WellConfig& well, double xbar_over_L,
                           double sx_over_L, double pbar_in_hbar_over_L);

// Psi(x, 0) on the whole real line (no wall indicator).
complex packet_value(const GaussianPacket& packet, double x,
                     double hbar = 1.0);

// True iff x lies strictly inside the well.
inline bool inside_well(const WellConfig& well, double x) {
  return x > 0.0 && x < well.L;
}

// Uniform closed sampling of [lo, hi] with n >= 2 points.
struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t n = 2;

  Axis() = default;
  Axis(double lo_, double hi_, std::size_t n_);

  double step() const { return (hi - lo) / static_cast<double>(n - 1); }
  // The last sample is exactly hi.
  double at(std::size_t i) const {
    return i + 1 == n ? hi : lo + static_cast<double>(i) * step();
  }
  std::vector<double> points() const;

  friend bool operator==(const Axis&, const Axis&) = default;
};

struct SpaceTimeGrid {
  Axis x;
  Axis t;

  SpaceTimeGrid() = default;
  SpaceTimeGrid(Axis x_, Axis t_) : x(x_), t(t_) {}
  // Default x range is the whole well.
  static SpaceTimeGrid over_well(const WellConfig& well, std::size_t nx,
                                 double t_lo, double t_hi, std::size_t nt);

  friend bool operator==(const SpaceTimeGrid&, const SpaceTimeGrid&) = default;
};

// Real field sampled on a SpaceTimeGrid. Storage is column-major in time:
// all x samples of one time slice are contiguous.
class CarpetField {
 public:
  CarpetField(SpaceTimeGrid grid, std::vector<double> values, bool is_signed);

  const SpaceTimeGrid& grid() const noexcept { return grid_; }
  bool is_signed() const noexcept { return signed_; }
  std::size_t nx() const noexcept { return grid_.x.n; }
  std::size_t nt() const noexcept { return grid_.t.n; }

  double at(std::size_t ix, std::size_t it) const {
    return values_[it * grid_.x.n + ix];
  }
  std::span<const double> column(std::size_t it) const {
    return {values_.data() + it * grid_.x.n, grid_.x.n};
  }
  std::span<const double> values() const noexcept { return values_; }

  double max_abs() const;

 private:
  SpaceTimeGrid grid_;
  std::vector<double> values_;
  bool signed_;
};

// Complex amplitudes sampled on an x axis.
struct SampledState {
  Axis x;
  std::vector<complex> values;
};

}  // namespace qcarpet
