#include "qcarpet/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcarpet/errors.hpp"

namespace qcarpet {

WellConfig make_well(double L) {
  if (!std::isfinite(L) || L <= 0.0) {
    throw InvalidParameter("well width must be positive and finite, got " +
                           std::to_string(L));
  }
  WellConfig well;
  well.L = L;
  well.hbar = 1.0;
  well.mass = 1.0;
  well.T = WellConfig::revival_time(L, well.hbar, well.mass);
  return well;
}

GaussianPacket make_packet(const WellConfig& well, double xbar_over_L,
                           double sx_over_L, double pbar_in_hbar_over_L) {
  if (!std::isfinite(xbar_over_L) || xbar_over_L <= 0.0 || xbar_over_L >= 1.0) {
    throw InvalidParameter("xbar/L must lie in (0, 1)");
  }
  if (!std::isfinite(sx_over_L) || sx_over_L <= 0.0) {
    throw InvalidParameter("sx/L must be positive");
  }
  if (!std::isfinite(pbar_in_hbar_over_L)) {
    throw InvalidParameter("pbar L / hbar must be finite");
  }
  GaussianPacket p;
  p.xbar = xbar_over_L * well.L;
  p.sx = sx_over_L * well.L;
  p.pbar = pbar_in_hbar_over_L * well.hbar / well.L;
  p.sp = well.hbar / (2.0 * p.sx);
  p.confinement_ratio = std::min(p.xbar, well.L - p.xbar) / p.sx;
  p.leakage_warning = p.confinement_ratio < kConfinementWarning;
  return p;
}

complex packet_value(const GaussianPacket& packet, double x, double hbar) {
  const double d = x - packet.xbar;
  const double amp = std::pow(2.0 * kPi * packet.sx * packet.sx, -0.25) *
                     std::exp(-d * d / (4.0 * packet.sx * packet.sx));
  return std::polar(amp, packet.pbar * x / hbar);
}

Axis::Axis(double lo_, double hi_, std::size_t n_) : lo(lo_), hi(hi_), n(n_) {
  if (n < 2) throw InvalidParameter("axis needs at least 2 samples");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw InvalidParameter("axis requires finite lo < hi");
  }
}

std::vector<double> Axis::points() const {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

SpaceTimeGrid SpaceTimeGrid::over_well(const WellConfig& well, std::size_t nx,
                                       double t_lo, double t_hi,
                                       std::size_t nt) {
  return SpaceTimeGrid(Axis(0.0, well.L, nx), Axis(t_lo, t_hi, nt));
}

CarpetField::CarpetField(SpaceTimeGrid grid, std::vector<double> values,
                         bool is_signed)
    : grid_(grid), values_(std::move(values)), signed_(is_signed) {
  if (values_.size() != grid_.x.n * grid_.t.n) {
    throw InvalidParameter("carpet field size does not match its grid");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidParameter("carpet field has a non-finite entry");
    if (!signed_ && v < 0.0) {
      throw InvalidParameter("unsigned carpet field has a negative entry");
    }
  }
}

double CarpetField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace qcarpet
