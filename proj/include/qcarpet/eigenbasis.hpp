#pragma once

#include <vector>

#include "qcarpet/core_model.hpp"

namespace qcarpet {

// Truncated sine-basis expansion c_1..c_nmax of an initial state.
class ModeExpansion {
 public:
  explicit ModeExpansion(std::vector<complex> coeffs);

  int nmax() const noexcept { return static_cast<int>(coeffs_.size()); }
  double captured_norm() const noexcept { return captured_norm_; }
  const std::vector<complex>& coeffs() const noexcept { return coeffs_; }

  // c(n) for any integer n: c(0) = 0, c(-n) = -c(n), zero beyond nmax.
  complex c(int n) const;

 private:
  std::vector<complex> coeffs_;
  double captured_norm_ = 0.0;
};

double eigen_energy(const WellConfig& well, int n);

// eta_x sqrt(2/L) sin(n pi x / L).
double eigen_state(const WellConfig& well, int n, double x);

// Odd combination Psi(x,0) - Psi(-x,0).
complex odd_packet_value(const GaussianPacket& packet, double x,
                         double hbar = 1.0);

// c_n = sqrt(2/L) * integral_0^L sin(n pi x / L) (Psi(x,0) - Psi(-x,0)) dx
// by composite Gauss-Legendre panels, refined until successive panel
// doublings agree to 1e-13 per coefficient.
ModeExpansion coeffs_quadrature(const WellConfig& well,
                                const GaussianPacket& packet, int nmax);

// Closed form from the Gaussian's Fourier transform over the real line.
// Exact for packets with negligible weight beyond x = L.
ModeExpansion coeffs_analytic(const WellConfig& well,
                              const GaussianPacket& packet, int nmax);

// F(k) = integral over R of exp(i k x) Psi(x, 0) dx.
complex packet_fourier(const GaussianPacket& packet, double k,
                       double hbar = 1.0);

inline constexpr int kMaxModes = 4096;

// Smallest power of two nmax (<= kMaxModes) with 1 - captured_norm <= tail_tol.
int choose_nmax(const WellConfig& well, const GaussianPacket& packet,
                double tail_tol);

}  // namespace qcarpet
