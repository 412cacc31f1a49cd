#pragma once

#include <span>
#include <vector>

#include "qcarpet/core_model.hpp"

namespace qcarpet {

// Open tight-binding chain H = -(J/2) sum_n (|n+1><n| + h.c.), n = 1..N.
// Times are measured in units of t0 = hbar / J throughout.
struct DiscreteChain {
  int N = 1;
  double J = 1.0;
  double hbar = 1.0;
  double t0() const { return hbar / J; }
};

DiscreteChain make_chain(int N, double J = 1.0);

// Unit-norm site amplitudes.
struct DiscreteState {
  std::vector<complex> amps;
  double norm() const;
};

// A exp[-(x_n - xbar)^2 / (4 sx^2)] exp(i pbar x_n / hbar), x_n = n L / N.
DiscreteState discrete_initial(const DiscreteChain& chain,
                               const WellConfig& well,
                               const GaussianPacket& packet);

// U_{jk} = sqrt(2/(N+1)) sin(pi j k / (N+1)); U is symmetric and U^2 = 1.
std::vector<complex> dst_dense(std::span<const complex> v);
// Same transform in O(N log N): odd extension to length 2(N+1), then a
// power-of-two based DFT.
std::vector<complex> dst_fast(std::span<const complex> v);

enum class DstMethod { dense, fast };

std::vector<complex> dst_apply(const DiscreteChain& chain,
                               std::span<const complex> v,
                               DstMethod method = DstMethod::fast);

// epsilon_n = -J cos(pi n / (N+1)), 1 <= n <= N.
double eigenvalue(const DiscreteChain& chain, int n);

// U D(tau) U |psi>, D = diag exp(-i epsilon_n tau t0 / hbar); tau in t0 units.
DiscreteState evolve_discrete(const DiscreteChain& chain,
                              const DiscreteState& state, double tau,
                              DstMethod method = DstMethod::fast);

// Row n, column tau_j holds |<n|Psi(tau_j)>|^2. Requires N >= 2; the x axis
// of the grid is the site label 1..N.
CarpetField discrete_carpet(const DiscreteChain& chain, const WellConfig& well,
                            const GaussianPacket& packet, const Axis& times);

// Continuous time t -> t0 units, matching epsilon_n + J to E_n with lattice
// spacing L/(N+1): T maps to 4 (N+1)^2 / pi.
double map_time(const DiscreteChain& chain, const WellConfig& well, double t);

// |<psi0|psi(tau)>|^2.
double discrete_fidelity(const DiscreteChain& chain, const DiscreteState& psi0,
                         double tau);

struct RevivalPeak {
  double t_peak = 0.0;  // t0 units
  double fidelity_peak = 0.0;
};

// Uniform scan of the window, then golden-section refinement on the best
// bracketing triple down to 1e-6 t0.
RevivalPeak revival_scan(const DiscreteChain& chain, const WellConfig& well,
                         const GaussianPacket& packet, double window_lo,
                         double window_hi, int samples);

// Pearson correlation of two equally sized samples.
double pearson(std::span<const double> a, std::span<const double> b);

}  // namespace qcarpet
