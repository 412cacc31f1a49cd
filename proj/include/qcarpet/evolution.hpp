#pragma once

#include "qcarpet/core_model.hpp"
#include "qcarpet/eigenbasis.hpp"

namespace qcarpet {

// Psi(x, t) = sum_n c_n psi_n(x) exp(-i 2 pi n^2 t / T). The phase is taken
// modulo 2 pi before exponentiation so that t = T closes exactly.
complex wavefunction_at(const WellConfig& well, const ModeExpansion& modes,
                        double x, double t);

SampledState sample_wavefunction(const WellConfig& well,
                                 const ModeExpansion& modes, const Axis& x,
                                 double t);

// |Psi(x_i, t_j)|^2 over the grid.
CarpetField carpet(const WellConfig& well, const ModeExpansion& modes,
                   const SpaceTimeGrid& grid);

// sqrt(sum_i |a_i - b_i|^2 dx).
double l2_distance(const SampledState& a, const SampledState& b);

// |<a|b>|^2 / (<a|a><b|b>) with trapezoid inner products; 1 iff the samples
// agree up to a global phase.
double fidelity(const SampledState& a, const SampledState& b);

// Trapezoid <a|b>.
complex inner_product(const SampledState& a, const SampledState& b);

}  // namespace qcarpet
