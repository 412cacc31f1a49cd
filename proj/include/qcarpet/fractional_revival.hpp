#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcarpet/core_model.hpp"
#include "qcarpet/eigenbasis.hpp"

namespace qcarpet {

// Revival time t = (alpha / beta) (T / 2) with coprime alpha, beta.
//
// The phases exp(-i pi n^2 alpha / beta) are 2 beta periodic in alpha, so
// alpha is canonicalised into [1, 2 beta]. The upper end is only reachable
// for beta = 1 (alpha = 2: the full revival).
struct RevivalFraction {
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
  int q_alpha = 1;  // 1 iff alpha is odd
  std::int64_t input_alpha = 1;

  bool was_reduced() const noexcept { return input_alpha != alpha; }
  // t / T = alpha / (2 beta).
  double time_over_T() const {
    return static_cast<double>(alpha) / (2.0 * static_cast<double>(beta));
  }
};

RevivalFraction make_fraction(std::int64_t alpha, std::int64_t beta);

// S(n, alpha, beta) = sum_{j=1}^{beta} exp[i pi j (q + 2n/beta - j alpha/beta)].
// Each phase is reduced exactly (integer arithmetic modulo 2 beta) before
// it is converted to floating point.
complex gauss_sum(const RevivalFraction& f, std::int64_t n);

// Principal argument of S in (-pi, pi].
double gauss_phase(const RevivalFraction& f, std::int64_t n);

struct GaussSumTable {
  RevivalFraction fraction;
  std::vector<complex> values;  // S(n), n = 1..beta
  std::vector<double> phases;   // Theta(n), n = 1..beta
  double max_magnitude_error = 0.0;  // max_n | |S(n)| - sqrt(beta) |

  double theta(std::int64_t n) const;  // any integer n, by periodicity
};

inline constexpr double kGaussMagnitudeTolerance = 1e-9;

// Throws InternalConsistencyError if some |S(n)| misses sqrt(beta) by more
// than kGaussMagnitudeTolerance.
GaussSumTable gauss_table(const RevivalFraction& f);

// Image count whose farthest omitted image is below 1e-15 of the peak at x.
int default_image_count(const WellConfig& well, const GaussianPacket& packet,
                        double x);

// Phi(x, 0) = sum_{n=-m..m} (Psi(x - 2Ln, 0) - Psi(-(x - 2Ln), 0)).
complex odd_extension_value(const WellConfig& well,
                            const GaussianPacket& packet, double x,
                            std::optional<int> n_images = std::nullopt);

// (eta_x / sqrt(beta)) sum_{n=1}^{beta} Phi(x - L q - 2 L n / beta, 0) e^{i Theta(n)}.
complex fractional_reconstruction(const WellConfig& well,
                                  const GaussianPacket& packet,
                                  const RevivalFraction& f, double x);

SampledState sample_fractional_reconstruction(const WellConfig& well,
                                              const GaussianPacket& packet,
                                              const RevivalFraction& f,
                                              const Axis& x);

// L2 distance between the closed-form superposition and direct eigenstate
// evolution at t = (alpha / beta)(T / 2).
double reconstruction_error(const WellConfig& well,
                            const GaussianPacket& packet,
                            const ModeExpansion& modes,
                            const RevivalFraction& f, const Axis& x);

inline constexpr double kDefaultPacketThreshold = 0.01;

// Strict local maxima above threshold_frac * max; a plateau counts once.
int count_packets(std::span<const double> density,
                  double threshold_frac = kDefaultPacketThreshold);

}  // namespace qcarpet
