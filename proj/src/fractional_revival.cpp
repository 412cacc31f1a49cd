#include "qcarpet/fractional_revival.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "qcarpet/errors.hpp"
#include "qcarpet/evolution.hpp"

namespace qcarpet {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

RevivalFraction make_fraction(std::int64_t alpha, std::int64_t beta) {
  if (beta < 1) throw InvalidParameter("beta must be >= 1");
  if (alpha < 1) throw InvalidParameter("alpha must be >= 1");
  if (beta > (std::int64_t{1} << 20)) {
    throw InvalidParameter("beta too large for exact phase reduction");
  }
  RevivalFraction f;
  f.input_alpha = alpha;
  f.beta = beta;
  f.alpha = floor_mod(alpha - 1, 2 * beta) + 1;
  if (std::gcd(f.alpha, beta) != 1) {
    std::ostringstream msg;
    msg << "alpha = " << alpha << " and beta = " << beta
        << " are not coprime; reduce the fraction";
    throw NonCoprimeError(msg.str());
  }
  f.q_alpha = static_cast<int>(f.alpha % 2);
  return f;
}

complex gauss_sum(const RevivalFraction& f, std::int64_t n) {
  const std::int64_t b = f.beta;
  const std::int64_t two_b = 2 * b;
  const std::int64_t n_red = floor_mod(n, b);
  complex acc{};
  for (std::int64_t j = 1; j <= b; ++j) {
    // phase / pi = (j q b + 2 j n - j^2 alpha) / b, reduced mod 2.
    std::int64_t num = floor_mod(j * f.q_alpha * b, two_b);
    num = floor_mod(num + 2 * j * n_red, two_b);
    num = floor_mod(num - floor_mod(j * j, two_b) * f.alpha, two_b);
    const double angle = kPi * static_cast<double>(num) / static_cast<double>(b);
    acc += complex(std::cos(angle), std::sin(angle));
  }
  return acc;
}

double gauss_phase(const RevivalFraction& f, std::int64_t n) {
  const double a = std::arg(gauss_sum(f, n));
  return a <= -kPi ? kPi : a;
}

double GaussSumTable::theta(std::int64_t n) const {
  // Theta(1..beta) is stored; Theta(beta m + j) = Theta(j).
  const std::int64_t j = floor_mod(n - 1, fraction.beta);
  return phases[j];
}

GaussSumTable gauss_table(const RevivalFraction& f) {
  GaussSumTable t;
  t.fraction = f;
  const double root = std::sqrt(static_cast<double>(f.beta));
  for (std::int64_t n = 1; n <= f.beta; ++n) {
    const complex s = gauss_sum(f, n);
    double arg = std::arg(s);
    if (arg <= -kPi) arg = kPi;
    t.values.push_back(s);
    t.phases.push_back(arg);
    t.max_magnitude_error =
        std::max(t.max_magnitude_error, std::abs(std::abs(s) - root));
  }
  if (t.max_magnitude_error > kGaussMagnitudeTolerance) {
    std::ostringstream msg;
    msg << "|S(n, " << f.alpha << ", " << f.beta << ")| deviates from sqrt(beta) by "
        << t.max_magnitude_error;
    throw InternalConsistencyError(msg.str());
  }
  return t;
}

int default_image_count(const WellConfig& well, const GaussianPacket& packet,
                        double x) {
  // Amplitude ratio exp(-r^2 / 4) < 1e-15 beyond r = 2 sqrt(15 ln 10).
  const double reach = 2.0 * std::sqrt(15.0 * std::log(10.0)) * packet.sx;
  return static_cast<int>(
      std::ceil((std::abs(x) + std::abs(packet.xbar) + reach) / (2.0 * well.L)));
}

complex odd_extension_value(const WellConfig& well,
                            const GaussianPacket& packet, double x,
                            std::optional<int> n_images) {
  const int m = n_images ? *n_images : default_image_count(well, packet, x);
  if (m < 0) throw InvalidParameter("image count must be >= 0");
  complex acc{};
  for (int n = -m; n <= m; ++n) {
    acc += odd_packet_value(packet, x - 2.0 * well.L * n, well.hbar);
  }
  return acc;
}

namespace {

complex reconstruct_with(const WellConfig& well, const GaussianPacket& packet,
                         const GaussSumTable& table, double x) {
  if (!inside_well(well, x)) return {};
  const auto& f = table.fraction;
  const double b = static_cast<double>(f.beta);
  complex acc{};
  for (std::int64_t n = 1; n <= f.beta; ++n) {
    const double shifted =
        x - well.L * f.q_alpha - 2.0 * well.L * static_cast<double>(n) / b;
    // Phi is 2L periodic; fold the argument into [-L, L) first.
    const double folded = shifted - 2.0 * well.L * std::floor((shifted + well.L) / (2.0 * well.L));
    acc += odd_extension_value(well, packet, folded) *
           std::polar(1.0, table.phases[n - 1]);
  }
  return acc / std::sqrt(b);
}

}  // namespace

complex fractional_reconstruction(const WellConfig& well,
                                  const GaussianPacket& packet,
                                  const RevivalFraction& f, double x) {
  return reconstruct_with(well, packet, gauss_table(f), x);
}

SampledState sample_fractional_reconstruction(const WellConfig& well,
                                              const GaussianPacket& packet,
                                              const RevivalFraction& f,
                                              const Axis& x) {
  const GaussSumTable table = gauss_table(f);
  SampledState s{x, std::vector<complex>(x.n)};
  for (std::size_t i = 0; i < x.n; ++i) {
    s.values[i] = reconstruct_with(well, packet, table, x.at(i));
  }
  return s;
}

double reconstruction_error(const WellConfig& well,
                            const GaussianPacket& packet,
                            const ModeExpansion& modes,
                            const RevivalFraction& f, const Axis& x) {
  const double t = well.T * f.time_over_T();
  return l2_distance(sample_fractional_reconstruction(well, packet, f, x),
                     sample_wavefunction(well, modes, x, t));
}

int count_packets(std::span<const double> density, double threshold_frac) {
  if (!(threshold_frac > 0.0 && threshold_frac < 1.0)) {
    throw InvalidParameter("threshold fraction must lie in (0, 1)");
  }
  double peak = 0.0;
  for (double v : density) peak = std::max(peak, v);
  if (!(peak > 0.0)) throw InvalidParameter("density is identically zero");
  const double cut = threshold_frac * peak;

  int count = 0;
  const std::size_t n = density.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t end = i;
    while (end + 1 < n && density[end + 1] == density[i]) ++end;
    const bool left_lower = i == 0 || density[i - 1] < density[i];
    const bool right_lower = end + 1 == n || density[end + 1] < density[i];
    if (left_lower && right_lower && density[i] > cut) ++count;
    i = end + 1;
  }
  return count;
}

}  // namespace qcarpet
