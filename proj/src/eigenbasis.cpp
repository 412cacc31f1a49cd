#include "qcarpet/eigenbasis.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <sstream>

#include "qcarpet/errors.hpp"

namespace qcarpet {

namespace {

constexpr int kGaussOrder = 16;
constexpr double kQuadratureTol = 1e-13;
constexpr int kMaxPanelDoublings = 8;

using GaussRule = boost::math::quadrature::gauss<double, kGaussOrder>;

// Full symmetric node/weight list on [-1, 1]; Boost stores only the
// non-negative half.
struct Nodes {
  std::vector<double> x, w;
  Nodes() {
    const auto& a = GaussRule::abscissa();
    const auto& wt = GaussRule::weights();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0.0) {
        x.push_back(0.0);
        w.push_back(wt[i]);
        continue;
      }
      x.push_back(a[i]);
      w.push_back(wt[i]);
      x.push_back(-a[i]);
      w.push_back(wt[i]);
    }
  }
};

const Nodes& nodes() {
  static const Nodes n;
  return n;
}

// One composite pass over [0, L] with the given panel count.
std::vector<complex> integrate_panels(const WellConfig& well,
                                      const GaussianPacket& packet, int nmax,
                                      int panels) {
  const Nodes& q = nodes();
  std::vector<complex> acc(nmax, complex{});
  const double h = well.L / panels;
  const double k1 = kPi / well.L;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t i = 0; i < q.x.size(); ++i) {
      const double x = mid + 0.5 * h * q.x[i];
      const complex f = odd_packet_value(packet, x, well.hbar) * (0.5 * h * q.w[i]);
      if (f == complex{}) continue;
      // sin(n k1 x) by rotation; drift is O(n eps), well below tolerance.
      const complex step = std::polar(1.0, k1 * x);
      complex e = step;
      for (int n = 1; n <= nmax; ++n) {
        acc[n - 1] += f * e.imag();
        if (n % 64 == 0) {
          e = std::polar(1.0, k1 * x * (n + 1));
        } else {
          e *= step;
        }
      }
    }
  }
  const double norm = std::sqrt(2.0 / well.L);
  for (auto& c : acc) c *= norm;
  return acc;
}

}  // namespace

ModeExpansion::ModeExpansion(std::vector<complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidParameter("mode expansion needs nmax >= 1");
  for (const auto& c : coeffs_) captured_norm_ += std::norm(c);
}

complex ModeExpansion::c(int n) const {
  if (n == 0) return {};
  const int a = n < 0 ? -n : n;
  if (a > nmax()) return {};
  return n < 0 ? -coeffs_[a - 1] : coeffs_[a - 1];
}

double eigen_energy(const WellConfig& well, int n) {
  if (n < 1) throw InvalidParameter("eigenstate index must be >= 1");
  const double k = n * kPi * well.hbar / well.L;
  return k * k / (2.0 * well.mass);
}

double eigen_state(const WellConfig& well, int n, double x) {
  if (n < 1) throw InvalidParameter("eigenstate index must be >= 1");
  if (!inside_well(well, x)) return 0.0;
  return std::sqrt(2.0 / well.L) * std::sin(n * kPi * x / well.L);
}

complex odd_packet_value(const GaussianPacket& packet, double x, double hbar) {
  return packet_value(packet, x, hbar) - packet_value(packet, -x, hbar);
}

ModeExpansion coeffs_quadrature(const WellConfig& well,
                                const GaussianPacket& packet, int nmax) {
  if (nmax < 1) throw InvalidParameter("nmax must be >= 1");
  // At least 8 nodes per half-period of the highest mode, and panels no
  // wider than the packet width.
  const int by_modes = (nmax + 1) / 2;
  const int by_width = static_cast<int>(std::ceil(2.0 * well.L / packet.sx));
  int panels = std::max({by_modes, by_width, 16});

  auto prev = integrate_panels(well, packet, nmax, panels);
  for (int round = 0; round < kMaxPanelDoublings; ++round) {
    panels *= 2;
    auto next = integrate_panels(well, packet, nmax, panels);
    double diff = 0.0;
    for (int n = 0; n < nmax; ++n) diff = std::max(diff, std::abs(next[n] - prev[n]));
    if (diff <= kQuadratureTol) return ModeExpansion(std::move(next));
    prev = std::move(next);
  }
  std::ostringstream msg;
  msg << "coefficient quadrature did not converge with " << panels
      << " panels";
  throw NumericAccuracyError(msg.str());
}

complex packet_fourier(const GaussianPacket& packet, double k, double hbar) {
  // Psi(x,0) has a Gaussian envelope of width 2 sx centred on xbar with
  // carrier pbar / hbar.
  const double s = packet.sx;
  const double q = k + packet.pbar / hbar;
  const double amp = std::pow(2.0 * kPi * s * s, -0.25) *
                     std::sqrt(4.0 * kPi * s * s) * std::exp(-s * s * q * q);
  return std::polar(amp, q * packet.xbar);
}

ModeExpansion coeffs_analytic(const WellConfig& well,
                              const GaussianPacket& packet, int nmax) {
  if (nmax < 1) throw InvalidParameter("nmax must be >= 1");
  const complex pre = std::sqrt(2.0 / well.L) / complex(0.0, 2.0);
  std::vector<complex> c(nmax);
  for (int n = 1; n <= nmax; ++n) {
    const double k = n * kPi / well.L;
    c[n - 1] = pre * (packet_fourier(packet, k, well.hbar) -
                      packet_fourier(packet, -k, well.hbar));
  }
  return ModeExpansion(std::move(c));
}

int choose_nmax(const WellConfig& well, const GaussianPacket& packet,
                double tail_tol) {
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw InvalidParameter("tail tolerance must lie in (0, 1)");
  }
  double tail = 1.0;
  for (int n = 1; n <= kMaxModes; n *= 2) {
    tail = 1.0 - coeffs_quadrature(well, packet, n).captured_norm();
    if (tail <= tail_tol) return n;
  }
  std::ostringstream msg;
  msg << "mode tail 1 - captured_norm = " << tail << " at nmax = "
      << kMaxModes << " exceeds tolerance " << tail_tol
      << " (confinement ratio " << packet.confinement_ratio << ")";
  throw TruncationError(msg.str());
}

}  // namespace qcarpet
