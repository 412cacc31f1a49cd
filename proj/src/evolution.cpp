#include "qcarpet/evolution.hpp"

#include <cmath>

#include "qcarpet/errors.hpp"

namespace qcarpet {

namespace {

// exp(-i 2 pi n^2 tau) for n = 1..nmax, tau = t / T.
std::vector<complex> revival_phases(int nmax, double tau) {
  const double frac = tau - std::floor(tau);
  std::vector<complex> ph(nmax);
  for (int n = 1; n <= nmax; ++n) {
    const double n2 = static_cast<double>(n) * n;
    const double cycles = std::fmod(n2 * frac, 1.0);
    ph[n - 1] = std::polar(1.0, -2.0 * kPi * cycles);
  }
  return ph;
}

void check_same_axis(const SampledState& a, const SampledState& b) {
  if (!(a.x == b.x) || a.values.size() != b.values.size() ||
      a.values.size() != a.x.n) {
    throw InvalidParameter("sampled states live on different grids");
  }
}

}  // namespace

complex wavefunction_at(const WellConfig& well, const ModeExpansion& modes,
                        double x, double t) {
  if (!inside_well(well, x)) return {};
  const auto ph = revival_phases(modes.nmax(), t / well.T);
  const auto& c = modes.coeffs();
  const double norm = std::sqrt(2.0 / well.L);
  complex acc{};
  for (int n = 1; n <= modes.nmax(); ++n) {
    acc += c[n - 1] * ph[n - 1] * (norm * std::sin(n * kPi * x / well.L));
  }
  return acc;
}

namespace {

// Row-major sine table psi_n(x_i), i over the axis, n = 1..nmax.
std::vector<double> sine_table(const WellConfig& well, int nmax,
                               const Axis& x) {
  std::vector<double> tab(x.n * nmax, 0.0);
  const double norm = std::sqrt(2.0 / well.L);
  for (std::size_t i = 0; i < x.n; ++i) {
    const double xi = x.at(i);
    if (!inside_well(well, xi)) continue;
    for (int n = 1; n <= nmax; ++n) {
      tab[i * nmax + n - 1] = norm * std::sin(n * kPi * xi / well.L);
    }
  }
  return tab;
}

void synthesize(const std::vector<double>& tab, int nmax,
                const std::vector<complex>& a, std::size_t nx,
                complex* out) {
  std::vector<double> re(nmax), im(nmax);
  for (int n = 0; n < nmax; ++n) {
    re[n] = a[n].real();
    im[n] = a[n].imag();
  }
  for (std::size_t i = 0; i < nx; ++i) {
    const double* row = tab.data() + i * nmax;
    double sr = 0.0, si = 0.0;
    for (int n = 0; n < nmax; ++n) {
      sr += row[n] * re[n];
      si += row[n] * im[n];
    }
    out[i] = {sr, si};
  }
}

std::vector<complex> evolved_coeffs(const WellConfig& well,
                                    const ModeExpansion& modes, double t) {
  auto a = revival_phases(modes.nmax(), t / well.T);
  for (int n = 0; n < modes.nmax(); ++n) a[n] *= modes.coeffs()[n];
  return a;
}

}  // namespace

SampledState sample_wavefunction(const WellConfig& well,
                                 const ModeExpansion& modes, const Axis& x,
                                 double t) {
  const auto tab = sine_table(well, modes.nmax(), x);
  SampledState s{x, std::vector<complex>(x.n)};
  synthesize(tab, modes.nmax(), evolved_coeffs(well, modes, t), x.n,
             s.values.data());
  return s;
}

CarpetField carpet(const WellConfig& well, const ModeExpansion& modes,
                   const SpaceTimeGrid& grid) {
  const int nmax = modes.nmax();
  const auto tab = sine_table(well, nmax, grid.x);
  const std::size_t nx = grid.x.n;
  const std::size_t nt = grid.t.n;
  std::vector<double> values(nx * nt);
#pragma omp parallel
  {
    std::vector<complex> col(nx);
#pragma omp for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(nt); ++j) {
      synthesize(tab, nmax, evolved_coeffs(well, modes, grid.t.at(j)), nx,
                 col.data());
      for (std::size_t i = 0; i < nx; ++i) values[j * nx + i] = std::norm(col[i]);
    }
  }
  return CarpetField(grid, std::move(values), false);
}

double l2_distance(const SampledState& a, const SampledState& b) {
  check_same_axis(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    acc += std::norm(a.values[i] - b.values[i]);
  }
  return std::sqrt(acc * a.x.step());
}

complex inner_product(const SampledState& a, const SampledState& b) {
  check_same_axis(a, b);
  complex acc{};
  const std::size_t n = a.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    acc += w * std::conj(a.values[i]) * b.values[i];
  }
  return acc * a.x.step();
}

double fidelity(const SampledState& a, const SampledState& b) {
  const double na = inner_product(a, a).real();
  const double nb = inner_product(b, b).real();
  if (na <= 0.0 || nb <= 0.0) {
    throw InvalidParameter("fidelity of a zero state is undefined");
  }
  const double f = std::norm(inner_product(a, b)) / (na * nb);
  return f > 1.0 ? 1.0 : f;
}

}  // namespace qcarpet
