#include "qcarpet/discrete_chain.hpp"

#include <cmath>
#include <numeric>

#include "qcarpet/errors.hpp"
#include "qcarpet/fft.hpp"

namespace qcarpet {

DiscreteChain make_chain(int N, double J) {
  if (N < 1) throw InvalidParameter("chain needs at least one site");
  if (!std::isfinite(J) || J <= 0.0) throw InvalidParameter("coupling J must be positive");
  return {N, J, 1.0};
}

double DiscreteState::norm() const {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

DiscreteState discrete_initial(const DiscreteChain& chain,
                               const WellConfig& well,
                               const GaussianPacket& packet) {
  if (chain.N < 1) throw InvalidParameter("chain needs at least one site");
  DiscreteState s;
  s.amps.resize(chain.N);
  double norm2 = 0.0;
  for (int n = 1; n <= chain.N; ++n) {
    const double x = n * well.L / chain.N;
    const double d = x - packet.xbar;
    const double env = std::exp(-d * d / (4.0 * packet.sx * packet.sx));
    s.amps[n - 1] = std::polar(env, packet.pbar * x / well.hbar);
    norm2 += env * env;
  }
  if (!(norm2 > 0.0)) {
    throw DegenerateStateError("every sampled Gaussian amplitude underflows to zero");
  }
  const double a = 1.0 / std::sqrt(norm2);
  for (auto& v : s.amps) v *= a;
  return s;
}

std::vector<complex> dst_dense(std::span<const complex> v) {
  const std::size_t n = v.size();
  const std::size_t period = 2 * (n + 1);
  const double scale = std::sqrt(2.0 / static_cast<double>(n + 1));
  // sin(pi j k / (N+1)) depends on j k modulo 2(N+1) only.
  std::vector<double> table(period);
  for (std::size_t m = 0; m < period; ++m) {
    table[m] = std::sin(kPi * static_cast<double>(m) / static_cast<double>(n + 1));
  }
  std::vector<complex> out(n);
  for (std::size_t j = 1; j <= n; ++j) {
    complex acc{};
    for (std::size_t k = 1; k <= n; ++k) acc += table[(j * k) % period] * v[k - 1];
    out[j - 1] = scale * acc;
  }
  return out;
}

std::vector<complex> dst_fast(std::span<const complex> v) {
  const std::size_t n = v.size();
  const std::size_t m = 2 * (n + 1);
  std::vector<complex> ext(m, complex{});
  for (std::size_t k = 1; k <= n; ++k) {
    ext[k] = v[k - 1];
    ext[m - k] = -v[k - 1];
  }
  const auto spec = fft::dft(ext);
  // spec_j = -2i sum_k v_k sin(pi j k / (N+1)).
  const complex scale = complex(0.0, 0.5) * std::sqrt(2.0 / static_cast<double>(n + 1));
  std::vector<complex> out(n);
  for (std::size_t j = 1; j <= n; ++j) out[j - 1] = scale * spec[j];
  return out;
}

std::vector<complex> dst_apply(const DiscreteChain& chain,
                               std::span<const complex> v, DstMethod method) {
  if (static_cast<int>(v.size()) != chain.N) {
    throw InvalidParameter("vector length does not match the chain");
  }
  return method == DstMethod::dense ? dst_dense(v) : dst_fast(v);
}

double eigenvalue(const DiscreteChain& chain, int n) {
  if (n < 1 || n > chain.N) throw InvalidParameter("eigenvalue index out of range");
  const int np1 = chain.N + 1;
  // Reflect into the lower half so that eps_{N+1-n} = -eps_n holds exactly.
  if (2 * n == np1) return 0.0;
  if (2 * n > np1) return -eigenvalue(chain, np1 - n);
  return -chain.J * std::cos(kPi * n / np1);
}

namespace {

std::vector<double> scaled_spectrum(const DiscreteChain& chain) {
  std::vector<double> e(chain.N);
  for (int n = 1; n <= chain.N; ++n) e[n - 1] = eigenvalue(chain, n) * chain.t0() / chain.hbar;
  return e;
}

}  // namespace

DiscreteState evolve_discrete(const DiscreteChain& chain,
                              const DiscreteState& state, double tau,
                              DstMethod method) {
  if (!std::isfinite(tau)) throw InvalidParameter("evolution time must be finite");
  auto b = dst_apply(chain, state.amps, method);
  const auto e = scaled_spectrum(chain);
  for (int n = 0; n < chain.N; ++n) b[n] *= std::polar(1.0, -e[n] * tau);
  return {dst_apply(chain, b, method)};
}

CarpetField discrete_carpet(const DiscreteChain& chain, const WellConfig& well,
                            const GaussianPacket& packet, const Axis& times) {
  if (chain.N < 2) throw InvalidParameter("discrete carpet needs N >= 2");
  const DiscreteState psi0 = discrete_initial(chain, well, packet);
  const auto b = dst_apply(chain, psi0.amps);
  const auto e = scaled_spectrum(chain);
  const std::size_t nx = chain.N, nt = times.n;
  std::vector<double> values(nx * nt);
#pragma omp parallel
  {
    std::vector<complex> phased(nx);
#pragma omp for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(nt); ++j) {
      const double tau = times.at(j);
      for (std::size_t n = 0; n < nx; ++n) phased[n] = b[n] * std::polar(1.0, -e[n] * tau);
      const auto amps = dst_fast(phased);
      for (std::size_t n = 0; n < nx; ++n) values[j * nx + n] = std::norm(amps[n]);
    }
  }
  return CarpetField(SpaceTimeGrid(Axis(1.0, static_cast<double>(chain.N), nx), times),
                     std::move(values), false);
}

double map_time(const DiscreteChain& chain, const WellConfig& well, double t) {
  const double np1 = chain.N + 1.0;
  const double revival_in_t0 = 4.0 * np1 * np1 / kPi;
  return t / well.T * revival_in_t0;
}

namespace {

struct FidelityFn {
  std::vector<double> weights;  // |<n|U|psi0>|^2
  std::vector<double> spectrum;
  double operator()(double tau) const {
    complex acc{};
    for (std::size_t n = 0; n < weights.size(); ++n) {
      acc += weights[n] * std::polar(1.0, -spectrum[n] * tau);
    }
    return std::norm(acc);
  }
};

FidelityFn make_fidelity(const DiscreteChain& chain, const DiscreteState& psi0) {
  FidelityFn f;
  for (const auto& c : dst_apply(chain, psi0.amps)) f.weights.push_back(std::norm(c));
  f.spectrum = scaled_spectrum(chain);
  return f;
}

}  // namespace

double discrete_fidelity(const DiscreteChain& chain, const DiscreteState& psi0,
                         double tau) {
  return make_fidelity(chain, psi0)(tau);
}

RevivalPeak revival_scan(const DiscreteChain& chain, const WellConfig& well,
                         const GaussianPacket& packet, double window_lo,
                         double window_hi, int samples) {
  if (samples < 3) throw InvalidParameter("revival scan needs at least 3 samples");
  if (!std::isfinite(window_lo) || !std::isfinite(window_hi) || !(window_lo < window_hi)) {
    throw InvalidParameter("revival scan window is degenerate");
  }
  const FidelityFn fid = make_fidelity(chain, discrete_initial(chain, well, packet));
  const Axis grid(window_lo, window_hi, static_cast<std::size_t>(samples));
  std::size_t best = 0;
  double best_val = -1.0;
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double v = fid(grid.at(i));
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = grid.at(best == 0 ? 0 : best - 1);
  double b = grid.at(best + 1 == grid.n ? best : best + 1);
  constexpr double kTol = 1e-6;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fid(c), fd = fid(d);
  while (b - a > kTol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fid(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fid(d);
    }
  }
  RevivalPeak peak{0.5 * (a + b), fid(0.5 * (a + b))};
  // Never report worse than the best scan sample.
  if (peak.fidelity_peak < best_val) peak = {grid.at(best), best_val};
  return peak;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw InvalidParameter("pearson needs two samples of equal length >= 2");
  }
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) throw InvalidParameter("pearson of a constant sample");
  return sab / std::sqrt(saa * sbb);
}

}  // namespace qcarpet
