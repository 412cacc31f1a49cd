#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

template <class F>
double integrate(F f, double a, double b) {
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 8, 1e-13, &err);
}

// Reference packet written out independently of the library.
struct Packet {
  double xbar, sx, pbar;
  cd operator()(double x) const {
    const double a = std::pow(2.0 * pi * sx * sx, -0.25);
    const double d = x - xbar;
    return a * std::exp(-d * d / (4.0 * sx * sx)) * std::polar(1.0, pbar * x);
  }
};

inline Packet wide_packet() { return {0.25, 1.0 / (5.0 * pi), 25.0 * pi}; }
inline Packet narrow_packet() { return {0.25, 1.0 / (20.0 * pi), 25.0 * pi}; }

// c_n of the odd-symmetrised packet on (0, 1), adaptive quadrature per part.
inline cd sine_coefficient(const Packet& p, int n) {
  auto part = [&](bool imag) {
    auto f = [&](double x) {
      const cd v = p(x) - p(-x);
      return std::sqrt(2.0) * std::sin(n * pi * x) * (imag ? v.imag() : v.real());
    };
    double s = 0.0;
    const int panels = 32;
    for (int i = 0; i < panels; ++i) {
      s += integrate(f, double(i) / panels, double(i + 1) / panels);
    }
    return s;
  };
  return {part(false), part(true)};
}

// Direct series for S(n, alpha, beta) with floating phases.
inline cd gauss_sum(long alpha, long beta, long n) {
  const int q = alpha % 2 == 1 ? 1 : 0;
  cd s = 0.0;
  for (long j = 1; j <= beta; ++j) {
    const double ph = pi * j * (q + 2.0 * n / beta - double(j) * alpha / beta);
    s += std::polar(1.0, ph);
  }
  return s;
}

inline std::vector<cd> naive_dft(const std::vector<cd>& x) {
  const std::size_t n = x.size();
  std::vector<cd> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double re = 0, im = 0;
    for (std::size_t m = 0; m < n; ++m) {
      const long double ang = -2.0L * 3.141592653589793238462643383279L *
                              static_cast<long double>((k * m) % n) / n;
      re += x[m].real() * std::cos(ang) - x[m].imag() * std::sin(ang);
      im += x[m].real() * std::sin(ang) + x[m].imag() * std::cos(ang);
    }
    out[k] = {double(re), double(im)};
  }
  return out;
}

inline std::vector<std::vector<double>> dst_matrix(int N) {
  std::vector<std::vector<double>> u(N, std::vector<double>(N));
  for (int j = 1; j <= N; ++j)
    for (int k = 1; k <= N; ++k)
      u[j - 1][k - 1] = std::sqrt(2.0 / (N + 1)) * std::sin(pi * j * k / (N + 1));
  return u;
}

}  // namespace oracle
