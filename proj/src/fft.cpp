#include "qcarpet/fft.hpp"

#include <cmath>
#include <utility>

#include "qcarpet/errors.hpp"

namespace qcarpet::fft {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

// exp(-2 pi i num / den) with num reduced modulo den first.
complex root_of_unity(std::size_t num, std::size_t den) {
  const double a = -2.0 * kPi * static_cast<double>(num % den) / static_cast<double>(den);
  return {std::cos(a), std::sin(a)};
}

}  // namespace

void radix2(std::span<complex> a) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw InvalidParameter("radix-2 length must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    // Twiddles come straight from cos/sin to avoid recurrence drift.
    std::vector<complex> w(half);
    for (std::size_t k = 0; k < half; ++k) w[k] = root_of_unity(k, len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const complex u = a[i + k];
        const complex v = a[i + k + half] * w[k];
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

std::vector<complex> dft(std::span<const complex> input) {
  const std::size_t n = input.size();
  if (n == 0) return {};
  if (is_power_of_two(n)) {
    std::vector<complex> out(input.begin(), input.end());
    radix2(out);
    return out;
  }
  // km = (k^2 + m^2 - (k - m)^2) / 2, so X_k = w_k sum_m (x_m w_m) conj(w_{k-m})
  // with chirp w_m = exp(-i pi m^2 / n).
  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;
  std::vector<complex> chirp(n);
  for (std::size_t i = 0; i < n; ++i) {
    // exp(-i pi i^2 / n) = exp(-2 pi i (i^2 mod 2n) / (2n)).
    chirp[i] = root_of_unity((i * i) % (2 * n), 2 * n);
  }
  std::vector<complex> a(m), b(m);
  for (std::size_t i = 0; i < n; ++i) a[i] = input[i] * chirp[i];
  b[0] = std::conj(chirp[0]);
  for (std::size_t i = 1; i < n; ++i) b[i] = b[m - i] = std::conj(chirp[i]);
  radix2(a);
  radix2(b);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  // Inverse via conjugation.
  for (auto& v : a) v = std::conj(v);
  radix2(a);
  std::vector<complex> out(n);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::conj(a[i]) * scale * chirp[i];
  return out;
}

}  // namespace qcarpet::fft
