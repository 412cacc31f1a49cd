// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [--only N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcarpet/canal_decomposition.hpp"
#include "qcarpet/csv_io.hpp"
#include "qcarpet/discrete_chain.hpp"
#include "qcarpet/eigenbasis.hpp"
#include "qcarpet/evolution.hpp"
#include "qcarpet/fractional_revival.hpp"

using namespace qcarpet;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

const WellConfig kWell = make_well(1.0);
const GaussianPacket kWide = make_packet(kWell, 0.25, 1.0 / (5.0 * kPi), 25.0 * kPi);
const GaussianPacket kNarrow = make_packet(kWell, 0.25, 1.0 / (20.0 * kPi), 25.0 * kPi);

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

Outcome full_revival() {
  Stopwatch clock;
  const auto modes = coeffs_quadrature(kWell, kWide, 128);
  const Axis xs(0.0, kWell.L, 2048);
  const double d = l2_distance(sample_wavefunction(kWell, modes, xs, kWell.T),
                               sample_wavefunction(kWell, modes, xs, 0.0));
  const double secs = clock.seconds();
  return {d < 1e-6 && secs < 1.0, "distance " + fmt(d) + " (< 1e-6), " + fmt(secs) + " s (< 1 s)"};
}

Outcome mirror_revival() {
  const auto modes = coeffs_quadrature(kWell, kWide, 128);
  const Axis xs(0.0, kWell.L, 2048);
  SampledState mirror{xs, std::vector<complex>(xs.n)};
  for (std::size_t i = 0; i < xs.n; ++i) {
    mirror.values[i] = -wavefunction_at(kWell, modes, kWell.L - xs.at(i), 0.0);
  }
  const double d = l2_distance(sample_wavefunction(kWell, modes, xs, kWell.T / 2), mirror);
  return {d < 1e-6, "distance " + fmt(d) + " (< 1e-6)"};
}

Outcome gauss_magnitude() {
  Stopwatch clock;
  double worst = 0.0;
  long sums = 0;
  std::vector<std::string> violations;
  for (std::int64_t beta = 1; beta <= 50; ++beta) {
    for (std::int64_t alpha = 1; alpha < 2 * beta; ++alpha) {
      if (std::gcd(alpha, beta) != 1) continue;
      const auto f = make_fraction(alpha, beta);
      for (std::int64_t n = 0; n < beta; ++n) {
        const double e = std::abs(std::abs(gauss_sum(f, n)) - std::sqrt(static_cast<double>(beta)));
        worst = std::max(worst, e);
        ++sums;
        if (e >= 1e-12) {
          violations.push_back("alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta) +
                               " (alpha " + (alpha % 2 ? "odd" : "even") + ")");
        }
      }
    }
  }
  const double secs = clock.seconds();
  std::string detail = std::to_string(sums) + " sums, max error " + fmt(worst) + " (< 1e-12), " +
                       fmt(secs) + " s (< 10 s)";
  if (!violations.empty()) detail += ", violations: " + violations.front() + " and " +
                                     std::to_string(violations.size() - 1) + " more";
  return {violations.empty() && secs < 10.0, detail};
}

Outcome fractional_equivalence() {
  Stopwatch clock;
  const Axis xs(0.0, kWell.L, 2048);
  const auto wide_modes = coeffs_quadrature(kWell, kWide, 128);
  const auto narrow_modes = coeffs_quadrature(kWell, kNarrow, 256);
  const std::vector<std::pair<int, int>> fractions{{1, 2}, {1, 3}, {5, 6}, {3, 4}, {3, 8}};
  double worst = 0.0;
  for (const auto& [a, b] : fractions) {
    const auto f = make_fraction(a, b);
    worst = std::max(worst, reconstruction_error(kWell, kWide, wide_modes, f, xs));
    worst = std::max(worst, reconstruction_error(kWell, kNarrow, narrow_modes, f, xs));
  }
  const double secs = clock.seconds();
  return {worst < 1e-6 && secs < 5.0,
          "10 cases, max error " + fmt(worst) + " (< 1e-6), " + fmt(secs) + " s (< 5 s)"};
}

Outcome packet_counting() {
  const Axis xs(0.0, kWell.L, 4096);
  std::string detail;
  bool ok = true;
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {5, 6}}) {
    const auto s = sample_fractional_reconstruction(kWell, kNarrow, make_fraction(a, b), xs);
    std::vector<double> rho(xs.n);
    for (std::size_t i = 0; i < xs.n; ++i) rho[i] = std::norm(s.values[i]);
    const int c = count_packets(rho, 0.01);
    ok = ok && c == b;
    detail += (detail.empty() ? "" : ", ") + std::to_string(a) + "/" + std::to_string(b) +
              " -> " + std::to_string(c);
  }
  return {ok, detail};
}

Outcome canal_resummation() {
  Stopwatch clock;
  const auto grid = SpaceTimeGrid::over_well(kWell, 64, 0.0, kWell.T, 64);
  const CarpetField direct = carpet(kWell, coeffs_quadrature(kWell, kWide, 128), grid);
  double worst = 0.0;
  for (std::size_t it = 0; it < grid.t.n; ++it) {
    for (std::size_t ix = 0; ix < grid.x.n; ++ix) {
      const double r = reconstruct_density(kWell, kWide, grid.x.at(ix), grid.t.at(it), 8.0);
      worst = std::max(worst, std::abs(r - direct.at(ix, it)));
    }
  }
  const double secs = clock.seconds();
  const double rel = worst / direct.max_abs();
  return {rel < 1e-4 && secs < 30.0,
          "max error / peak " + fmt(rel) + " (< 1e-4), " + fmt(secs) + " s (< 30 s)"};
}

// Max-norm over the grid of the j-summed background rows B+-_{j,k} at fixed
// k, maximised separately over odd and even k.
std::pair<double, double> odd_even_background(const SpaceTimeGrid& grid) {
  const TermBounds b = term_bounds(kWell, kWide, grid, kDefaultSigmaCut);
  double odd = 0.0, even = 0.0;
  for (int k = b.k.lo; k <= b.k.hi; ++k) {
    for (TermKind kind : {TermKind::background_plus, TermKind::background_minus}) {
      TermSelection sel;
      sel.kind = kind;
      sel.rows.emplace();
      for (int j = b.j.lo; j <= b.j.hi; ++j) sel.rows->push_back({j, {k, k}});
      const double m = term_field(kWell, kWide, sel, grid).max_abs();
      (k % 2 != 0 ? odd : even) = std::max(k % 2 != 0 ? odd : even, m);
    }
  }
  return {odd, even};
}

Outcome odd_k_suppression() {
  const auto full = SpaceTimeGrid::over_well(kWell, 64, 0.0, kWell.T, 64);
  const auto [odd, even] = odd_even_background(full);
  const double ratio = odd / even;
  const auto early = SpaceTimeGrid::over_well(kWell, 64, 0.0, 0.02 * kWell.T, 64);
  const auto [odd_e, even_e] = odd_even_background(early);
  return {ratio < 1e-2, "odd/even max ratio " + fmt(ratio) + " over [0,T] (< 1e-2); " +
                            fmt(odd_e / even_e) + " over [0,0.02T]"};
}

Outcome discrete_chain_checks() {
  const DiscreteChain chain = make_chain(150);
  std::mt19937_64 rng(150);
  std::normal_distribution<double> nd;
  std::vector<complex> v(150);
  for (auto& c : v) c = {nd(rng), nd(rng)};

  const auto fast = dst_apply(chain, v, DstMethod::fast);
  const auto dense = dst_apply(chain, v, DstMethod::dense);
  const auto twice = dst_apply(chain, fast, DstMethod::fast);
  double fd = 0.0, inv = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    fd = std::max(fd, std::abs(fast[i] - dense[i]));
    inv = std::max(inv, std::abs(twice[i] - v[i]));
  }

  const double target = map_time(chain, kWell, kWell.T);
  DiscreteState s = discrete_initial(chain, kWell, kWide);
  double drift = 0.0;
  for (int step = 0; step < 256; ++step) {
    const double before = s.norm();
    s = evolve_discrete(chain, s, target / 256);
    drift = std::max(drift, std::abs(s.norm() - before));
  }

  const RevivalPeak peak = revival_scan(chain, kWell, kWide, 0.95 * target, 1.05 * target, 2001);
  const double offset = std::abs(peak.t_peak - target) / target;

  const bool ok = drift < 1e-12 && inv < 1e-12 && fd < 1e-10 && offset < 0.01;
  return {ok, "norm drift/step " + fmt(drift) + " (< 1e-12), involution " + fmt(inv) +
                  " (< 1e-12), fast vs dense " + fmt(fd) + " (< 1e-10), revival peak at " +
                  fmt(peak.t_peak / target) + " x 4(N+1)^2/pi with fidelity " +
                  fmt(peak.fidelity_peak) + ", offset " + fmt(offset) + " (< 0.01)"};
}

Outcome discrete_continuous_agreement() {
  const DiscreteChain chain = make_chain(150);
  const auto modes = coeffs_quadrature(kWell, kWide, 128);
  const DiscreteState s0 = discrete_initial(chain, kWell, kWide);
  bool ok = true;
  std::string detail;
  for (double frac : {0.01, 0.02, 0.05}) {
    const double t = frac * kWell.T;
    const DiscreteState s = evolve_discrete(chain, s0, map_time(chain, kWell, t));
    std::vector<double> disc(chain.N), cont(chain.N);
    for (int n = 1; n <= chain.N; ++n) {
      disc[n - 1] = std::norm(s.amps[n - 1]);
      cont[n - 1] = std::norm(wavefunction_at(kWell, modes, n * kWell.L / chain.N, t));
    }
    const double r = pearson(disc, cont);
    ok = ok && r > 0.99;
    detail += (detail.empty() ? "" : ", ") + std::string("r(") + fmt(frac) + "T) = " + fmt(r);
  }
  return {ok, detail + " (> 0.99)"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "qcarpet_acceptance";
  fs::create_directories(dir);
  const std::string bin = QCARPET_CLI_PATH;
  const std::vector<std::pair<std::string, std::vector<std::string>>> commands{
      {"carpet --out @.ppm", {".ppm", ".ppm.meta"}},
      {"carpet --format csv --nx 128 --nt 64 --out @.csv", {".csv"}},
      {"fractional --alpha 5 --beta 6 --compare --out @.csv", {".csv"}},
      {"gauss-sum --alpha 3 --beta 8", {}},
      {"canals --terms interference --out @.ppm", {".ppm", ".ppm.meta"}},
      {"canals --auto --nx 64 --nt 64 --format csv --out @.csv", {".csv"}},
      {"discrete --out @.ppm", {".ppm", ".ppm.meta"}},
      {"revival-scan", {}},
  };
  int mismatches = 0, failures = 0;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::uint64_t first = 0;
    for (int run = 0; run < 3; ++run) {
      const fs::path base = dir / ("cmd" + std::to_string(c) + "_run" + std::to_string(run));
      std::string args = commands[c].first;
      if (const auto at = args.find('@'); at != std::string::npos) args.replace(at, 1, base.string());
      const std::string stdout_path = base.string() + ".stdout";
      const int rc = std::system((bin + " " + args + " > " + stdout_path + " 2>/dev/null").c_str());
      if (rc != 0) ++failures;
      std::string blob = slurp(stdout_path);
      // The output path itself is echoed on stdout; normalise it away.
      for (std::size_t p; (p = blob.find(base.string())) != std::string::npos;) blob.replace(p, base.string().size(), "@");
      for (const auto& ext : commands[c].second) blob += slurp(base.string() + ext);
      const std::uint64_t h = fnv1a(blob);
      if (run == 0) first = h;
      else if (h != first) ++mismatches;
    }
  }
  return {mismatches == 0 && failures == 0,
          std::to_string(commands.size()) + " invocations x 3 runs, " + std::to_string(mismatches) +
              " hash mismatches, " + std::to_string(failures) + " non-zero exits"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "full revival", full_revival},
      {2, "mirror revival", mirror_revival},
      {3, "Gauss-sum magnitude", gauss_magnitude},
      {4, "fractional-revival equivalence", fractional_equivalence},
      {5, "packet counting", packet_counting},
      {6, "canal resummation", canal_resummation},
      {7, "odd-k background suppression", odd_k_suppression},
      {8, "discrete chain", discrete_chain_checks},
      {9, "discrete/continuous agreement", discrete_continuous_agreement},
      {10, "CLI determinism", determinism},
  };

  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << o.detail
              << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
