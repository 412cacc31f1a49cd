#include "qcarpet/canal_decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "qcarpet/errors.hpp"

namespace qcarpet {

namespace {

double gauss(double theta) { return std::exp(-0.5 * theta * theta); }

// exp(-theta^2/2) is exactly 0.0 in binary64 beyond this argument, so
// skipping such terms leaves sums bit-identical.
constexpr double kUnderflowSigma = 40.0;

double parity(int j, int k) {
  return ((static_cast<long long>(j) * k) & 1) ? -1.0 : 1.0;
}

double p_tilde_of(const WellConfig& well, int j) {
  return kPi * well.hbar / (2.0 * well.L) * j;
}

// x~ / L for k = 0.
double u_of(const WellConfig& well, int j, double x, double t) {
  return x / well.L - j * t / (0.5 * well.T);
}

struct MomentumFactors {
  double plus, minus, inter;
};

MomentumFactors momentum_factors(const WellConfig& well,
                                 const GaussianPacket& packet, int j) {
  const double pt = p_tilde_of(well, j);
  return {gauss((pt - packet.pbar) / packet.sp),
          gauss((-pt - packet.pbar) / packet.sp), gauss(pt / packet.sp)};
}

// Sum over k in [k_lo, k_hi] of the selected terms for fixed j at (x, t).
double row_sum(const WellConfig& well, const GaussianPacket& packet,
               TermKind kind, int j, const MomentumFactors& mf, int k_lo,
               int k_hi, double x, double t) {
  const double pi_hbar = kPi * well.hbar;
  const double pt = p_tilde_of(well, j);
  const double u = u_of(well, j, x, t);
  double acc = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double xt = (u - k) * well.L;
    const double s = parity(j, k) / pi_hbar;
    if (kind == TermKind::background_plus || kind == TermKind::all) {
      acc += s * gauss((xt - packet.xbar) / packet.sx) * mf.plus;
    }
    if (kind == TermKind::background_minus || kind == TermKind::all) {
      acc += s * gauss((-xt - packet.xbar) / packet.sx) * mf.minus;
    }
    if (kind == TermKind::interference || kind == TermKind::all) {
      acc += -2.0 * s * gauss(xt / packet.sx) * mf.inter *
             std::cos((packet.xbar * pt - packet.pbar * xt) / (0.5 * well.hbar));
    }
  }
  return acc;
}

// k values with |x~| <= reach at (x, t) for index j.
IndexRange local_k_window(const WellConfig& well, int j, double x, double t,
                          double reach) {
  const double u = u_of(well, j, x, t);
  const double r = reach / well.L;
  return {static_cast<int>(std::ceil(u - r)), static_cast<int>(std::floor(u + r))};
}

IndexRange momentum_j_range(const WellConfig& well,
                            const GaussianPacket& packet, double n_sigma) {
  const double scale = 2.0 * well.L / (kPi * well.hbar);
  const double w = n_sigma * packet.sp;
  const double p = std::abs(packet.pbar);
  const double lo = std::min({-p - w, -w});
  const double hi = std::max({p + w, w});
  return {static_cast<int>(std::floor(lo * scale)),
          static_cast<int>(std::ceil(hi * scale))};
}

}  // namespace

TildeCoords tilde_coords(const WellConfig& well, CanalIndex index, double x,
                         double t) {
  return {(u_of(well, index.j, x, t) - index.k) * well.L,
          p_tilde_of(well, index.j)};
}

double background_term(const WellConfig& well, const GaussianPacket& packet,
                       CanalIndex index, int sign, double x, double t) {
  if (sign != 1 && sign != -1) throw InvalidParameter("sign must be +1 or -1");
  const TildeCoords c = tilde_coords(well, index, x, t);
  return parity(index.j, index.k) / (kPi * well.hbar) *
         gauss((sign * c.x_tilde - packet.xbar) / packet.sx) *
         gauss((sign * c.p_tilde - packet.pbar) / packet.sp);
}

double interference_term(const WellConfig& well, const GaussianPacket& packet,
                         CanalIndex index, double x, double t) {
  const TildeCoords c = tilde_coords(well, index, x, t);
  return -2.0 * parity(index.j, index.k) / (kPi * well.hbar) *
         gauss(c.x_tilde / packet.sx) * gauss(c.p_tilde / packet.sp) *
         std::cos((packet.xbar * c.p_tilde - packet.pbar * c.x_tilde) /
                  (0.5 * well.hbar));
}

TermBounds term_bounds(const WellConfig& well, const GaussianPacket& packet,
                       const SpaceTimeGrid& grid, double n_sigma) {
  if (!(n_sigma > 0.0)) throw InvalidParameter("n_sigma must be positive");
  TermBounds b;
  b.j = momentum_j_range(well, packet, n_sigma);
  // x~/L + k = x/L - 2 j t / T is bilinear in (j, t): extremes at corners.
  double u_min = grid.x.lo / well.L, u_max = grid.x.hi / well.L;
  double jt_min = 0.0, jt_max = 0.0;
  for (int j : {b.j.lo, b.j.hi}) {
    for (double t : {grid.t.lo, grid.t.hi}) {
      jt_min = std::min(jt_min, j * t);
      jt_max = std::max(jt_max, j * t);
    }
  }
  u_min -= jt_max / (0.5 * well.T);
  u_max -= jt_min / (0.5 * well.T);
  const double r = (std::abs(packet.xbar) + n_sigma * packet.sx) / well.L;
  b.k = {static_cast<int>(std::floor(u_min - r)),
         static_cast<int>(std::ceil(u_max + r))};
  return b;
}

double reconstruct_density(const WellConfig& well,
                           const GaussianPacket& packet, double x, double t,
                           double n_sigma) {
  if (!(n_sigma > 0.0)) throw InvalidParameter("n_sigma must be positive");
  if (!inside_well(well, x)) return 0.0;
  const IndexRange jr = momentum_j_range(well, packet, n_sigma);
  const double reach = std::abs(packet.xbar) + n_sigma * packet.sx;
  double acc = 0.0;
  for (int j = jr.lo; j <= jr.hi; ++j) {
    const IndexRange kw = local_k_window(well, j, x, t, reach);
    if (kw.lo > kw.hi) continue;
    acc += row_sum(well, packet, TermKind::all, j,
                   momentum_factors(well, packet, j), kw.lo, kw.hi, x, t);
  }
  return kPi * well.hbar / (2.0 * well.L) * acc;
}

TermSelection TermSelection::ranges(TermKind kind, IndexRange j,
                                    IndexRange k) {
  if (j.lo > j.hi || k.lo > k.hi) {
    throw InvalidParameter("term selection ranges must be nonempty");
  }
  TermSelection s;
  s.kind = kind;
  s.rows.emplace();
  for (int jj = j.lo; jj <= j.hi; ++jj) s.rows->push_back({jj, k});
  return s;
}

TermSelection TermSelection::single(TermKind kind, CanalIndex index) {
  return ranges(kind, {index.j, index.j}, {index.k, index.k});
}

TermSelection TermSelection::automatic(TermKind kind, double n_sigma) {
  if (!(n_sigma > 0.0)) throw InvalidParameter("n_sigma must be positive");
  TermSelection s;
  s.kind = kind;
  s.n_sigma = n_sigma;
  return s;
}

TermSelection TermSelection::line_family(TermKind kind) {
  TermSelection s;
  s.kind = kind;
  s.rows.emplace();
  for (int j = -4; j <= 4; ++j) {
    const int a = j < 0 ? -j : j;
    s.rows->push_back({j, {-a, a + 1}});
  }
  return s;
}

std::vector<CanalIndex> default_line_family() {
  std::vector<CanalIndex> out;
  const TermSelection family = TermSelection::line_family(TermKind::all);
  for (const auto& row : *family.rows) {
    for (int k = row.k.lo; k <= row.k.hi; ++k) out.push_back({row.j, k});
  }
  return out;
}

CarpetField term_field(const WellConfig& well, const GaussianPacket& packet,
                       const TermSelection& selection,
                       const SpaceTimeGrid& grid) {
  std::vector<TermSelection::Row> rows;
  double reach = 0.0;
  if (selection.rows) {
    if (selection.rows->empty()) {
      throw InvalidParameter("term selection is empty");
    }
    for (const auto& r : *selection.rows) {
      if (r.k.lo > r.k.hi) throw InvalidParameter("term selection row is empty");
    }
    rows = *selection.rows;
    reach = std::abs(packet.xbar) + kUnderflowSigma * packet.sx;
  } else {
    const TermBounds b = term_bounds(well, packet, grid, selection.n_sigma);
    for (int j = b.j.lo; j <= b.j.hi; ++j) rows.push_back({j, b.k});
    reach = std::abs(packet.xbar) + selection.n_sigma * packet.sx;
  }

  std::vector<MomentumFactors> mfs;
  mfs.reserve(rows.size());
  for (const auto& r : rows) mfs.push_back(momentum_factors(well, packet, r.j));

  const std::size_t nx = grid.x.n, nt = grid.t.n;
  std::vector<double> values(nx * nt);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t it = 0; it < static_cast<std::ptrdiff_t>(nt); ++it) {
    const double t = grid.t.at(it);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double x = grid.x.at(ix);
      double acc = 0.0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const IndexRange w = local_k_window(well, rows[r].j, x, t, reach);
        const int lo = std::max(w.lo, rows[r].k.lo);
        const int hi = std::min(w.hi, rows[r].k.hi);
        if (lo > hi) continue;
        acc += row_sum(well, packet, selection.kind, rows[r].j, mfs[r], lo, hi,
                       x, t);
      }
      values[it * nx + ix] = acc;
    }
  }
  return CarpetField(grid, std::move(values), true);
}

}  // namespace qcarpet
