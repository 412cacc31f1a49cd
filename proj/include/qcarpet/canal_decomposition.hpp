#pragma once

#include <optional>
#include <vector>

#include "qcarpet/core_model.hpp"

namespace qcarpet {

struct CanalIndex {
  int j = 0;
  int k = 0;
};

struct TildeCoords {
  double x_tilde = 0.0;
  double p_tilde = 0.0;
};

// x~ = (x/L - j t/(T/2) - k) L,  p~ = (pi hbar / 2L) j.
TildeCoords tilde_coords(const WellConfig& well, CanalIndex index, double x,
                         double t);

// B+- = (-1)^{jk}/(pi hbar) G((+-x~ - xbar)/sx) G((+-p~ - pbar)/sp),
// G(theta) = exp(-theta^2 / 2). sign must be +1 or -1.
double background_term(const WellConfig& well, const GaussianPacket& packet,
                       CanalIndex index, int sign, double x, double t);

// I = -2 (-1)^{jk}/(pi hbar) G(x~/sx) G(p~/sp) cos((xbar p~ - pbar x~)/(hbar/2)).
double interference_term(const WellConfig& well, const GaussianPacket& packet,
                         CanalIndex index, double x, double t);

struct IndexRange {
  int lo = 0;
  int hi = 0;
  bool contains(int v) const { return v >= lo && v <= hi; }
  int size() const { return hi - lo + 1; }
};

struct TermBounds {
  IndexRange j;
  IndexRange k;
};

inline constexpr double kDefaultSigmaCut = 8.0;

// Index ranges outside which every term over the grid is beyond n_sigma
// standard deviations in momentum (j) or position (k). Rounded outward.
TermBounds term_bounds(const WellConfig& well, const GaussianPacket& packet,
                       const SpaceTimeGrid& grid,
                       double n_sigma = kDefaultSigmaCut);

// |Psi(x,t)|^2 = eta_x (pi hbar / 2L) sum_{j,k} (B+ + B- + I), truncated at
// n_sigma.
double reconstruct_density(const WellConfig& well,
                           const GaussianPacket& packet, double x, double t,
                           double n_sigma = kDefaultSigmaCut);

enum class TermKind { background_plus, background_minus, interference, all };

// Which terms a term_field render sums. Explicit selections are a list of
// rows (j, [k_lo, k_hi]); an automatic one derives them from term_bounds.
struct TermSelection {
  struct Row {
    int j = 0;
    IndexRange k;
  };

  TermKind kind = TermKind::all;
  std::optional<std::vector<Row>> rows;
  double n_sigma = kDefaultSigmaCut;

  static TermSelection ranges(TermKind kind, IndexRange j, IndexRange k);
  static TermSelection single(TermKind kind, CanalIndex index);
  static TermSelection automatic(TermKind kind,
                                 double n_sigma = kDefaultSigmaCut);
  // j in [-4, 4], k in [-|j|, |j| + 1].
  static TermSelection line_family(TermKind kind);
};

std::vector<CanalIndex> default_line_family();

// Raw signed partial sum of the selected terms: no wall indicator and no
// pi hbar / 2L factor.
CarpetField term_field(const WellConfig& well, const GaussianPacket& packet,
                       const TermSelection& selection,
                       const SpaceTimeGrid& grid);

}  // namespace qcarpet
