#include "qcarpet/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcarpet/canal_decomposition.hpp"
#include "qcarpet/csv_io.hpp"
#include "qcarpet/discrete_chain.hpp"
#include "qcarpet/eigenbasis.hpp"
#include "qcarpet/errors.hpp"
#include "qcarpet/evolution.hpp"
#include "qcarpet/fractional_revival.hpp"
#include "qcarpet/render.hpp"

namespace qcarpet {

namespace {

struct PacketArgs {
  double xbar = 0.25;
  double sx = 1.0 / (5.0 * kPi);
  double pbar = 25.0 * kPi;
};

struct OutputArgs {
  std::string out;
  std::string format = "ppm";
  std::optional<double> norm;
};

struct ModeArgs {
  std::optional<int> nmax;
  double tail_tol = 1e-10;
};

// Provenance lines recorded next to every output file.
class Provenance {
 public:
  explicit Provenance(std::string command) {
    lines_.push_back("command = " + std::move(command));
  }
  Provenance& add(const std::string& key, double v) {
    lines_.push_back("param " + key + " = " + format_double(v));
    return *this;
  }
  Provenance& add(const std::string& key, long long v) {
    lines_.push_back("param " + key + " = " + std::to_string(v));
    return *this;
  }
  Provenance& add(const std::string& key, const std::string& v) {
    lines_.push_back("param " + key + " = " + v);
    return *this;
  }
  Provenance& add_packet(const PacketArgs& p) {
    return add("xbar_over_L", p.xbar).add("sx_over_L", p.sx).add("pbar_L_over_hbar", p.pbar);
  }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  std::vector<std::string> lines_;
};

void add_packet_options(CLI::App* app, PacketArgs& p) {
  app->add_option("--xbar", p.xbar, "mean position / L")->capture_default_str();
  app->add_option("--sx", p.sx, "position spread / L")->capture_default_str();
  app->add_option("--pbar", p.pbar, "mean momentum in hbar / L")->capture_default_str();
}

void add_output_options(CLI::App* app, OutputArgs& o, const std::string& def) {
  o.out = def;
  app->add_option("--out", o.out, "output path")->capture_default_str();
  app->add_option("--format", o.format, "ppm or csv")
      ->check(CLI::IsMember({"ppm", "csv"}))
      ->capture_default_str();
  app->add_option("--norm", o.norm, "fixed colour normalisation (default: global max)")
      ->check(CLI::PositiveNumber);
}

void add_mode_options(CLI::App* app, ModeArgs& m) {
  auto* nmax = app->add_option("--nmax", m.nmax, "number of sine modes")
                   ->check(CLI::Range(1, kMaxModes));
  app->add_option("--tail-tol", m.tail_tol, "mode tail tolerance for automatic nmax")
      ->capture_default_str()
      ->excludes(nmax);
}

int resolve_nmax(const WellConfig& well, const GaussianPacket& packet,
                 const ModeArgs& m) {
  return m.nmax ? *m.nmax : choose_nmax(well, packet, m.tail_tol);
}

void emit_field(const CarpetField& field, const OutputArgs& o, Provenance prov,
                std::ostream& out) {
  prov.add("format", o.format);
  if (o.norm) prov.add("norm", *o.norm);
  if (o.format == "csv") {
    write_csv(field, prov.lines(), o.out);
  } else {
    RenderSpec spec;
    spec.colormap = field.is_signed() ? Colormap::diverging : Colormap::density;
    spec.fixed_norm = o.norm;
    write_ppm(colorize(field, spec), o.out);
    auto meta = grid_metadata(field);
    meta.insert(meta.end(), prov.lines().begin(), prov.lines().end());
    write_meta(meta, o.out + ".meta");
  }
  out << "wrote " << o.out << " (" << field.nx() << " x " << field.nt() << ", max "
      << format_double(field.max_abs()) << ")\n";
}

void warn_leakage(const GaussianPacket& p, std::ostream& err) {
  if (p.leakage_warning) {
    err << "warning: confinement ratio " << format_double(p.confinement_ratio)
        << " < " << kConfinementWarning << "; packet leaks past the walls\n";
  }
}

TermKind parse_kind(const std::string& s) {
  if (s == "bplus") return TermKind::background_plus;
  if (s == "bminus") return TermKind::background_minus;
  if (s == "interference") return TermKind::interference;
  return TermKind::all;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Quantum carpets of a Gaussian packet in an infinite well and a tight-binding chain"};
  app.name("carpet");
  app.require_subcommand(1);

  std::function<void()> action;

  // carpet
  PacketArgs carpet_packet;
  OutputArgs carpet_out;
  ModeArgs carpet_modes;
  std::size_t carpet_nx = 512, carpet_nt = 512;
  double carpet_t_min = 0.0, carpet_t_max = 1.0;
  auto* cmd_carpet = app.add_subcommand("carpet", "continuous quantum carpet |Psi(x,t)|^2");
  add_packet_options(cmd_carpet, carpet_packet);
  add_output_options(cmd_carpet, carpet_out, "carpet.ppm");
  add_mode_options(cmd_carpet, carpet_modes);
  cmd_carpet->add_option("--nx", carpet_nx)->check(CLI::Range(2, 1 << 16))->capture_default_str();
  cmd_carpet->add_option("--nt", carpet_nt)->check(CLI::Range(2, 1 << 16))->capture_default_str();
  cmd_carpet->add_option("--t-min", carpet_t_min, "start time in units of T")->capture_default_str();
  cmd_carpet->add_option("--t-max", carpet_t_max, "end time in units of T")->capture_default_str();
  cmd_carpet->callback([&] {
    action = [&] {
      const WellConfig well = make_well(1.0);
      const GaussianPacket p = make_packet(well, carpet_packet.xbar, carpet_packet.sx, carpet_packet.pbar);
      warn_leakage(p, err);
      const int nmax = resolve_nmax(well, p, carpet_modes);
      const auto grid = SpaceTimeGrid::over_well(well, carpet_nx, carpet_t_min * well.T,
                                                 carpet_t_max * well.T, carpet_nt);
      const CarpetField field = carpet(well, coeffs_quadrature(well, p, nmax), grid);
      Provenance prov("carpet");
      prov.add_packet(carpet_packet)
          .add("nmax", static_cast<long long>(nmax))
          .add("nx", static_cast<long long>(carpet_nx))
          .add("nt", static_cast<long long>(carpet_nt))
          .add("t_min_over_T", carpet_t_min)
          .add("t_max_over_T", carpet_t_max);
      emit_field(field, carpet_out, prov, out);
    };
  });

  // fractional
  PacketArgs frac_packet;
  frac_packet.sx = 1.0 / (20.0 * kPi);
  ModeArgs frac_modes;
  long long frac_alpha = 1, frac_beta = 2;
  std::size_t frac_nx = 2048;
  bool frac_compare = false;
  double frac_threshold = kDefaultPacketThreshold;
  std::string frac_out;
  auto* cmd_frac = app.add_subcommand("fractional", "fractional revival at t = (alpha/beta)(T/2)");
  add_packet_options(cmd_frac, frac_packet);
  add_mode_options(cmd_frac, frac_modes);
  cmd_frac->add_option("--alpha", frac_alpha)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_frac->add_option("--beta", frac_beta)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_frac->add_option("--nx", frac_nx, "x samples over [0, L]")->check(CLI::Range(3, 1 << 20))->capture_default_str();
  cmd_frac->add_flag("--compare", frac_compare, "report reconstruction error and packet count");
  cmd_frac->add_option("--threshold", frac_threshold, "packet threshold fraction of the peak")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd_frac->add_option("--out", frac_out, "CSV profile: x, closed-form density, direct density");
  cmd_frac->callback([&] {
    action = [&] {
      const WellConfig well = make_well(1.0);
      const GaussianPacket p = make_packet(well, frac_packet.xbar, frac_packet.sx, frac_packet.pbar);
      warn_leakage(p, err);
      const RevivalFraction f = make_fraction(frac_alpha, frac_beta);
      const GaussSumTable table = gauss_table(f);
      const Axis xs(0.0, well.L, frac_nx);
      out << "alpha = " << f.alpha << ", beta = " << f.beta << ", q_alpha = " << f.q_alpha
          << ", t/T = " << format_double(f.time_over_T()) << '\n';
      if (f.was_reduced()) out << "alpha reduced from " << f.input_alpha << " modulo 2 beta\n";
      for (std::int64_t n = 1; n <= f.beta; ++n) {
        out << "theta(" << n << ") = " << format_double(table.phases[n - 1]) << '\n';
      }
      const auto recon = sample_fractional_reconstruction(well, p, f, xs);
      std::vector<double> rho(xs.n);
      for (std::size_t i = 0; i < xs.n; ++i) rho[i] = std::norm(recon.values[i]);
      std::optional<SampledState> direct;
      if (frac_compare || !frac_out.empty()) {
        const int nmax = resolve_nmax(well, p, frac_modes);
        direct = sample_wavefunction(well, coeffs_quadrature(well, p, nmax), xs,
                                     well.T * f.time_over_T());
        if (frac_compare) {
          out << "nmax = " << nmax << '\n';
          out << "reconstruction_error = " << format_double(l2_distance(recon, *direct)) << '\n';
          out << "packets = " << count_packets(rho, frac_threshold) << '\n';
        }
      }
      if (!frac_out.empty()) {
        Provenance prov("fractional");
        prov.add_packet(frac_packet)
            .add("alpha", static_cast<long long>(f.alpha))
            .add("beta", static_cast<long long>(f.beta))
            .add("nx", static_cast<long long>(frac_nx));
        std::ostringstream body;
        for (const auto& l : prov.lines()) body << "# " << l << '\n';
        body << "# columns = x, closed_form_density, direct_density\n";
        for (std::size_t i = 0; i < xs.n; ++i) {
          body << format_double(xs.at(i)) << ',' << format_double(rho[i]) << ','
               << format_double(std::norm(direct->values[i])) << '\n';
        }
        std::ofstream f_out(frac_out, std::ios::binary | std::ios::trunc);
        if (!f_out) throw IoError("cannot open for writing", frac_out);
        f_out << body.str();
        if (!f_out) throw IoError("write failed", frac_out);
        out << "wrote " << frac_out << '\n';
      }
    };
  });

  // gauss-sum
  long long gs_alpha = 1, gs_beta = 2;
  auto* cmd_gs = app.add_subcommand("gauss-sum", "tabulate S(n, alpha, beta) and its phase");
  cmd_gs->add_option("--alpha", gs_alpha)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_gs->add_option("--beta", gs_beta)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_gs->callback([&] {
    action = [&] {
      const RevivalFraction f = make_fraction(gs_alpha, gs_beta);
      const GaussSumTable t = gauss_table(f);
      out << "# alpha = " << f.alpha << ", beta = " << f.beta << ", q_alpha = " << f.q_alpha
          << ", sqrt(beta) = " << format_double(std::sqrt(static_cast<double>(f.beta))) << '\n';
      out << "n,re_S,im_S,abs_S,theta\n";
      for (std::int64_t n = 1; n <= f.beta; ++n) {
        const complex s = t.values[n - 1];
        out << n << ',' << format_double(s.real()) << ',' << format_double(s.imag()) << ','
            << format_double(std::abs(s)) << ',' << format_double(t.phases[n - 1]) << '\n';
      }
    };
  });

  // canals
  PacketArgs canal_packet;
  OutputArgs canal_out;
  std::string canal_terms = "all";
  std::optional<int> j_min, j_max, k_min, k_max;
  bool canal_auto = false;
  double n_sigma = kDefaultSigmaCut;
  std::size_t canal_nx = 512, canal_nt = 512;
  double canal_t_min = 0.0, canal_t_max = 1.0;
  auto* cmd_canal = app.add_subcommand("canals", "background / interference term fields");
  add_packet_options(cmd_canal, canal_packet);
  add_output_options(cmd_canal, canal_out, "canals.ppm");
  cmd_canal->add_option("--terms", canal_terms, "bplus, bminus, interference or all")
      ->check(CLI::IsMember({"bplus", "bminus", "interference", "all"}))
      ->capture_default_str();
  auto* o_jmin = cmd_canal->add_option("--j-min", j_min);
  auto* o_jmax = cmd_canal->add_option("--j-max", j_max);
  auto* o_kmin = cmd_canal->add_option("--k-min", k_min);
  auto* o_kmax = cmd_canal->add_option("--k-max", k_max);
  auto* o_auto = cmd_canal->add_flag("--auto", canal_auto, "derive ranges from --n-sigma");
  for (auto* o : {o_jmin, o_jmax, o_kmin, o_kmax}) o->excludes(o_auto);
  o_jmin->needs(o_jmax)->needs(o_kmin)->needs(o_kmax);
  o_jmax->needs(o_jmin);
  o_kmin->needs(o_jmin);
  o_kmax->needs(o_jmin);
  cmd_canal->add_option("--n-sigma", n_sigma)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_canal->add_option("--nx", canal_nx)->check(CLI::Range(2, 1 << 16))->capture_default_str();
  cmd_canal->add_option("--nt", canal_nt)->check(CLI::Range(2, 1 << 16))->capture_default_str();
  cmd_canal->add_option("--t-min", canal_t_min, "start time in units of T")->capture_default_str();
  cmd_canal->add_option("--t-max", canal_t_max, "end time in units of T")->capture_default_str();
  cmd_canal->callback([&] {
    action = [&] {
      const WellConfig well = make_well(1.0);
      const GaussianPacket p = make_packet(well, canal_packet.xbar, canal_packet.sx, canal_packet.pbar);
      const TermKind kind = parse_kind(canal_terms);
      Provenance prov("canals");
      prov.add_packet(canal_packet).add("terms", canal_terms);
      TermSelection sel;
      if (canal_auto) {
        sel = TermSelection::automatic(kind, n_sigma);
        prov.add("selection", "auto").add("n_sigma", n_sigma);
      } else if (j_min) {
        sel = TermSelection::ranges(kind, {*j_min, *j_max}, {*k_min, *k_max});
        prov.add("j_min", static_cast<long long>(*j_min))
            .add("j_max", static_cast<long long>(*j_max))
            .add("k_min", static_cast<long long>(*k_min))
            .add("k_max", static_cast<long long>(*k_max));
      } else {
        sel = TermSelection::line_family(kind);
        prov.add("selection", "line-family j=-4..4 k=-|j|..|j|+1");
      }
      const auto grid = SpaceTimeGrid::over_well(well, canal_nx, canal_t_min * well.T,
                                                 canal_t_max * well.T, canal_nt);
      prov.add("nx", static_cast<long long>(canal_nx))
          .add("nt", static_cast<long long>(canal_nt))
          .add("t_min_over_T", canal_t_min)
          .add("t_max_over_T", canal_t_max);
      emit_field(term_field(well, p, sel, grid), canal_out, prov, out);
    };
  });

  // discrete
  PacketArgs disc_packet;
  OutputArgs disc_out;
  int sites = 150;
  std::optional<double> disc_t_max;
  bool map_from_continuous = false;
  std::size_t disc_nt = 512;
  auto* cmd_disc = app.add_subcommand("discrete", "tight-binding chain carpet |<n|Psi_t>|^2");
  add_packet_options(cmd_disc, disc_packet);
  add_output_options(cmd_disc, disc_out, "discrete.ppm");
  cmd_disc->add_option("--sites", sites)->check(CLI::Range(2, 1 << 20))->capture_default_str();
  cmd_disc->add_option("--t-max", disc_t_max,
                       "end time in t0 units (default: image of T), or in units of T "
                       "with --map-from-continuous");
  cmd_disc->add_flag("--map-from-continuous", map_from_continuous,
                     "read --t-max in units of the well revival time T");
  cmd_disc->add_option("--nt", disc_nt)->check(CLI::Range(2, 1 << 16))->capture_default_str();
  cmd_disc->callback([&] {
    action = [&] {
      const WellConfig well = make_well(1.0);
      const GaussianPacket p = make_packet(well, disc_packet.xbar, disc_packet.sx, disc_packet.pbar);
      const DiscreteChain chain = make_chain(sites);
      double tau_max = map_time(chain, well, well.T);
      if (disc_t_max) {
        tau_max = map_from_continuous ? map_time(chain, well, *disc_t_max * well.T) : *disc_t_max;
      }
      if (!(tau_max > 0.0)) throw InvalidParameter("--t-max must be positive");
      Provenance prov("discrete");
      prov.add_packet(disc_packet)
          .add("sites", static_cast<long long>(sites))
          .add("t_max_over_t0", tau_max)
          .add("nt", static_cast<long long>(disc_nt));
      emit_field(discrete_carpet(chain, well, p, Axis(0.0, tau_max, disc_nt)), disc_out, prov, out);
    };
  });

  // revival-scan
  PacketArgs scan_packet;
  int scan_sites = 150;
  double window = 0.05;
  int scan_samples = 2001;
  auto* cmd_scan = app.add_subcommand("revival-scan", "locate the chain revival near the image of T");
  add_packet_options(cmd_scan, scan_packet);
  cmd_scan->add_option("--sites", scan_sites)->check(CLI::Range(1, 1 << 20))->capture_default_str();
  cmd_scan->add_option("--window", window, "relative half-width around the image of T")
      ->check(CLI::Range(1e-9, 1.0))
      ->capture_default_str();
  cmd_scan->add_option("--samples", scan_samples)->check(CLI::Range(3, 1 << 24))->capture_default_str();
  cmd_scan->callback([&] {
    action = [&] {
      const WellConfig well = make_well(1.0);
      const GaussianPacket p = make_packet(well, scan_packet.xbar, scan_packet.sx, scan_packet.pbar);
      const DiscreteChain chain = make_chain(scan_sites);
      const double target = map_time(chain, well, well.T);
      const RevivalPeak peak = revival_scan(chain, well, p, target * (1.0 - window),
                                            target * (1.0 + window), scan_samples);
      out << "target_t_over_t0 = " << format_double(target) << '\n';
      out << "t_peak_over_t0 = " << format_double(peak.t_peak) << '\n';
      out << "fidelity_peak = " << format_double(peak.fidelity_peak) << '\n';
      out << "relative_offset = " << format_double((peak.t_peak - target) / target) << '\n';
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 1;
  }

  try {
    if (action) action();
  } catch (const NumericAccuracyError& e) {
    err << "numeric accuracy error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qcarpet
