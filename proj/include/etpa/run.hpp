#ifndef ETPA_RUN_HPP
#define ETPA_RUN_HPP

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "etpa/config_io.hpp"
#include "etpa/csv.hpp"
#include "etpa/freq_domain.hpp"
#include "etpa/special_functions.hpp"
#include "etpa/svg.hpp"
#include "etpa/time_domain.hpp"
#include "etpa/verify.hpp"

namespace etpa {

enum class command { delay_scan, spectrum, gamma, fig1, fig2, verify };

struct run_config {
  command cmd = command::delay_scan;
  std::string absorber_path;
  std::string output_path;
  bool normalized = false;

  double grid_min = 0.0;
  double grid_max = 0.0;
  int grid_n = 0;
  bool grid_set = false;

  std::string input_kind = "ideal";  // ideal | gaussian | product
  double delta_plus = 0.0, sigma_plus = 0.0, sigma_minus = 0.0;
  double omega1 = 0.0, omega2 = 0.0, sigma1 = 0.0, sigma2 = 0.0;

  double nu_m = 0.0;      // gamma command
  double omega_gf = 2.0;  // fig1/fig2/gamma without a config file
  double epsilon = 0.0;   // verify
};

namespace detail {

inline std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw error("grid count must be at least 2");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo))
    throw error("grid range must be finite and increasing");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = lo + (hi - lo) * i / static_cast<double>(n - 1);
  return g;
}

inline std::string with_suffix(const std::string& path, const std::string& suffix) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos || path.find('/', dot) != std::string::npos)
    return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

inline std::string svg_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos || path.find('/', dot) != std::string::npos)
    return path + ".svg";
  return path.substr(0, dot) + ".svg";
}

inline input_state make_input(const run_config& cfg) {
  if (cfg.input_kind == "ideal") return ideal_entangled{};
  if (cfg.input_kind == "gaussian")
    return gaussian_entangled{cfg.delta_plus, cfg.sigma_plus, cfg.sigma_minus};
  if (cfg.input_kind == "product")
    return product_gaussian{cfg.omega1, cfg.omega2, cfg.sigma1, cfg.sigma2};
  throw error("unknown input state '" + cfg.input_kind + "'");
}

}  // namespace detail

inline int run(const run_config& cfg) {
  using std::numbers::pi;

  switch (cfg.cmd) {
    case command::delay_scan: {
      const auto spec = load_absorber_config(cfg.absorber_path);
      const double period = 2.0 * pi / spec.omega_gf();
      const auto input = detail::make_input(cfg);
      csv_writer csv(cfg.output_path);
      std::vector<double> tau;
      if (cfg.grid_set)
        tau = detail::linspace(cfg.grid_min, cfg.grid_max, cfg.grid_n);
      else
        tau = detail::linspace(-10.0 * period, 10.0 * period, 2001);
      const auto scan = delay_scan(spec, input, tau);
      csv.comment("command: delay-scan");
      csv.comment("config: " + cfg.absorber_path);
      csv.comment("input_state: " + cfg.input_kind);
      csv.comment("normalization: " + scan.normalization);
      csv.comment(std::string("tau_units: ") +
                  (cfg.normalized ? "2*pi/omega_gf" : "absolute"));
      csv.header({"tau", "p_tpa"});
      for (std::size_t k = 0; k < scan.tau_grid.size(); ++k)
        csv.row({cfg.normalized ? scan.tau_grid[k] / period : scan.tau_grid[k],
                 scan.p_values[k]});
      return 0;
    }

    case command::spectrum: {
      const auto spec = load_absorber_config(cfg.absorber_path);
      const auto cs = make_coupling_set(spec);
      const double b = cs.band;
      // default range stops just short of +-2B: integer nu/B ratios are
      // common and the endpoints must not land on a pole
      std::vector<double> grid =
          cfg.grid_set ? detail::linspace(cfg.grid_min, cfg.grid_max, cfg.grid_n)
                       : detail::linspace(-1.996 * b, 1.996 * b, 401);
      const auto full = gamma_spectrum_full(cs, grid);
      const auto trunc = truncate_physical(full);
      const double unit = cfg.normalized ? b : 1.0;
      for (const auto* sp : {&full, &trunc}) {
        const std::string path = sp->truncated
            ? detail::with_suffix(cfg.output_path, "_truncated")
            : cfg.output_path;
        csv_writer csv(path);
        csv.comment("command: spectrum");
        csv.comment("config: " + cfg.absorber_path);
        csv.comment(sp->truncated ? "variant: truncated to (-B, B)"
                                  : "variant: full");
        csv.comment(std::string("omega_units: ") +
                    (cfg.normalized ? "omega_gf/2" : "absolute"));
        for (const auto& d : sp->delta_terms)
          csv.comment("delta " + csv_writer::format(d.location / unit) + " " +
                      csv_writer::format(d.weight.real()) + " " +
                      csv_writer::format(d.weight.imag()));
        csv.header({"omega_minus", "re_smooth", "im_smooth"});
        for (std::size_t k = 0; k < sp->grid.size(); ++k)
          csv.row({sp->grid[k] / unit, sp->smooth[k].real(), sp->smooth[k].imag()});
      }
      return 0;
    }

    case command::gamma: {
      double wgf = cfg.omega_gf;
      if (!cfg.absorber_path.empty())
        wgf = load_absorber_config(cfg.absorber_path).omega_gf();
      const double b = 0.5 * wgf;
      const double nu = cfg.normalized ? cfg.nu_m * b : cfg.nu_m;
      const double period = 2.0 * pi / wgf;
      csv_writer csv(cfg.output_path);
      std::vector<double> t =
          cfg.grid_set
              ? detail::linspace(cfg.grid_min * (cfg.normalized ? period : 1.0),
                                 cfg.grid_max * (cfg.normalized ? period : 1.0),
                                 cfg.grid_n)
              : detail::linspace(0.0, 20.0 * period, 2001);
      csv.comment("command: gamma");
      csv.comment("nu_m: " + csv_writer::format(nu) +
                  "  omega_gf: " + csv_writer::format(wgf));
      csv.comment(std::string("t_units: ") +
                  (cfg.normalized ? "2*pi/omega_gf" : "absolute"));
      csv.header({"t_minus", "gamma_exact", "gamma_sinc"});
      for (double tv : t)
        csv.row({cfg.normalized ? tv / period : tv, gamma_m(nu, wgf, tv),
                 sinc_approx(nu, wgf, tv)});
      return 0;
    }

    case command::fig1: {
      const double wgf = cfg.omega_gf;
      const double b = 0.5 * wgf;
      const double period = 2.0 * pi / wgf;
      const std::vector<double> ratios = {1.02, 1.1, 2.0};
      std::vector<double> t = cfg.grid_set
          ? detail::linspace(cfg.grid_min, cfg.grid_max, cfg.grid_n)
          : detail::linspace(0.0, 20.0, 2001);  // units of 2*pi/omega_gf
      csv_writer csv(cfg.output_path);
      csv.comment("command: fig1");
      csv.comment("normalized profiles gamma_m(t)/gamma_m(0), t in 2*pi/omega_gf");
      csv.header({"t_minus", "nu_1.02", "nu_1.10", "nu_2.00"});
      svg_plot plot("normalized time-difference profiles", "t_minus  [2*pi/omega_gf]",
                    "gamma_m(t_minus) / gamma_m(0)");
      std::vector<std::vector<double>> cols(ratios.size());
      for (std::size_t j = 0; j < ratios.size(); ++j) {
        const double nu = ratios[j] * b;
        const double g0 = gamma_m(nu, wgf, 0.0);
        for (double tv : t) cols[j].push_back(gamma_m(nu, wgf, tv * period) / g0);
      }
      for (std::size_t i = 0; i < t.size(); ++i)
        csv.row({t[i], cols[0][i], cols[1][i], cols[2][i]});
      for (std::size_t j = 0; j < ratios.size(); ++j) {
        char label[48];
        std::snprintf(label, sizeof label, "nu_m = %.2f (omega_gf/2)", ratios[j]);
        plot.add_curve(t, cols[j], label);
      }
      plot.write(detail::svg_path(cfg.output_path));
      return 0;
    }

    case command::fig2: {
      const double wgf = cfg.omega_gf;
      const double b = 0.5 * wgf;
      const double period = 2.0 * pi / wgf;
      const std::vector<double> ratios = {1.02, 2.0};
      std::vector<double> t = cfg.grid_set
          ? detail::linspace(cfg.grid_min, cfg.grid_max, cfg.grid_n)
          : detail::linspace(-10.0, 10.0, 2001);  // units of 2*pi/omega_gf
      csv_writer csv(cfg.output_path);
      csv.comment("command: fig2");
      csv.comment("exact vs sinc approximation, t in 2*pi/omega_gf");
      csv.header({"t_minus", "exact_1.02", "sinc_1.02", "exact_2.00", "sinc_2.00"});
      svg_plot plot("exact profile vs sinc approximation",
                    "t_minus  [2*pi/omega_gf]", "gamma_m(t_minus)");
      std::vector<std::vector<double>> ex(2), ap(2);
      for (std::size_t j = 0; j < 2; ++j) {
        const double nu = ratios[j] * b;
        for (double tv : t) {
          ex[j].push_back(gamma_m(nu, wgf, tv * period));
          ap[j].push_back(sinc_approx(nu, wgf, tv * period));
        }
      }
      for (std::size_t i = 0; i < t.size(); ++i)
        csv.row({t[i], ex[0][i], ap[0][i], ex[1][i], ap[1][i]});
      for (std::size_t j = 0; j < 2; ++j) {
        char l1[48], l2[48];
        std::snprintf(l1, sizeof l1, "exact, nu_m = %.2f B", ratios[j]);
        std::snprintf(l2, sizeof l2, "sinc,  nu_m = %.2f B", ratios[j]);
        plot.add_curve(t, ex[j], l1);
        plot.add_curve(t, ap[j], l2);
      }
      plot.write(detail::svg_path(cfg.output_path));
      return 0;
    }

    case command::verify: {
      const double eps_scale = cfg.epsilon > 0.0 ? cfg.epsilon : 1e-3;
      const auto rep = run_verification(eps_scale);
      if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path);
        if (!out) throw error("verify: cannot open " + cfg.output_path);
        write_verification_report(rep, out);
      }
      write_verification_report(rep, std::cout);
      return rep.all_pass ? 0 : 4;
    }
  }
  return 1;
}

}  // namespace etpa

#endif
