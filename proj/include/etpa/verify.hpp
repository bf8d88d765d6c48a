#ifndef ETPA_VERIFY_HPP
#define ETPA_VERIFY_HPP

// Cross-validation battery behind the CLI `verify` command. Each check pits an
// analytic formula against the brute-force numerical transforms and records
// the measured residual.

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "etpa/freq_domain.hpp"
#include "etpa/numeric_oracle.hpp"
#include "etpa/special_functions.hpp"

namespace etpa {

struct check_result {
  std::string name;
  double tolerance = 0.0;
  double residual = 0.0;
  bool pass = false;
};

namespace detail {

inline check_result make_check(std::string name, double tol, double residual) {
  check_result r;
  r.name = std::move(name);
  r.tolerance = tol;
  r.residual = residual;
  r.pass = residual <= tol;
  return r;
}

// Single above-band level, unit coupling, in units where B = omega_gf/2.
inline coupling_set single_level_couplings(double nu_over_b, double band = 1.0) {
  coupling_set cs;
  cs.band = band;
  cs.omega_gf = 2.0 * band;
  cs.sigma_tp = 1.0;
  cs.entries.push_back({nu_over_b * band, complexd{1.0, 0.0}});
  return cs;
}

}  // namespace detail

// Closed form vs direct quadrature of the epsilon-regularized transform over
// random (nu, omega) pairs. Returns max relative deviation.
inline double verify_regularized_ft(double omega_gf, double epsilon_scale,
                                    int n_pairs, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-3.0 * omega_gf, 3.0 * omega_gf);
  const double eps = epsilon_scale * omega_gf;
  double worst = 0.0;
  for (int i = 0; i < n_pairs; ++i) {
    const double nu = uni(rng);
    const double w = uni(rng);
    auto res = oracle::regularized_ft(nu, oracle::default_ft_params(eps, {w}));
    const double rel = std::abs(res.quadrature[0] - res.closed_form[0]) /
                       std::abs(res.closed_form[0]);
    worst = std::max(worst, rel);
  }
  return worst;
}

// gamma_m against the band-limited inverse transform of the off-resonant
// spectrum, with the analytic 4ic/(2pi) prefactor divided out.
// Returns relative L-infinity deviation over t in [t_lo, t_hi].
inline double verify_gamma_m_oracle(double nu_over_b, double t_lo_periods,
                                    double t_hi_periods, int n_points) {
  const auto cs = detail::single_level_couplings(nu_over_b);
  const double period = 2.0 * std::numbers::pi / cs.omega_gf;
  auto spec = gamma_spectrum_offresonant(cs, {0.0});
  std::vector<double> t_grid(n_points);
  for (int i = 0; i < n_points; ++i)
    t_grid[i] = (t_lo_periods +
                 (t_hi_periods - t_lo_periods) * i / double(n_points - 1)) *
                period;
  const auto inv = oracle::bandlimited_inverse_ft(spec, t_grid);
  const complexd prefactor =
      complexd{0.0, 4.0} * cs.entries[0].c / (2.0 * std::numbers::pi);
  double max_g = 0.0, max_d = 0.0;
  for (int i = 0; i < n_points; ++i) {
    const double g = gamma_m(cs.entries[0].nu, cs.omega_gf, t_grid[i]);
    const double pred = (inv[i] / prefactor).real();
    max_g = std::max(max_g, std::abs(g));
    max_d = std::max(max_d, std::abs(pred - g));
  }
  return max_d / max_g;
}

// The constant relating the off-resonant (paper-prefactor) smooth part to the
// full-spectrum (plain transform) smooth part. Must be the same at every
// (nu, omega); result.first = measured constant, result.second = max spread.
inline std::pair<complexd, double> measure_convention_constant() {
  complexd k_ref{0.0, 0.0};
  double spread = 0.0;
  bool first = true;
  for (double nu_over_b : {1.5, 2.0, 3.0, 5.0}) {
    const auto cs = detail::single_level_couplings(nu_over_b);
    std::vector<double> grid;
    for (double w = -0.9; w <= 0.95; w += 0.3) grid.push_back(w);
    const auto off = gamma_spectrum_offresonant(cs, grid);
    const auto full = gamma_spectrum_full(cs, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const complexd k = off.smooth[i] / full.smooth[i];
      if (first) {
        k_ref = k;
        first = false;
      }
      spread = std::max(spread, std::abs(k - k_ref));
    }
  }
  return {k_ref, spread};
}

// Richardson extrapolation over the epsilon ladder must improve the imaginary
// part of the regularized transform by at least the returned factor.
inline double verify_epsilon_extrapolation(double omega_gf, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.3 * omega_gf, 3.0 * omega_gf);
  double worst_gain = 1e300;
  for (int i = 0; i < 5; ++i) {
    const double nu = uni(rng);
    double w = uni(rng);
    if (std::abs(w - nu) < 0.2 * omega_gf) w += 0.4 * omega_gf;
    const double exact = -(1.0 / (nu - w) + 1.0 / (nu + w));
    const double e1 = 1e-3 * omega_gf, e2 = 1e-4 * omega_gf;
    auto im_closed = [&](double eps) {
      return (1.0 / complexd{eps, nu - w} + 1.0 / complexd{eps, nu + w}).imag();
    };
    const double v1 = im_closed(e1);
    const double v2 = im_closed(e2);
    // the imaginary part approaches the PV value as epsilon^2; eliminate
    // that leading term over the two-point ladder
    const double extrap = (e1 * e1 * v2 - e2 * e2 * v1) / (e1 * e1 - e2 * e2);
    const double err2 = std::abs(v2 - exact);
    const double err_x = std::abs(extrap - exact);
    worst_gain = std::min(worst_gain, err2 / std::max(err_x, 1e-300));
  }
  return worst_gain;
}

// Inverse transform followed by forward quadrature over a long window must
// reproduce the smooth spectrum on interior points.
inline double verify_round_trip(double nu_over_b) {
  const auto cs = detail::single_level_couplings(nu_over_b);
  const double b = cs.band;
  auto spec = gamma_spectrum_offresonant(cs, {0.0});
  // The profile decays like 1/t, so the truncated forward transform converges
  // only as 1/window; 400*pi/B keeps the truncation bias well under 1e-3.
  const double t_max = 200.0 * std::numbers::pi / b;
  const int n = 8192;  // Simpson sampling of f(t)
  std::vector<double> t_grid(2 * n + 1);
  for (int i = 0; i <= 2 * n; ++i) t_grid[i] = -t_max + t_max * i / double(n);
  const auto f = oracle::bandlimited_inverse_ft(spec, t_grid);
  const double h = t_max / double(n);
  // cosine taper over the outer 20% of the window damps the slowly decaying
  // oscillatory tail that otherwise dominates the truncation error
  auto taper = [&](double t) {
    const double x = std::abs(t) / t_max;
    if (x <= 0.8) return 1.0;
    return 0.5 * (1.0 + std::cos(std::numbers::pi * (x - 0.8) / 0.2));
  };
  double worst = 0.0;
  for (double w : {-0.6 * b, -0.3 * b, 0.0, 0.2 * b, 0.5 * b}) {
    complexd acc{0.0, 0.0};
    for (int i = 0; i <= 2 * n; ++i) {
      const double coeff = (i == 0 || i == 2 * n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      acc += coeff * taper(t_grid[i]) * f[i] * std::polar(1.0, w * t_grid[i]);
    }
    acc *= h / 3.0;
    const complexd expect = spec.smooth_fn(w);
    worst = std::max(worst, std::abs(acc - expect) / std::abs(expect));
  }
  return worst;
}

struct verification_report {
  std::vector<check_result> checks;
  bool all_pass = true;
};

inline verification_report run_verification(double epsilon_scale = 1e-3,
                                            unsigned seed = 20240901) {
  verification_report rep;
  auto add = [&](check_result r) {
    rep.all_pass = rep.all_pass && r.pass;
    rep.checks.push_back(std::move(r));
  };

  add(detail::make_check("regularized_ft closed-form vs quadrature (100 pairs)",
                         1e-8, verify_regularized_ft(2.0, epsilon_scale, 100, seed)));

  add(detail::make_check(
      "pv_quadrature 1/(x-1) on [0,3] vs ln 2", 1e-8,
      std::abs(quad::pv_quadrature([](double x) { return 1.0 / (x - 1.0); }, 1.0,
                                   0.0, 3.0) -
               std::log(2.0))));

  add(detail::make_check(
      "pv_quadrature x/(x-1) on [0,2] vs 2", 1e-8,
      std::abs(quad::pv_quadrature([](double x) { return x / (x - 1.0); }, 1.0,
                                   0.0, 2.0) -
               2.0)));

  {
    // random 5-level in-band spec for the KK residual
    std::mt19937 rng(seed + 1);
    std::uniform_real_distribution<double> unu(-0.8, 0.8);
    std::uniform_real_distribution<double> uc(-1.0, 1.0);
    coupling_set cs;
    cs.band = 1.0;
    cs.omega_gf = 2.0;
    cs.sigma_tp = 1.0;
    for (int m = 0; m < 5; ++m)
      cs.entries.push_back({unu(rng), complexd{uc(rng), uc(rng)}});
    std::vector<double> grid;
    for (double w = -1.7; w <= 1.75; w += 0.35) {
      bool ok = true;
      for (const auto& e : cs.entries)
        if (std::abs(std::abs(w) - std::abs(e.nu)) < 0.1) ok = false;
      if (ok) grid.push_back(w);
    }
    add(detail::make_check("Kramers-Kronig residual, 5 random in-band levels",
                           1e-3, kk_consistency_check(cs, grid)));
  }

  add(detail::make_check("gamma_m vs band-limited inverse FT, nu = 2B", 1e-4,
                         verify_gamma_m_oracle(2.0, 0.1, 20.0, 160)));

  {
    auto [k, spread] = measure_convention_constant();
    add(detail::make_check(
        "convention constant K = " + std::to_string(k.real()) + " + " +
            std::to_string(k.imag()) + "i, spread across (nu, omega)",
        1e-12, spread));
  }

  add(detail::make_check("epsilon-ladder Richardson gain >= 10x", 0.1,
                         1.0 / verify_epsilon_extrapolation(2.0, seed + 2)));

  add(detail::make_check("spectrum round trip (inverse then forward), nu = 2B",
                         1e-3, verify_round_trip(2.0)));

  return rep;
}

inline void write_verification_report(const verification_report& rep,
                                      std::ostream& out) {
  out << "verification report\n";
  for (const auto& c : rep.checks) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "residual %.3e  tolerance %.1e", c.residual,
                  c.tolerance);
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << buf << "]\n";
  }
  out << (rep.all_pass ? "all checks passed\n" : "verification FAILED\n");
}

}  // namespace etpa

#endif
