#ifndef ETPA_FREQ_DOMAIN_HPP
#define ETPA_FREQ_DOMAIN_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <vector>

#include "etpa/errors.hpp"
#include "etpa/level_model.hpp"
#include "etpa/quadrature.hpp"

namespace etpa {

struct delta_term {
  double location = 0.0;
  complexd weight{0.0, 0.0};
};

// Frequency-difference representation of the optimally absorbed state:
// symbolic delta terms plus a sampled principal-value smooth part. smooth_fn
// is the continuous evaluator behind the samples; poles lists the PV pole
// locations of the smooth part.
struct spectral_amplitude {
  double band = 0.0;
  std::vector<double> grid;
  std::vector<complexd> smooth;
  std::vector<delta_term> delta_terms;
  bool truncated = false;
  std::function<complexd(double)> smooth_fn;
  std::vector<double> poles;
};

namespace detail {

// Grid points landing on a pole are rejected; points within 1e-9*omega_gf are
// snapped to that distance with a warning.
inline std::vector<double> guard_grid(std::vector<double> grid,
                                      const std::vector<double>& poles,
                                      double omega_gf) {
  const double snap = 1e-9 * omega_gf;
  for (double& w : grid) {
    for (double p : poles) {
      const double d = w - p;
      if (d == 0.0)
        throw pole_on_grid("gamma_spectrum: grid point coincides with pole at " +
                           std::to_string(p));
      if (std::abs(d) < snap) {
        std::fprintf(stderr,
                     "etpa: warning: grid point %.17g snapped away from pole %.17g\n",
                     w, p);
        w = p + (d > 0.0 ? snap : -snap);
      }
    }
  }
  return grid;
}

}  // namespace detail

// Full spectrum under the artifact convention Gamma(w) = int f(t) e^{iwt} dt:
// each level contributes delta pairs pi*c_m at +-nu_m plus the PV part
// -2i c_m nu_m / (nu_m^2 - w^2).
inline spectral_amplitude gamma_spectrum_full(const coupling_set& couplings,
                                              std::vector<double> grid) {
  spectral_amplitude s;
  s.band = couplings.band;
  s.truncated = false;
  for (const auto& e : couplings.entries) {
    const complexd w = std::numbers::pi * e.c;
    s.delta_terms.push_back({e.nu, w});
    s.delta_terms.push_back({-e.nu, w});
    if (e.nu != 0.0) {
      s.poles.push_back(e.nu);
      s.poles.push_back(-e.nu);
    }
  }
  auto entries = couplings.entries;
  s.smooth_fn = [entries](double w) {
    complexd v{0.0, 0.0};
    for (const auto& e : entries)
      if (e.nu != 0.0)
        v += complexd{0.0, -2.0} * e.c * e.nu / (e.nu * e.nu - w * w);
    return v;
  };
  s.grid = detail::guard_grid(std::move(grid), s.poles, couplings.omega_gf);
  s.smooth.reserve(s.grid.size());
  for (double w : s.grid) s.smooth.push_back(s.smooth_fn(w));
  return s;
}

// Off-resonant spectrum Sum_m 4i c_m nu_m/(nu_m^2 - w^2), defined on the
// physical band only. Requires every level outside the band.
inline spectral_amplitude gamma_spectrum_offresonant(const coupling_set& couplings,
                                                     std::vector<double> grid) {
  for (const auto& e : couplings.entries)
    if (std::abs(e.nu) <= couplings.band)
      throw in_band_level_present(
          "gamma_spectrum_offresonant: in-band level at nu = " +
          std::to_string(e.nu));
  for (double w : grid)
    if (!(w > -couplings.band && w < couplings.band))
      throw band_violation("gamma_spectrum_offresonant: grid point " +
                           std::to_string(w) + " outside (-B, B)");
  spectral_amplitude s;
  s.band = couplings.band;
  s.truncated = true;
  for (const auto& e : couplings.entries) {
    s.poles.push_back(e.nu);
    s.poles.push_back(-e.nu);
  }
  auto entries = couplings.entries;
  s.smooth_fn = [entries](double w) {
    complexd v{0.0, 0.0};
    for (const auto& e : entries)
      v += complexd{0.0, 4.0} * e.c * e.nu / (e.nu * e.nu - w * w);
    return v;
  };
  s.grid = detail::guard_grid(std::move(grid), s.poles, couplings.omega_gf);
  s.smooth.reserve(s.grid.size());
  for (double w : s.grid) s.smooth.push_back(s.smooth_fn(w));
  return s;
}

// Restrict to the physical band (-B, B): drop out-of-band delta terms and
// out-of-band samples. Idempotent.
inline spectral_amplitude truncate_physical(const spectral_amplitude& in) {
  spectral_amplitude s;
  s.band = in.band;
  s.truncated = true;
  s.smooth_fn = in.smooth_fn;
  s.poles = in.poles;
  for (const auto& d : in.delta_terms)
    if (std::abs(d.location) < in.band) s.delta_terms.push_back(d);
  for (std::size_t k = 0; k < in.grid.size(); ++k)
    if (in.grid[k] > -in.band && in.grid[k] < in.band) {
      s.grid.push_back(in.grid[k]);
      s.smooth.push_back(in.smooth[k]);
    }
  return s;
}

// Cross-check of the Kramers-Kronig structure: the smooth part must equal the
// Hilbert-transform image of the delta part, with causal sign for the +nu_m
// delta and anticausal sign for -nu_m. The deltas are broadened to Lorentzians
// of width epsilon and the Hilbert integral is evaluated by PV quadrature
// (pole subtraction); returns the max relative deviation over the grid.
inline double kk_consistency_check(const coupling_set& couplings,
                                   const std::vector<double>& grid,
                                   double epsilon = 0.0) {
  if (epsilon <= 0.0) epsilon = 1e-4 * couplings.omega_gf;

  double scale = couplings.band;
  for (const auto& e : couplings.entries) scale = std::max(scale, std::abs(e.nu));
  for (double w : grid) scale = std::max(scale, std::abs(w));
  const double win = 20.0 * scale;

  // PV integral of lorentzian(w' - c)/(w - w') over [-win, win].
  auto hilbert = [&](double w, double c) {
    auto lor = [&](double x) {
      return (epsilon / std::numbers::pi) / (x * x + epsilon * epsilon);
    };
    const double lw = lor(w - c);
    auto g = [&](double wp) {
      const double d = w - wp;
      if (std::abs(d) < 1e-14 * scale) {
        // removable point: derivative limit of the subtracted integrand
        const double x = w - c;
        return 2.0 * x * (epsilon / std::numbers::pi) /
               ((x * x + epsilon * epsilon) * (x * x + epsilon * epsilon));
      }
      return (lor(wp - c) - lw) / d;
    };
    const double r = std::max(1000.0 * epsilon, 1e-6 * scale);
    double v = 0.0;
    const double lo = -win, hi = win;
    const double c0 = std::clamp(c - r, lo, hi);
    const double c1 = std::clamp(c + r, lo, hi);
    if (c0 > lo) v += quad::integrate(g, lo, c0, 1e-8);
    if (c1 > c0) v += quad::integrate(g, c0, c1, 1e-8);
    if (hi > c1) v += quad::integrate(g, c1, hi, 1e-8);
    v += lw * std::log(std::abs((w - lo) / (hi - w)));
    return v;
  };

  double max_exact = 0.0;
  std::vector<complexd> exact(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    complexd v{0.0, 0.0};
    for (const auto& e : couplings.entries)
      if (e.nu != 0.0)
        v += complexd{0.0, -2.0} * e.c * e.nu / (e.nu * e.nu - grid[k] * grid[k]);
    exact[k] = v;
    max_exact = std::max(max_exact, std::abs(v));
  }
  if (max_exact == 0.0) return 0.0;

  double residual = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    complexd pred{0.0, 0.0};
    for (const auto& e : couplings.entries) {
      if (e.nu == 0.0) continue;
      pred += complexd{0.0, 1.0} * e.c *
              (hilbert(grid[k], e.nu) - hilbert(grid[k], -e.nu));
    }
    const double denom = std::max(std::abs(exact[k]), 1e-6 * max_exact);
    residual = std::max(residual, std::abs(pred - exact[k]) / denom);
  }
  return residual;
}

}  // namespace etpa

#endif
