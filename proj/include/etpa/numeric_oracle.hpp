#ifndef ETPA_NUMERIC_ORACLE_HPP
#define ETPA_NUMERIC_ORACLE_HPP

// Brute-force numerical transforms used to cross-validate the analytic
// formulas elsewhere in the library. Nothing here may call the Si/Ci
// evaluations or the closed-form spectral expressions; only generic
// quadrature is allowed.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "etpa/errors.hpp"
#include "etpa/freq_domain.hpp"
#include "etpa/quadrature.hpp"

namespace etpa::oracle {

struct regularized_ft_params {
  double epsilon = 0.0;
  std::vector<double> omega_grid;
  double integration_window = 0.0;

  void validate() const {
    if (!(epsilon > 0.0))
      throw domain_error("regularized_ft: epsilon must be positive");
    if (!(integration_window >= 20.0 / epsilon))
      throw domain_error(
          "regularized_ft: integration_window must be at least 20/epsilon");
  }
};

inline regularized_ft_params default_ft_params(double epsilon,
                                               std::vector<double> omega_grid) {
  regularized_ft_params p;
  p.epsilon = epsilon;
  p.omega_grid = std::move(omega_grid);
  p.integration_window = 25.0 / epsilon;
  return p;
}

struct regularized_ft_result {
  std::vector<complexd> closed_form;
  std::vector<complexd> quadrature;
};

// int e^{-i nu |t|} e^{-eps |t|} e^{i w t} dt, both in closed form
// 1/(eps + i(nu-w)) + 1/(eps + i(nu+w)) and by direct quadrature of
// 2 e^{-(eps + i nu) t} cos(w t) over [0, T].
inline regularized_ft_result regularized_ft(double nu,
                                            const regularized_ft_params& params) {
  params.validate();
  regularized_ft_result out;
  const double eps = params.epsilon;
  const double t_max = params.integration_window;
  for (double w : params.omega_grid) {
    out.closed_form.push_back(1.0 / complexd{eps, nu - w} +
                              1.0 / complexd{eps, nu + w});
    auto f = [&](double t) {
      return 2.0 * std::exp(complexd{-eps * t, -nu * t}) * std::cos(w * t);
    };
    const double fmax = std::abs(nu) + std::abs(w);
    out.quadrature.push_back(quad::integrate_oscillatory(f, 0.0, t_max, fmax, 1e-11));
  }
  return out;
}

// Inverse transform with the 1/(2pi) convention: delta terms contribute
// weight e^{-i loc t}/(2pi); the smooth part is integrated over the band
// (truncated spectra) or the sampled grid range, with PV handling around
// in-range poles.
inline std::vector<complexd> bandlimited_inverse_ft(const spectral_amplitude& spectrum,
                                                    const std::vector<double>& t_grid) {
  double lo, hi;
  if (spectrum.truncated) {
    lo = -spectrum.band;
    hi = spectrum.band;
  } else {
    if (spectrum.grid.empty())
      throw error("bandlimited_inverse_ft: untruncated spectrum needs a grid range");
    lo = spectrum.grid.front();
    hi = spectrum.grid.back();
  }

  std::vector<double> inner_poles;
  for (double p : spectrum.poles)
    if (p > lo && p < hi) inner_poles.push_back(p);
  if (!inner_poles.empty() && !spectrum.smooth_fn)
    throw pole_in_band(
        "bandlimited_inverse_ft: in-range pole without a continuous smooth "
        "evaluator; PV bracketing impossible");

  std::vector<complexd> out;
  out.reserve(t_grid.size());
  const double two_pi = 2.0 * std::numbers::pi;
  for (double t : t_grid) {
    complexd v{0.0, 0.0};
    for (const auto& d : spectrum.delta_terms)
      v += d.weight * std::polar(1.0, -d.location * t) / two_pi;
    if (spectrum.smooth_fn) {
      // PV over each in-range pole: real and imaginary parts separately.
      auto re = [&](double w) {
        return (spectrum.smooth_fn(w) * std::polar(1.0, -w * t)).real();
      };
      auto im = [&](double w) {
        return (spectrum.smooth_fn(w) * std::polar(1.0, -w * t)).imag();
      };
      if (inner_poles.empty()) {
        auto f = [&](double w) { return spectrum.smooth_fn(w) * std::polar(1.0, -w * t); };
        v += quad::integrate_oscillatory(f, lo, hi, std::abs(t), 1e-10) / two_pi;
      } else {
        // Segment at midpoints between consecutive poles so each segment
        // holds exactly one PV pole.
        std::vector<double> ps = inner_poles;
        std::sort(ps.begin(), ps.end());
        double vr = 0.0, vi = 0.0;
        double start = lo;
        for (std::size_t i = 0; i < ps.size(); ++i) {
          const double mid_hi =
              (i + 1 < ps.size()) ? 0.5 * (ps[i] + ps[i + 1]) : hi;
          vr += quad::pv_quadrature(re, ps[i], start, mid_hi, 1e-9);
          vi += quad::pv_quadrature(im, ps[i], start, mid_hi, 1e-9);
          start = mid_hi;
        }
        v += complexd{vr, vi} / two_pi;
      }
    } else if (!spectrum.grid.empty()) {
      // Sampled fallback: composite trapezoid over the stored grid.
      complexd acc{0.0, 0.0};
      for (std::size_t k = 1; k < spectrum.grid.size(); ++k) {
        const double w0 = spectrum.grid[k - 1], w1 = spectrum.grid[k];
        acc += 0.5 * (w1 - w0) *
               (spectrum.smooth[k - 1] * std::polar(1.0, -w0 * t) +
                spectrum.smooth[k] * std::polar(1.0, -w1 * t));
      }
      v += acc / two_pi;
    }
    out.push_back(v);
  }
  return out;
}

using quad::pv_quadrature;

}  // namespace etpa::oracle

#endif
