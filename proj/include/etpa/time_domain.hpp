#ifndef ETPA_TIME_DOMAIN_HPP
#define ETPA_TIME_DOMAIN_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "etpa/errors.hpp"
#include "etpa/level_model.hpp"
#include "etpa/quadrature.hpp"

namespace etpa {

// Two-time dipole correlation Sum_m d_mf*d_gm * e^{-i w_m |t2-t1|}
// * e^{i w_av |t2-t1|} * e^{i w_gf (t1+t2)/2}; equivalently the Min/Max form
// e^{-i w_g Min} e^{-i w_m |t2-t1|} e^{i w_f Max}. The w_av factor folds the
// level frequency into the detuning nu_m = w_m - w_av.
inline complexd dipole_correlation(const absorber_spec& spec, double t1, double t2) {
  const double dt = std::abs(t2 - t1);
  const double tp = 0.5 * (t1 + t2);
  const double wav = spec.omega_av();
  complexd sum{0.0, 0.0};
  for (const auto& lv : spec.levels) {
    const double nu = lv.omega_m - wav;
    sum += lv.d_mf * lv.d_gm * std::polar(1.0, -nu * dt);
  }
  return sum * std::polar(1.0, spec.omega_gf() * tp);
}

// <Phi_muf|U(dt)|Phi_gmu> with the w_av phase folded in:
// Sum_m (c_m / sigma_tp) e^{-i nu_m dt}. Equals 1 at dt = 0 when the two
// effective states coincide.
inline complexd intermediate_overlap(const coupling_set& couplings, double dt) {
  complexd sum{0.0, 0.0};
  for (const auto& e : couplings.entries)
    sum += e.c * std::polar(1.0, -e.nu * dt);
  return sum / couplings.sigma_tp;
}

// Wave function of the optimally absorbed state at delay tau,
// sigma_tp * overlap(|t_- + tau|) * e^{i w_gf (t_+ + tau/2)}.
inline complexd optimal_amplitude(const coupling_set& couplings, double t_plus,
                                  double t_minus, double tau) {
  return couplings.sigma_tp * intermediate_overlap(couplings, std::abs(t_minus + tau)) *
         std::polar(1.0, couplings.omega_gf * (t_plus + 0.5 * tau));
}

inline complexd optimal_amplitude(const absorber_spec& spec, double t_plus,
                                  double t_minus, double tau) {
  return optimal_amplitude(make_coupling_set(spec), t_plus, t_minus, tau);
}

// TPA probability for the ideal broadband entangled input,
// sigma_tp^2 |<Phi_muf|U(|tau|)|Phi_gmu>|^2.
inline double tpa_probability_ideal(const coupling_set& couplings, double tau) {
  const complexd o = intermediate_overlap(couplings, std::abs(tau));
  return couplings.sigma_tp * couplings.sigma_tp * std::norm(o);
}

inline double tpa_probability_ideal(const absorber_spec& spec, double tau) {
  return tpa_probability_ideal(make_coupling_set(spec), tau);
}

// ---- input states -----------------------------------------------------------

struct ideal_entangled {};

// Gaussian wave packet in t_+ with sum-frequency carrier w_gf + delta_plus and
// spectral width sigma_plus, times a Gaussian of width sigma_minus in t_-.
struct gaussian_entangled {
  double delta_plus = 0.0;
  double sigma_plus = 0.0;
  double sigma_minus = 0.0;
};

// Separable photons, psi(t1, t2) = g1(t1) g2(t2), Gaussian spectra centered at
// omega10 / omega20 with amplitude widths sigma1 / sigma2.
struct product_gaussian {
  double omega10 = 0.0;
  double omega20 = 0.0;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
};

using input_state = std::variant<ideal_entangled, gaussian_entangled, product_gaussian>;

namespace detail {

// Gaussian amplitude at zero frequency relative to peak must stay below 1e-6.
inline void require_positive_frequencies(double center, double spread, const char* who) {
  if (!(center > 0.0) ||
      std::exp(-0.5 * center * center / (spread * spread)) > 1e-6)
    throw domain_error(std::string(who) +
                       ": input state has support at negative single-photon "
                       "frequencies above relative amplitude 1e-6");
}

inline void validate_input(const gaussian_entangled& in, double omega_gf) {
  if (!(in.sigma_plus > 0.0) || !(in.sigma_minus > 0.0))
    throw domain_error("gaussian_entangled: bandwidths must be positive");
  const double center = 0.5 * (omega_gf + in.delta_plus);
  const double spread = std::sqrt(0.25 * in.sigma_plus * in.sigma_plus +
                                  1.0 / (in.sigma_minus * in.sigma_minus));
  require_positive_frequencies(center, spread, "gaussian_entangled");
}

inline void validate_input(const product_gaussian& in, double) {
  if (!(in.sigma1 > 0.0) || !(in.sigma2 > 0.0))
    throw domain_error("product_gaussian: bandwidths must be positive");
  require_positive_frequencies(in.omega10, in.sigma1, "product_gaussian");
  require_positive_frequencies(in.omega20, in.sigma2, "product_gaussian");
}

}  // namespace detail

// Projection probability |int conj(optimal_amplitude) psi dt+ dt-|^2.
// The t_+ integral is a pure phase against the input and is done analytically;
// the t_- integral runs by adaptive quadrature against the overlap kernel.
inline double tpa_probability_general(const absorber_spec& spec,
                                      const input_state& input, double tau) {
  const coupling_set cs = make_coupling_set(spec);
  const double sigma = cs.sigma_tp;
  const double wgf = cs.omega_gf;
  constexpr double qtol = 1e-8;  // quadrature target; contract is 1e-6 relative

  double max_nu = 0.0;
  for (const auto& e : cs.entries) max_nu = std::max(max_nu, std::abs(e.nu));

  if (std::holds_alternative<ideal_entangled>(input))
    return tpa_probability_ideal(cs, tau);

  if (const auto* g = std::get_if<gaussian_entangled>(&input)) {
    detail::validate_input(*g, wgf);
    // t_+ integral: sum-frequency component of the input at w_gf.
    const double i_plus =
        std::pow(4.0 * std::numbers::pi / (g->sigma_plus * g->sigma_plus), 0.25) *
        std::exp(-0.5 * g->delta_plus * g->delta_plus /
                 (g->sigma_plus * g->sigma_plus));
    const double norm_minus =
        std::pow(std::numbers::pi * g->sigma_minus * g->sigma_minus, -0.25);
    const double w = 8.5 * g->sigma_minus;
    auto f = [&](double tm) {
      return std::conj(intermediate_overlap(cs, std::abs(tm + tau))) * norm_minus *
             std::exp(-0.5 * tm * tm / (g->sigma_minus * g->sigma_minus));
    };
    // Split at the kink t_- = -tau of |t_- + tau|.
    complexd i_minus;
    if (-tau > -w && -tau < w)
      i_minus = quad::integrate_oscillatory(f, -w, -tau, max_nu, qtol) +
                quad::integrate_oscillatory(f, -tau, w, max_nu, qtol);
    else
      i_minus = quad::integrate_oscillatory(f, -w, w, max_nu, qtol);
    const double amp = sigma * i_plus * std::abs(i_minus);
    return amp * amp;
  }

  const auto& p = std::get<product_gaussian>(input);
  detail::validate_input(p, wgf);
  const double s1 = p.sigma1, s2 = p.sigma2;
  const double a = 0.5 * (s1 * s1 + s2 * s2);
  const double norm0 = std::sqrt(s1 * s2) / std::sqrt(std::numbers::pi);
  // Analytic Gaussian t_+ integral at fixed t_-:
  //   H(t_-) = norm0 sqrt(pi/a) exp(b^2/(4a) + c0), with
  //   b  = (s1^2 - s2^2) t_-/2 + i (w10 + w20 - w_gf)
  //   c0 = -(s1^2 + s2^2) t_-^2 / 8 + i (w20 - w10) t_-/2.
  auto h = [&](double tm) {
    const complexd b{0.5 * (s1 * s1 - s2 * s2) * tm, p.omega10 + p.omega20 - wgf};
    const complexd c0{-(s1 * s1 + s2 * s2) * tm * tm / 8.0,
                      0.5 * (p.omega20 - p.omega10) * tm};
    return norm0 * std::sqrt(std::numbers::pi / a) * std::exp(b * b / (4.0 * a) + c0);
  };
  // |H| is Gaussian in t_- with std sqrt(s1^2+s2^2)/(s1 s2).
  const double w = 8.5 * std::sqrt(s1 * s1 + s2 * s2) / (s1 * s2);
  const double freq = max_nu + 0.5 * std::abs(p.omega20 - p.omega10);
  auto f = [&](double tm) {
    return std::conj(intermediate_overlap(cs, std::abs(tm + tau))) * h(tm);
  };
  complexd i_minus;
  if (-tau > -w && -tau < w)
    i_minus = quad::integrate_oscillatory(f, -w, -tau, freq, qtol) +
              quad::integrate_oscillatory(f, -tau, w, freq, qtol);
  else
    i_minus = quad::integrate_oscillatory(f, -w, w, freq, qtol);
  const double amp = sigma * std::abs(i_minus);
  return amp * amp;
}

// ---- delay scans ------------------------------------------------------------

struct delay_scan_result {
  std::vector<double> tau_grid;
  std::vector<double> p_values;
  std::string normalization;
};

inline delay_scan_result delay_scan(const absorber_spec& spec,
                                    const input_state& input,
                                    const std::vector<double>& tau_grid) {
  for (std::size_t k = 1; k < tau_grid.size(); ++k)
    if (!(tau_grid[k] > tau_grid[k - 1]))
      throw error("delay_scan: tau_grid must be strictly increasing");
  delay_scan_result out;
  out.tau_grid = tau_grid;
  out.p_values.reserve(tau_grid.size());
  const bool ideal = std::holds_alternative<ideal_entangled>(input);
  const coupling_set cs = make_coupling_set(spec);
  out.normalization = ideal
      ? "sigma_tp^2 |<Phi_muf|U(|tau|)|Phi_gmu>|^2 (delta factor dropped)"
      : "|projection onto optimally absorbed state|^2, unit-norm input";
  for (std::size_t k = 0; k < tau_grid.size(); ++k) {
    try {
      out.p_values.push_back(ideal ? tpa_probability_ideal(cs, tau_grid[k])
                                   : tpa_probability_general(spec, input, tau_grid[k]));
    } catch (const quadrature_not_converged& e) {
      throw quadrature_not_converged("delay_scan: tau index " + std::to_string(k) +
                                     ": " + e.what());
    }
  }
  return out;
}

}  // namespace etpa

#endif
