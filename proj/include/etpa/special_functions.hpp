#ifndef ETPA_SPECIAL_FUNCTIONS_HPP
#define ETPA_SPECIAL_FUNCTIONS_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "etpa/errors.hpp"
#include "etpa/level_model.hpp"

namespace etpa {

namespace detail {

// Joint evaluation of Ci(x) + i*Si(x) for x > 0. Power series below the
// switchover, Lentz continued fraction for the exponential integral above it.
inline std::complex<double> cisi_positive(double x) {
  constexpr double euler_gamma = 0.57721566490153286060651209;
  constexpr double tmin = 2.0;
  constexpr int maxit = 200;
  const double eps = std::numeric_limits<double>::epsilon();

  if (x <= tmin) {
    // Si and Ci-gamma-log series, interleaved to reuse the factorial factor.
    double sums = x, sumc = 0.0;
    if (x * x > std::numeric_limits<double>::min()) {
      double sum = 0.0, fact = 1.0, sign = 1.0;
      bool odd = true;
      sums = 0.0;
      for (int k = 1; k <= maxit; ++k) {
        fact *= x / k;
        const double term = fact / k;
        sum += sign * term;
        const double err = term / std::abs(sum);
        if (odd) {
          sign = -sign;
          sums = sum;
          sum = sumc;
        } else {
          sumc = sum;
          sum = sums;
        }
        if (err < eps) break;
        odd = !odd;
      }
    }
    return {sumc + std::log(x) + euler_gamma, sums};
  }

  // Continued fraction for E1(ix); converges rapidly for x > 2.
  std::complex<double> b{1.0, x};
  std::complex<double> c{1.0 / std::numeric_limits<double>::min(), 0.0};
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  int i = 1;
  for (; i < maxit; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) <= eps) break;
  }
  if (i >= maxit)
    throw quadrature_not_converged("cisi: continued fraction failed to converge");
  h *= std::complex<double>(std::cos(x), -std::sin(x));
  return std::complex<double>(-h.real(), std::numbers::pi / 2 + h.imag());
}

}  // namespace detail

// Sine integral Si(x) = int_0^x sin(u)/u du. Odd in x.
inline double si(double x) {
  if (x == 0.0) return 0.0;
  const double v = detail::cisi_positive(std::abs(x)).imag();
  return x > 0.0 ? v : -v;
}

// Cosine integral Ci(x) = gamma_E + ln x + int_0^x (cos u - 1)/u du, x > 0.
inline double ci(double x) {
  if (!(x > 0.0)) throw domain_error("ci: argument must be positive");
  return detail::cisi_positive(x).real();
}

inline double sinc(double y) {
  if (std::abs(y) < 1e-4) {
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0);
  }
  return std::sin(y) / y;
}

namespace detail {
inline void require_above_band(double nu_m, double band, const char* who) {
  if (!(nu_m > band))
    throw domain_error(std::string(who) + ": nu_m must exceed omega_gf/2");
}
}  // namespace detail

// Corrected time-difference profile of an above-band level: the band-limited
// inverse transform of nu/(nu^2 - w^2) over (-B, B). Real and even in t_minus.
// Ci is taken at the absolute value of its argument (real branch).
inline double gamma_m(double nu_m, double omega_gf, double t_minus) {
  const double b = 0.5 * omega_gf;
  detail::require_above_band(nu_m, b, "gamma_m");
  const double x = std::abs(t_minus);
  const double period = 2.0 * std::numbers::pi / omega_gf;
  if (x < 1e-8 * period) {
    // The two Ci terms diverge logarithmically; use the analytic limit.
    return std::log((nu_m + b) / (nu_m - b));
  }
  const double c1 = ci((nu_m + b) * x);
  const double c2 = ci((nu_m - b) * x);
  const double s1 = si((nu_m - b) * x);
  const double s2 = si((nu_m + b) * x);
  return std::cos(nu_m * x) * (c1 - c2) - std::sin(nu_m * x) * (s1 - s2);
}

// Rectangular-spectrum (equal area) approximation of gamma_m.
inline double sinc_approx(double nu_m, double omega_gf, double t_minus) {
  const double b = 0.5 * omega_gf;
  detail::require_above_band(nu_m, b, "sinc_approx");
  return std::log((nu_m + b) / (nu_m - b)) * sinc(0.5 * omega_gf * t_minus);
}

struct gamma_profile {
  double nu_m = 0.0;
  double band = 0.0;
  std::vector<double> t_grid;
  std::vector<double> values;
};

inline gamma_profile make_gamma_profile(double nu_m, double omega_gf,
                                        std::vector<double> t_grid) {
  gamma_profile p;
  p.nu_m = nu_m;
  p.band = 0.5 * omega_gf;
  p.values.reserve(t_grid.size());
  for (double t : t_grid) p.values.push_back(gamma_m(nu_m, omega_gf, t));
  p.t_grid = std::move(t_grid);
  return p;
}

enum class profile_variant { exact, sinc_collapsed };

// Off-resonant time profile Sum_m 4i c_m gamma_m(t), or the collapsed
// single-sinc approximation with log-weighted summed coefficients.
inline std::vector<complexd> summed_profile(
    const coupling_set& couplings, const std::vector<double>& t_grid,
    profile_variant variant = profile_variant::exact) {
  for (const auto& e : couplings.entries)
    if (!(e.nu > couplings.band))
      throw in_band_level_present(
          "summed_profile: all levels must lie above the final state");
  const complexd fouri{0.0, 4.0};
  std::vector<complexd> out(t_grid.size(), complexd{0.0, 0.0});
  if (variant == profile_variant::exact) {
    for (const auto& e : couplings.entries)
      for (std::size_t k = 0; k < t_grid.size(); ++k)
        out[k] += fouri * e.c * gamma_m(e.nu, couplings.omega_gf, t_grid[k]);
  } else {
    complexd weight{0.0, 0.0};
    for (const auto& e : couplings.entries)
      weight += fouri * e.c *
                std::log((e.nu + couplings.band) / (e.nu - couplings.band));
    for (std::size_t k = 0; k < t_grid.size(); ++k)
      out[k] = weight * sinc(0.5 * couplings.omega_gf * t_grid[k]);
  }
  return out;
}

}  // namespace etpa

#endif
