#ifndef ETPA_QUADRATURE_HPP
#define ETPA_QUADRATURE_HPP

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "etpa/errors.hpp"

namespace etpa::quad {

using gk15 = boost::math::quadrature::gauss_kronrod<double, 15>;

// Adaptive Gauss-Kronrod on [a, b]. Throws if the error estimate misses tol
// relative to the accumulated magnitude (with an absolute floor).
template <class F>
auto integrate(const F& f, double a, double b, double tol = 1e-10,
               unsigned max_depth = 15) {
  double err = 0.0;
  auto v = gk15::integrate(f, a, b, max_depth, tol, &err);
  const double scale = std::max(std::abs(v), 1e-300);
  if (err > tol * scale && err > tol)
    throw quadrature_not_converged("integrate: GK15 error estimate " +
                                   std::to_string(err) + " exceeds tolerance");
  return v;
}

// Oscillation-aware variant: the interval is pre-split into panels no wider
// than a few periods of the fastest phase before adaptive refinement.
template <class F>
auto integrate_oscillatory(const F& f, double a, double b, double max_freq,
                           double tol = 1e-10, unsigned max_depth = 12) {
  using result_t = decltype(f(a));
  const double period =
      max_freq > 0.0 ? 2.0 * std::numbers::pi / max_freq : (b - a);
  const double panel = std::min(b - a, 16.0 * period);
  const std::size_t n =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((b - a) / panel)));
  const double h = (b - a) / static_cast<double>(n);
  result_t total{};
  double err_total = 0.0, l1 = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x0 = a + h * static_cast<double>(k);
    const double x1 = (k + 1 == n) ? b : x0 + h;
    double err = 0.0;
    const result_t part = gk15::integrate(f, x0, x1, max_depth, tol, &err);
    total += part;
    l1 += std::abs(part);
    err_total += err;
  }
  // Judge against the accumulated panel magnitude: heavy cancellation between
  // panels must not turn benign roundoff into a spurious failure. Per-panel
  // error estimates are conservative and near-constant, so the budget grows
  // with sqrt(panel count).
  const double scale = std::max({std::abs(total), l1, 1e-300});
  const double budget = 10.0 * std::sqrt(static_cast<double>(n));
  if (err_total > budget * tol * scale && err_total > budget * tol)
    throw quadrature_not_converged(
        "integrate_oscillatory: accumulated error estimate " +
        std::to_string(err_total) + " exceeds tolerance");
  return total;
}

// Principal value of int_a^b f(x) dx with a simple pole inside (a, b).
// Symmetric excision: the bracket [pole-r, pole+r] is integrated as
// int_0^r (f(p+s) + f(p-s)) ds, where the pole cancels; the excision radius
// is halved until successive estimates agree to tol.
template <class F>
double pv_quadrature(const F& f, double pole, double a, double b,
                     double tol = 1e-9) {
  if (!(a < pole && pole < b))
    throw domain_error("pv_quadrature: pole must lie strictly inside (a, b)");
  const double r0 = 0.5 * std::min(pole - a, b - pole);

  // The symmetric bracket integrand is analytically smooth (the 1/s parts
  // cancel) but numerically noisy near s = 0, so it gets a fixed-order rule
  // whose nodes stay clear of the pole; adaptive refinement there would only
  // chase roundoff. Convergence is judged by the excision-radius refinement.
  auto estimate = [&](double r) {
    double v = 0.0;
    if (a < pole - r) v += integrate(f, a, pole - r, tol, 20);
    if (pole + r < b) v += integrate(f, pole + r, b, tol, 20);
    auto sym = [&](double s) { return f(pole + s) + f(pole - s); };
    v += boost::math::quadrature::gauss<double, 31>::integrate(sym, 0.0, r);
    return v;
  };

  double prev = estimate(r0);
  double r = 0.5 * r0;
  for (int it = 0; it < 12; ++it, r *= 0.5) {
    const double cur = estimate(r);
    if (std::abs(cur - prev) < tol * std::max(1.0, std::abs(cur)))
      return 0.5 * (cur + prev);
    prev = cur;
  }
  throw quadrature_not_converged(
      "pv_quadrature: excision refinement did not converge");
}

}  // namespace etpa::quad

#endif
