#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "etpa/special_functions.hpp"

using namespace etpa;

namespace {

// Independent long-double power-series oracle for Si and Ci, usable up to
// x ~ 16 before cancellation eats the last digits.
long double si_series(long double x) {
  long double sum = 0.0L, term = x;
  for (int k = 0; k < 200; ++k) {
    const int n = 2 * k + 1;
    sum += term / n;
    term *= -x * x / ((n + 1.0L) * (n + 2.0L));
    if (std::abs(term / n) < 1e-25L * std::abs(sum)) break;
  }
  return sum;
}

long double ci_series(long double x) {
  const long double euler_gamma = 0.577215664901532860606512090082L;
  long double sum = 0.0L, term = -x * x / 2.0L;
  for (int k = 1; k < 200; ++k) {
    const int n = 2 * k;
    sum += term / n;
    term *= -x * x / ((n + 1.0L) * (n + 2.0L));
    if (std::abs(term / n) < 1e-25L * std::abs(sum)) break;
  }
  return euler_gamma + std::log(x) + sum;
}

}  // namespace

TEST_CASE("si: pinned values and limits") {
  CHECK(si(0.0) == 0.0);
  CHECK(si(1.0) == doctest::Approx(0.946083070367183015).epsilon(1e-14));
  CHECK(std::abs(si(1000.0) - std::numbers::pi / 2) < 1e-3);
  CHECK(si(-2.5) == -si(2.5));
}

TEST_CASE("ci: pinned values, small-x structure, domain") {
  CHECK(ci(1.0) == doctest::Approx(0.337403922900968135).epsilon(1e-14));
  const double euler_gamma = 0.57721566490153286;
  CHECK(std::abs(ci(1e-6) - (euler_gamma + std::log(1e-6))) < 1e-12);
  CHECK(std::abs(ci(1000.0)) < 1e-3);
  CHECK_THROWS_AS(ci(0.0), domain_error);
  CHECK_THROWS_AS(ci(-1.0), domain_error);
}

TEST_CASE("si/ci agree with the series oracle across the seam") {
  for (double x = 0.01; x <= 16.0; x += 0.37) {
    CHECK(std::abs(si(x) - double(si_series(x))) < 1e-12);
    CHECK(std::abs(ci(x) - double(ci_series(x))) < 1e-12);
  }
  // dense sweep around the series/continued-fraction switchover
  for (double x = 1.8; x <= 2.2; x += 0.01) {
    CHECK(std::abs(si(x) - double(si_series(x))) < 1e-13);
    CHECK(std::abs(ci(x) - double(ci_series(x))) < 1e-13);
  }
}

TEST_CASE("gamma_m: t=0 limit and small-t agreement") {
  const double wgf = 2.0, b = 1.0;
  for (double r : {1.02, 1.1, 2.0, 5.0}) {
    const double nu = r * b;
    const double expect = std::log((nu + b) / (nu - b));
    CHECK(gamma_m(nu, wgf, 0.0) == doctest::Approx(expect).epsilon(1e-14));
    const double t_small = 1e-8 * 2 * std::numbers::pi / wgf;
    CHECK(gamma_m(nu, wgf, t_small) == doctest::Approx(expect).epsilon(1e-6));
  }
  CHECK_THROWS_AS(gamma_m(0.9, wgf, 1.0), domain_error);
  CHECK_THROWS_AS(gamma_m(1.0, wgf, 1.0), domain_error);
}

TEST_CASE("gamma_m: even in t_minus") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ut(-30.0, 30.0);
  std::uniform_real_distribution<double> unu(1.01, 6.0);
  for (int i = 0; i < 200; ++i) {
    const double nu = unu(rng), t = ut(rng);
    CHECK(gamma_m(nu, 2.0, t) == doctest::Approx(gamma_m(nu, 2.0, -t)).epsilon(1e-10));
  }
}

TEST_CASE("sinc_approx: log prefactor and zeros") {
  const double wgf = 2.0;
  CHECK(sinc_approx(2.0, wgf, 0.0) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  for (int k = 1; k <= 5; ++k) {
    const double t = 2.0 * std::numbers::pi * k / wgf;
    CHECK(std::abs(sinc_approx(2.0, wgf, t)) < 1e-14);
  }
  CHECK_THROWS_AS(sinc_approx(0.5, wgf, 0.0), domain_error);
}

TEST_CASE("gamma_m vs sinc: close at nu=2B, worse near the band edge") {
  const double wgf = 2.0, b = 1.0;
  const double period = 2 * std::numbers::pi / wgf;
  auto rel_l2 = [&](double nu) {
    double num = 0.0, den = 0.0;
    const int n = 2001;
    for (int i = 0; i < n; ++i) {
      const double t = -10.0 * period + 20.0 * period * i / (n - 1);
      const double g = gamma_m(nu, wgf, t);
      const double s = sinc_approx(nu, wgf, t);
      num += (g - s) * (g - s);
      den += g * g;
    }
    return std::sqrt(num / den);
  };
  const double d2 = rel_l2(2.0 * b);
  const double d102 = rel_l2(1.02 * b);
  CHECK(d2 < 0.10);
  CHECK(d102 > d2);
}

TEST_CASE("gamma_m: tail amplitude shrinks as nu grows") {
  const double wgf = 2.0, b = 1.0;
  const double period = 2 * std::numbers::pi / wgf;
  auto tail_amp = [&](double nu) {
    double amp = 0.0;
    for (double t = 4.5 * period; t <= 5.5 * period; t += period / 200)
      amp = std::max(amp, std::abs(gamma_m(nu, wgf, t) / gamma_m(nu, wgf, 0.0)));
    return amp;
  };
  const double a1 = tail_amp(1.02 * b), a2 = tail_amp(1.1 * b), a3 = tail_amp(2.0 * b);
  CHECK(a1 > a2);
  CHECK(a2 > a3);
}

TEST_CASE("summed_profile: linearity and variants") {
  coupling_set cs;
  cs.band = 1.0;
  cs.omega_gf = 2.0;
  cs.sigma_tp = 1.0;
  cs.entries = {{2.0, {0.25, 0.0}}, {2.0, {0.25, 0.0}}};
  std::vector<double> t = {0.0, 0.7, 3.1, 9.4};

  coupling_set single = cs;
  single.entries = {{2.0, {0.25, 0.0}}};
  const auto two = summed_profile(cs, t, profile_variant::exact);
  const auto one = summed_profile(single, t, profile_variant::exact);
  for (std::size_t i = 0; i < t.size(); ++i)
    CHECK(std::abs(two[i] - 2.0 * one[i]) < 1e-12);

  // single term reduces to 4i c gamma_m
  for (std::size_t i = 0; i < t.size(); ++i) {
    const complexd expect = complexd{0.0, 1.0} * gamma_m(2.0, 2.0, t[i]);
    CHECK(std::abs(one[i] - expect) < 1e-12);
  }

  coupling_set inband = cs;
  inband.entries = {{0.5, {1.0, 0.0}}};
  CHECK_THROWS_AS(summed_profile(inband, t, profile_variant::exact),
                  in_band_level_present);
}

TEST_CASE("summed_profile: sinc collapse tracks the exact sum") {
  coupling_set cs;
  cs.band = 1.0;
  cs.omega_gf = 2.0;
  cs.sigma_tp = 1.0;
  cs.entries = {{2.0, {0.5, 0.0}}, {3.0, {0.3, 0.1}}, {5.0, {0.2, -0.2}}};
  const double period = 2 * std::numbers::pi / cs.omega_gf;
  std::vector<double> t;
  for (int i = 0; i < 801; ++i) t.push_back(-10.0 * period + 20.0 * period * i / 800);
  const auto exact = summed_profile(cs, t, profile_variant::exact);
  const auto approx = summed_profile(cs, t, profile_variant::sinc_collapsed);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    num += std::norm(exact[i] - approx[i]);
    den += std::norm(exact[i]);
  }
  // bounded by the worst single-level (nu = 2B) threshold
  CHECK(std::sqrt(num / den) < 0.10);
}
