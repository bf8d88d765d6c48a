#ifndef ETPA_LEVEL_MODEL_HPP
#define ETPA_LEVEL_MODEL_HPP

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "etpa/errors.hpp"

namespace etpa {

using complexd = std::complex<double>;

// One intermediate level |m> with its transition dipoles <m|d|g> and <m|d|f>.
struct intermediate_level {
  double omega_m = 0.0;
  complexd d_gm{0.0, 0.0};
  complexd d_mf{0.0, 0.0};
};

// Level structure of a two-photon absorber. Frequencies are angular, hbar = 1.
struct absorber_spec {
  double omega_g = 0.0;
  double omega_f = 0.0;
  std::vector<intermediate_level> levels;
  double sigma_tp = 1.0;

  double omega_gf() const { return omega_f - omega_g; }
  double omega_av() const { return 0.5 * (omega_f + omega_g); }
  double band() const { return 0.5 * omega_gf(); }

  void validate() const {
    if (!(omega_f > omega_g))
      throw error("absorber_spec: omega_f must be strictly greater than omega_g");
    if (levels.empty()) throw error("absorber_spec: level list is empty");
    if (!(sigma_tp >= 0.0)) throw error("absorber_spec: sigma_tp must be nonnegative");
    bool any = false;
    for (const auto& lv : levels)
      if (std::abs(lv.d_gm) * std::abs(lv.d_mf) != 0.0) any = true;
    if (!any)
      throw zero_dipole_vector(
          "absorber_spec: every level has d_gm*d_mf == 0, TPA amplitude vanishes");
  }
};

// Effective intermediate superpositions. Norms are real nonnegative; all phase
// lives in the unit vectors.
struct effective_states {
  double d_gmu = 0.0;
  double d_muf = 0.0;
  std::vector<complexd> phi_gmu;
  std::vector<complexd> phi_muf;
};

inline effective_states derive_effective_states(const absorber_spec& spec) {
  spec.validate();
  const std::size_t n = spec.levels.size();
  effective_states es;
  double ng2 = 0.0, nf2 = 0.0;
  for (const auto& lv : spec.levels) {
    ng2 += std::norm(lv.d_gm);
    nf2 += std::norm(lv.d_mf);
  }
  if (ng2 == 0.0) throw zero_dipole_vector("derive_effective_states: all d_gm vanish");
  if (nf2 == 0.0) throw zero_dipole_vector("derive_effective_states: all d_mf vanish");
  es.d_gmu = std::sqrt(ng2);
  es.d_muf = std::sqrt(nf2);
  es.phi_gmu.resize(n);
  es.phi_muf.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    es.phi_gmu[m] = spec.levels[m].d_gm / es.d_gmu;
    // d_muf * conj(phi_muf[m]) == d_mf, so <Phi_muf|m><m|Phi_gmu> carries the
    // plain product d_mf*d_gm used by the dipole correlation function.
    es.phi_muf[m] = std::conj(spec.levels[m].d_mf) / es.d_muf;
  }
  return es;
}

// sigma_tp derived from a beam-profile ratio J_Q: sigma_tp = J_Q*d_gmu*d_muf.
inline double sigma_tp_from_jq(const absorber_spec& spec, double j_q) {
  const auto es = derive_effective_states(spec);
  return j_q * es.d_gmu * es.d_muf;
}

struct coupling {
  double nu = 0.0;      // omega_m - omega_av
  complexd c{0.0, 0.0}; // sigma_tp * <Phi_muf|m><m|Phi_gmu>
};

struct coupling_set {
  std::vector<coupling> entries;
  double band = 0.0;      // omega_gf / 2
  double omega_gf = 0.0;
  double sigma_tp = 0.0;
};

inline coupling_set make_coupling_set(const absorber_spec& spec) {
  const auto es = derive_effective_states(spec);
  coupling_set cs;
  cs.band = spec.band();
  cs.omega_gf = spec.omega_gf();
  cs.sigma_tp = spec.sigma_tp;
  cs.entries.reserve(spec.levels.size());
  const double wav = spec.omega_av();
  for (std::size_t m = 0; m < spec.levels.size(); ++m) {
    coupling cp;
    cp.nu = spec.levels[m].omega_m - wav;
    cp.c = spec.sigma_tp * std::conj(es.phi_muf[m]) * es.phi_gmu[m];
    cs.entries.push_back(cp);
  }
  return cs;
}

enum class level_class { below_ground, in_band, above_final };

inline const char* to_string(level_class c) {
  switch (c) {
    case level_class::below_ground: return "below_ground";
    case level_class::in_band: return "in_band";
    case level_class::above_final: return "above_final";
  }
  return "?";
}

inline std::vector<level_class> classify_levels(const absorber_spec& spec) {
  spec.validate();
  const double b = spec.band();
  const double wav = spec.omega_av();
  std::vector<level_class> out;
  out.reserve(spec.levels.size());
  for (std::size_t m = 0; m < spec.levels.size(); ++m) {
    const double nu = spec.levels[m].omega_m - wav;
    const double dist = std::abs(std::abs(nu) - b);
    if (dist == 0.0)
      throw boundary_level("classify_levels: level " + std::to_string(m) +
                           " sits exactly on the band edge |nu| = omega_gf/2");
    if (dist < 1e-9 * spec.omega_gf())
      std::fprintf(stderr,
                   "etpa: warning: level %zu lies within 1e-9*omega_gf of the band "
                   "edge; log prefactors and PV poles are nearly singular\n",
                   m);
    if (nu < -b)
      out.push_back(level_class::below_ground);
    else if (nu > b)
      out.push_back(level_class::above_final);
    else
      out.push_back(level_class::in_band);
  }
  return out;
}

}  // namespace etpa

#endif
