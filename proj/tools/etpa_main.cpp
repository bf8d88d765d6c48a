#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "etpa/run.hpp"

namespace {

void add_grid_opts(CLI::App* cmd, etpa::run_config& cfg) {
  auto* a = cmd->add_option("--grid-min", cfg.grid_min, "grid lower bound");
  auto* b = cmd->add_option("--grid-max", cfg.grid_max, "grid upper bound");
  auto* c = cmd->add_option("--grid-n", cfg.grid_n, "grid point count (>= 2)");
  a->needs(b, c);
  b->needs(a, c);
  c->needs(a, b);
  cmd->callback([&cfg, a]() { cfg.grid_set = a->count() > 0; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-photon absorption simulator: delay scans, spectra, "
               "time-difference profiles, figure reproductions"};
  app.require_subcommand(1);

  etpa::run_config cfg;

  auto* scan = app.add_subcommand("delay-scan",
                                  "TPA probability versus photon time delay");
  scan->add_option("--config", cfg.absorber_path, "absorber config file")->required();
  scan->add_option("--out", cfg.output_path, "output CSV path")->required();
  scan->add_flag("--normalized", cfg.normalized,
                 "report times in 2*pi/omega_gf, frequencies in omega_gf/2");
  scan->add_option("--input-state", cfg.input_kind,
                   "ideal | gaussian | product")
      ->check(CLI::IsMember({"ideal", "gaussian", "product"}));
  scan->add_option("--delta-plus", cfg.delta_plus, "gaussian: sum-frequency detuning");
  scan->add_option("--sigma-plus", cfg.sigma_plus, "gaussian: sum-frequency bandwidth");
  scan->add_option("--sigma-minus", cfg.sigma_minus, "gaussian: time-difference width");
  scan->add_option("--omega1", cfg.omega1, "product: photon 1 center frequency");
  scan->add_option("--omega2", cfg.omega2, "product: photon 2 center frequency");
  scan->add_option("--sigma1", cfg.sigma1, "product: photon 1 bandwidth");
  scan->add_option("--sigma2", cfg.sigma2, "product: photon 2 bandwidth");
  add_grid_opts(scan, cfg);

  auto* spectrum = app.add_subcommand(
      "spectrum", "frequency-difference spectrum, full and truncated");
  spectrum->add_option("--config", cfg.absorber_path, "absorber config file")->required();
  spectrum->add_option("--out", cfg.output_path, "output CSV path")->required();
  spectrum->add_flag("--normalized", cfg.normalized, "frequencies in omega_gf/2");
  add_grid_opts(spectrum, cfg);

  auto* gamma = app.add_subcommand(
      "gamma", "exact and sinc time-difference profiles of an above-band level");
  gamma->add_option("--config", cfg.absorber_path,
                    "absorber config (source of omega_gf)");
  gamma->add_option("--omega-gf", cfg.omega_gf,
                    "two-photon transition frequency (if no config)");
  gamma->add_option("--nu-m", cfg.nu_m,
                    "level detuning (units of omega_gf/2 with --normalized)")
      ->required();
  gamma->add_option("--out", cfg.output_path, "output CSV path")->required();
  gamma->add_flag("--normalized", cfg.normalized,
                  "times in 2*pi/omega_gf, nu in omega_gf/2");
  add_grid_opts(gamma, cfg);

  auto* fig1 = app.add_subcommand(
      "fig1", "normalized profiles for nu_m in {1.02, 1.1, 2} omega_gf/2");
  fig1->add_option("--omega-gf", cfg.omega_gf, "two-photon transition frequency");
  fig1->add_option("--out", cfg.output_path, "output CSV path (SVG alongside)")
      ->required();
  add_grid_opts(fig1, cfg);

  auto* fig2 = app.add_subcommand(
      "fig2", "exact vs sinc comparison for nu_m in {1.02, 2} omega_gf/2");
  fig2->add_option("--omega-gf", cfg.omega_gf, "two-photon transition frequency");
  fig2->add_option("--out", cfg.output_path, "output CSV path (SVG alongside)")
      ->required();
  add_grid_opts(fig2, cfg);

  auto* verify = app.add_subcommand("verify",
                                    "run the numerical cross-check battery");
  verify->add_option("--out", cfg.output_path, "report file (also printed)");
  verify->add_option("--epsilon", cfg.epsilon,
                     "regularization scale in units of omega_gf");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (scan->parsed()) cfg.cmd = etpa::command::delay_scan;
  if (spectrum->parsed()) cfg.cmd = etpa::command::spectrum;
  if (gamma->parsed()) cfg.cmd = etpa::command::gamma;
  if (fig1->parsed()) cfg.cmd = etpa::command::fig1;
  if (fig2->parsed()) cfg.cmd = etpa::command::fig2;
  if (verify->parsed()) cfg.cmd = etpa::command::verify;

  try {
    return etpa::run(cfg);
  } catch (const etpa::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const etpa::boundary_level& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const etpa::in_band_level_present& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const etpa::band_violation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const etpa::pole_on_grid& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const etpa::zero_dipole_vector& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const etpa::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
