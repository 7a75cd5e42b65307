#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "kgcli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "kgbound: bound states of the screened Manning-Rosen + Yukawa-class "
      "potential (Klein-Gordon, equal scalar/vector coupling)"};
  app.require_subcommand(1);

  // staging values; only flags the user actually passed override the config
  // file, so everything is applied manually after parsing
  double mass = 1.0, delta = 0.05, v0 = 0.0, v0p = 0.0, eta = 1.0, a = 0.0;
  int l = 0, n_r = 0, samples = 1000;
  double dmin = 0.01, dmax = 0.30, dstep = 0.01, rmax = 20.0;
  std::string convention, out_path, config_path;
  bool preset = false, inject_norm_fault = false, skip_oracle = false;

  app.add_flag("--preset-paper", preset,
               "tied reference parameters: V0=1, V0'=0.1, M=1, eta=0.75, "
               "A=1/delta (overrides the individual parameter flags)");
  app.add_option("--mass", mass, "rest mass M");
  app.add_option("--delta", delta, "screening parameter");
  app.add_option("--v0", v0, "Yukawa strength V0");
  app.add_option("--v0p", v0p, "inverse-quadratic strength V0'");
  app.add_option("--eta", eta, "Manning-Rosen eta");
  app.add_option("--a-param", a, "Manning-Rosen A");
  app.add_option("--l", l, "orbital quantum number");
  app.add_option("--nr", n_r, "radial quantum number");
  app.add_option("--convention", convention,
                 "index convention: nu (q = n_r) or paper (q = n_r + l + 1); "
                 "default: paper everywhere except verify, which uses nu")
      ->check(CLI::IsMember({"nu", "paper"}));
  app.add_option("--out", out_path, "write output to FILE instead of stdout");
  app.add_option("--config", config_path,
                 "key=value config file ('#' comments); flags override it");

  CLI::App* c_table = app.add_subcommand(
      "table", "energy table: 4 deltas x 8 states, CSV with ref_dev column");
  CLI::App* c_sdelta =
      app.add_subcommand("sweep-delta", "E vs delta for one state");
  c_sdelta->add_option("--dmin", dmin, "first delta (default 0.01)");
  c_sdelta->add_option("--dmax", dmax, "last delta (default 0.30)");
  c_sdelta->add_option("--dstep", dstep, "delta step (default 0.01)");
  CLI::App* c_sn =
      app.add_subcommand("sweep-n", "E vs n_r in [0,5] at fixed l and delta");
  CLI::App* c_wf = app.add_subcommand(
      "wavefunction", "normalized radial eigenfunction chi(r), CSV");
  c_wf->add_option("--rmax", rmax, "window (0, rmax], rmax <= 20");
  c_wf->add_option("--samples", samples, "row count (default 1000)");
  CLI::App* c_pot = app.add_subcommand(
      "potential", "exact vs approximated potential on a log grid, CSV");
  CLI::App* c_solve = app.add_subcommand(
      "solve", "all quantization-condition roots for one state, both forms");
  CLI::App* c_verify = app.add_subcommand(
      "verify",
      "property suite on the reference grid (ignores parameter flags)");
  c_verify->add_flag("--inject-norm-fault", inject_norm_fault,
                     "test hook: corrupt the normalization constant");
  c_verify->add_flag("--skip-oracle", skip_oracle,
                     "test hook: skip the finite-difference cross-check");
  for (CLI::App* sub : {c_table, c_sdelta, c_sn, c_wf, c_pot, c_solve, c_verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << "\n";
    return 2;
  }

  kgcli::RunConfig cfg;
  if (!config_path.empty()) {
    const std::string err = kgcli::apply_config_file(config_path, cfg);
    if (!err.empty()) {
      std::cerr << err << "\n";
      return 2;
    }
  }
  // command-line flags beat config-file values
  const auto given = [&app](const char* name) {
    return app.count(name) > 0;
  };
  if (given("--mass")) cfg.params.M = mass;
  if (given("--delta")) cfg.params.delta = delta;
  if (given("--v0")) cfg.params.V0 = v0;
  if (given("--v0p")) cfg.params.V0p = v0p;
  if (given("--eta")) cfg.params.eta = eta;
  if (given("--a-param")) cfg.params.A = a;
  if (given("--l")) cfg.l = l;
  if (given("--nr")) cfg.n_r = n_r;
  if (given("--out")) cfg.out = out_path;
  if (given("--preset-paper")) cfg.preset = preset;
  if (given("--convention")) {
    cfg.convention = convention == "nu" ? kgbound::Convention::nu
                                        : kgbound::Convention::paper_table;
    cfg.convention_given = true;
  }
  cfg.dmin = dmin;
  cfg.dmax = dmax;
  cfg.dstep = dstep;
  cfg.r_max = rmax;
  cfg.samples = samples;
  cfg.inject_norm_fault = inject_norm_fault;
  cfg.skip_oracle = skip_oracle;

  try {
    if (app.got_subcommand(c_verify)) {
      if (!cfg.convention_given) cfg.convention = kgbound::Convention::nu;
      return kgcli::cmd_verify(cfg);
    }
    if (app.got_subcommand(c_table)) return kgcli::cmd_table(cfg);
    if (app.got_subcommand(c_sdelta)) return kgcli::cmd_sweep_delta(cfg);
    if (app.got_subcommand(c_sn)) return kgcli::cmd_sweep_n(cfg);
    if (app.got_subcommand(c_wf)) return kgcli::cmd_wavefunction(cfg);
    if (app.got_subcommand(c_pot)) return kgcli::cmd_potential(cfg);
    if (app.got_subcommand(c_solve)) return kgcli::cmd_solve(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
