// Shared CLI plumbing: run configuration, config-file loader, CSV helpers.
#pragma once

#include <map>
#include <string>

#include "kgbound/model.hpp"
#include "kgbound/spectrum.hpp"

namespace kgcli {

struct RunConfig {
  kgbound::ModelParams params;  // delta/v0/v0p/eta/a/mass
  bool preset = false;          // V0=1, V0'=0.1, M=1, eta=0.75, A=1/delta
  kgbound::Convention convention = kgbound::Convention::paper_table;
  bool convention_given = false;  // set by flag or config; verify defaults to
                                  // nu only when untouched
  std::string out;              // empty -> stdout
  int l = 0;
  int n_r = 0;
  double dmin = 0.01, dmax = 0.30, dstep = 0.01;  // sweep-delta grid
  double r_max = 20.0;                            // wavefunction window
  int samples = 1000;
  bool inject_norm_fault = false;  // verify hook: corrupt C before the check
  bool skip_oracle = false;        // verify hook: skip the FD cross-check
};

// Applies the tied-parameter preset at the given screening.
kgbound::ModelParams preset_params(double delta);

// Flat key=value file, '#' comments, locale-independent numbers. Returns ""
// on success or a message naming the offending line. Keys: mass, delta, v0,
// v0p, eta, a_param, l, nr, convention, preset_paper, out.
std::string apply_config_file(const std::string& path, RunConfig& cfg);

// printf-based so the global locale can never leak into the CSV.
std::string g9(double x);   // %.9g
std::string f6(double x);   // %.6f
std::string state_label(int n_r, int l);  // 1s, 2p, ... via n = n_r + l + 1

// Commands; each returns the process exit code (0 ok, 1 property failure,
// 2 bad config). Output goes to cfg.out or stdout.
int cmd_table(const RunConfig& cfg);
int cmd_sweep_delta(const RunConfig& cfg);
int cmd_sweep_n(const RunConfig& cfg);
int cmd_wavefunction(const RunConfig& cfg);
int cmd_potential(const RunConfig& cfg);
int cmd_solve(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

}  // namespace kgcli
