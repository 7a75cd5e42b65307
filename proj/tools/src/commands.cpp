#include "kgcli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <vector>

#include "kgbound/oracle.hpp"
#include "kgbound/susy.hpp"
#include "kgbound/wavefunction.hpp"

namespace kgcli {

using namespace kgbound;

namespace {

// Table layout: states in column order, deltas in row order.
struct TableState {
  int n_r, l;
};
constexpr TableState kStates[8] = {{0, 0}, {1, 0}, {0, 1}, {1, 1},
                                   {0, 2}, {2, 1}, {1, 2}, {0, 3}};
constexpr double kDeltas[4] = {0.05, 0.10, 0.15, 0.20};

// Reference energies (6 printed decimals); NaN marks the empty cells. The
// delta=0.20 3d entry is kept verbatim even though it does not satisfy the
// quantization condition for any nearby index pair -- the ref_dev column is
// where that discrepancy is meant to surface (see README).
const double kNaN = std::nan("");
const double kRefTable[4][8] = {
    {-0.995440, -0.989722, -0.981633, -0.971171, -0.958218, -0.958249,
     -0.942728, -0.924535},
    {-0.983156, -0.961884, -0.930941, -0.890279, -0.837997, -0.838488,
     -0.772955, -0.691402},
    {-0.964688, -0.919695, -0.851356, -0.759000, -0.631085, -0.633957,
     -0.453749, -0.158160},
    {-0.941123, -0.865398, -0.743352, -0.570175, -0.381591, -0.300651, kNaN,
     kNaN},
};

struct OutStream {
  std::ofstream file;
  std::ostream* os = &std::cout;
  bool ok = true;
};

OutStream open_out(const RunConfig& cfg) {
  OutStream o;
  if (!cfg.out.empty()) {
    o.file.open(cfg.out);
    if (!o.file) {
      std::cerr << "cannot open output file: " << cfg.out << "\n";
      o.ok = false;
      return o;
    }
    o.os = &o.file;
  }
  return o;
}

ModelParams params_at(const RunConfig& cfg, double delta) {
  if (cfg.preset) return preset_params(delta);
  ModelParams p = cfg.params;
  p.delta = delta;
  return p;
}

bool bad(const char* msg) {
  std::cerr << msg << "\n";
  return false;
}

}  // namespace

ModelParams preset_params(double delta) { return reference_params(delta); }

std::string g9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string f6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string state_label(int n_r, int l) {
  static const char* kLetters = "spdfgh";
  std::string s = std::to_string(n_r + l + 1);
  s += l <= 5 ? kLetters[l] : 'x';
  return s;
}

std::string apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) return "cannot open config file: " + path;
  std::string line;
  int lineno = 0;
  const auto parse_d = [](const std::string& v, double& dst) {
    const char* b = v.data();
    const char* e = b + v.size();
    auto [p, ec] = std::from_chars(b, e, dst);
    return ec == std::errc{} && p == e;
  };
  const auto parse_i = [](const std::string& v, int& dst) {
    const char* b = v.data();
    const char* e = b + v.size();
    auto [p, ec] = std::from_chars(b, e, dst);
    return ec == std::errc{} && p == e;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      return path + ":" + std::to_string(lineno) + ": expected key=value";
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    const auto strip = [](std::string& s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
    };
    strip(key);
    strip(val);
    bool ok = true;
    if (key == "mass")
      ok = parse_d(val, cfg.params.M);
    else if (key == "delta")
      ok = parse_d(val, cfg.params.delta);
    else if (key == "v0")
      ok = parse_d(val, cfg.params.V0);
    else if (key == "v0p")
      ok = parse_d(val, cfg.params.V0p);
    else if (key == "eta")
      ok = parse_d(val, cfg.params.eta);
    else if (key == "a_param")
      ok = parse_d(val, cfg.params.A);
    else if (key == "l")
      ok = parse_i(val, cfg.l);
    else if (key == "nr")
      ok = parse_i(val, cfg.n_r);
    else if (key == "convention") {
      if (val == "nu")
        cfg.convention = Convention::nu;
      else if (val == "paper")
        cfg.convention = Convention::paper_table;
      else
        ok = false;
      cfg.convention_given = ok;
    } else if (key == "preset_paper") {
      if (val == "1" || val == "true")
        cfg.preset = true;
      else if (val == "0" || val == "false")
        cfg.preset = false;
      else
        ok = false;
    } else if (key == "out")
      cfg.out = val;
    else
      return path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'";
    if (!ok)
      return path + ":" + std::to_string(lineno) + ": bad value for '" + key + "'";
  }
  return "";
}

int cmd_table(const RunConfig& cfg) {
  OutStream out = open_out(cfg);
  if (!out.ok) return 2;
  std::ostream& os = *out.os;
  os << "delta,state_label,n_r,l,q_used,E,residual,exists,ref_dev\n";
  for (int di = 0; di < 4; ++di) {
    const ModelParams p = params_at(cfg, kDeltas[di]);
    for (int si = 0; si < 8; ++si) {
      const TableState st = kStates[si];
      const StateIndex idx{st.n_r, st.l, cfg.convention};
      const EnergyLevel lvl = solve_table_level(p, idx);
      os << g9(kDeltas[di]) << ',' << state_label(st.n_r, st.l) << ','
         << st.n_r << ',' << st.l << ',' << lvl.q_used << ',';
      const double ref = kRefTable[di][si];
      if (lvl.exists) {
        os << f6(lvl.E) << ',' << g9(lvl.residual) << ",1,";
        if (!std::isnan(ref)) os << g9(std::abs(lvl.E - ref));
      } else {
        os << ",,0,";
      }
      os << '\n';
    }
  }
  return 0;
}

int cmd_sweep_delta(const RunConfig& cfg) {
  if (!(cfg.dmin > 0.0 && cfg.dmax <= 0.3 && cfg.dmin <= cfg.dmax &&
        cfg.dstep > 0.0))
    return bad("sweep-delta: need 0 < dmin <= dmax <= 0.3, dstep > 0"), 2;
  if (cfg.n_r < 0 || cfg.n_r > 5 || cfg.l < 0 || cfg.l > 5)
    return bad("sweep-delta: need n_r, l in [0, 5]"), 2;
  OutStream out = open_out(cfg);
  if (!out.ok) return 2;
  std::ostream& os = *out.os;
  os << "delta,E\n";
  const int steps =
      static_cast<int>(std::floor((cfg.dmax - cfg.dmin) / cfg.dstep + 1e-9));
  for (int i = 0; i <= steps; ++i) {
    const double d = cfg.dmin + i * cfg.dstep;
    const ModelParams p = params_at(cfg, d);
    const EnergyLevel lvl =
        solve_table_level(p, StateIndex{cfg.n_r, cfg.l, cfg.convention});
    if (lvl.exists) os << g9(d) << ',' << g9(lvl.E) << '\n';
  }
  return 0;
}

int cmd_sweep_n(const RunConfig& cfg) {
  if (cfg.l < 0 || cfg.l > 5) return bad("sweep-n: need l in [0, 5]"), 2;
  OutStream out = open_out(cfg);
  if (!out.ok) return 2;
  std::ostream& os = *out.os;
  const ModelParams p = params_at(cfg, cfg.params.delta);
  os << "n_r,E\n";
  for (int n_r = 0; n_r <= 5; ++n_r) {
    const EnergyLevel lvl =
        solve_table_level(p, StateIndex{n_r, cfg.l, cfg.convention});
    if (lvl.exists) os << n_r << ',' << g9(lvl.E) << '\n';
  }
  return 0;
}

int cmd_wavefunction(const RunConfig& cfg) {
  if (cfg.n_r < 0 || cfg.n_r > 5 || cfg.l < 0 || cfg.l > 5)
    return bad("wavefunction: need n_r, l in [0, 5]"), 2;
  if (!(cfg.r_max > 0.0 && cfg.r_max <= 20.0) || cfg.samples < 2)
    return bad("wavefunction: need 0 < rmax <= 20, samples >= 2"), 2;
  const ModelParams p = params_at(cfg, cfg.params.delta);
  const StateIndex idx{cfg.n_r, cfg.l, cfg.convention};
  const EnergyLevel lvl = solve_table_level(p, idx);
  if (!lvl.exists) return bad("wavefunction: no bound state at this index"), 1;
  const RadialWavefunction wf = build_wavefunction(p, lvl, idx);
  OutStream out = open_out(cfg);
  if (!out.ok) return 2;
  std::ostream& os = *out.os;
  os << "r,chi\n";
  for (int i = 1; i <= cfg.samples; ++i) {
    const double r = cfg.r_max * i / cfg.samples;
    os << g9(r) << ',' << g9(eval_chi(wf, r)) << '\n';
  }
  return 0;
}

int cmd_potential(const RunConfig& cfg) {
  const ModelParams p = params_at(cfg, cfg.params.delta);
  OutStream out = open_out(cfg);
  if (!out.ok) return 2;
  std::ostream& os = *out.os;
  os << "r,V_exact,V_approx,Delta\n";
  const int n = 400;
  const double r_lo = 1e-2, r_hi = 20.0;
  for (int i = 0; i < n; ++i) {
    const double r = r_lo * std::pow(r_hi / r_lo, i / (n - 1.0));
    const double ve = eval_exact_potential(p, r);
    const double va = eval_approx_potential(p, r);
    os << g9(r) << ',' << g9(ve) << ',' << g9(va) << ',' << g9(ve - va)
       << '\n';
  }
  return 0;
}

int cmd_solve(const RunConfig& cfg) {
  if (cfg.n_r < 0 || cfg.l < 0) return bad("solve: need n_r, l >= 0"), 2;
  const ModelParams p = params_at(cfg, cfg.params.delta);
  const StateIndex idx{cfg.n_r, cfg.l, cfg.convention};
  OutStream out = open_out(cfg);
  if (!out.ok) return 2;
  std::ostream& os = *out.os;
  os << "delta,n_r,l,q_used,branch,E,residual\n";
  for (Branch br : {Branch::negative_N, Branch::positive_N}) {
    const char* name = br == Branch::negative_N ? "negative_N" : "positive_N";
    for (const EnergyLevel& lvl : solve_level(p, idx, br))
      os << g9(p.delta) << ',' << cfg.n_r << ',' << cfg.l << ',' << lvl.q_used
         << ',' << name << ',' << g9(lvl.E) << ',' << g9(lvl.residual) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify: fixed property suite over the reference parameter grid.

namespace {

struct Report {
  std::ostream& os;
  bool all_ok = true;

  void line(const char* name, bool ok, const std::string& detail) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%-22s", name);
    os << buf << (ok ? "pass  " : "FAIL  ") << detail << "\n";
    all_ok = all_ok && ok;
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// All existing table states under the table convention, with their params.
struct SolvedState {
  ModelParams p;
  StateIndex idx;
  EnergyLevel lvl;
};

std::vector<SolvedState> solved_table_grid() {
  std::vector<SolvedState> out;
  for (double d : kDeltas) {
    const ModelParams p = preset_params(d);
    for (const TableState& st : kStates) {
      const StateIndex idx{st.n_r, st.l, Convention::paper_table};
      const EnergyLevel lvl = solve_table_level(p, idx);
      if (lvl.exists) out.push_back({p, idx, lvl});
    }
  }
  return out;
}

// NU-convention ground states (n_r = 0) for l = 0..3 across the delta grid.
std::vector<SolvedState> nu_ground_states() {
  std::vector<SolvedState> out;
  for (double d : kDeltas) {
    const ModelParams p = preset_params(d);
    for (int l = 0; l <= 3; ++l) {
      const StateIndex idx{0, l, Convention::nu};
      const auto roots = solve_level(p, idx, Branch::negative_N);
      if (!roots.empty()) out.push_back({p, idx, roots.front()});
    }
  }
  return out;
}

bool check_identity(Report& rep) {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  int n_done = 0;
  while (n_done < 1000) {
    const double delta = 0.01 + 0.29 * u01(rng);
    const int l = static_cast<int>(u01(rng) * 6);
    const int q = static_cast<int>(u01(rng) * 6);
    const double alpha_sq = -2.0 + 4.0 * u01(rng);
    const double beta_sq = -5.0 + 10.0 * u01(rng);
    if (0.25 + alpha_sq + l * (l + 1.0) < 0.0) continue;
    const double lhs = nu_squared_rhs(delta, l, q, alpha_sq, beta_sq);
    const double rhs = susy_squared_rhs(delta, l, q, alpha_sq, beta_sq);
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
    ++n_done;
  }
  const bool ok = worst <= 1e-12;
  rep.line("nu-susy identity", ok,
           "max rel dev " + sci(worst) + " over 1000 tuples");
  return ok;
}

bool check_solver_agreement(Report& rep) {
  double worst = 0.0;
  bool ok = true;
  for (double d : kDeltas) {
    const ModelParams p = preset_params(d);
    for (const TableState& st : kStates) {
      const StateIndex idx{st.n_r, st.l, Convention::paper_table};
      for (Branch br : {Branch::negative_N, Branch::positive_N}) {
        const auto a = solve_level(p, idx, br);
        const auto b = energy_from_shape_invariance(p, idx, br);
        if (a.size() != b.size()) {
          ok = false;
          continue;
        }
        for (size_t i = 0; i < a.size(); ++i)
          worst = std::max(worst, std::abs(a[i].E - b[i].E));
      }
    }
  }
  ok = ok && worst <= 1e-10;
  rep.line("nu-susy solvers", ok, "max |dE| " + sci(worst) + " on table grid");
  return ok;
}

bool check_riccati(Report& rep) {
  std::vector<double> grid;
  for (int i = 1; i <= 200; ++i) grid.push_back(0.1 * i);
  double worst = 0.0;
  const auto grounds = nu_ground_states();
  for (const SolvedState& gs : grounds) {
    const Superpotential sp = build_superpotential(gs.p, gs.idx.l, gs.lvl.E);
    worst = std::max(worst, riccati_check(sp, gs.p, gs.idx.l, grid));
  }
  const bool ok = worst <= 1e-9 && grounds.size() == 16;
  rep.line("riccati", ok,
           "max rel dev " + sci(worst) + " over " +
               std::to_string(grounds.size()) + " ground states");
  return ok;
}

bool check_normalization(Report& rep, bool inject_fault) {
  double worst = 0.0;
  const auto states = solved_table_grid();
  for (const SolvedState& st : states) {
    RadialWavefunction wf = build_wavefunction(st.p, st.lvl, st.idx);
    if (inject_fault) wf.C *= 1.001;
    const IntegrationResult res = normalization_check(wf);
    if (!res.converged) {
      rep.line("normalization", false, "quadrature did not converge");
      return false;
    }
    worst = std::max(worst, std::abs(res.value - 1.0));
  }
  const bool ok = worst <= 1e-8;
  rep.line("normalization", ok,
           "max |I-1| " + sci(worst) + " over " +
               std::to_string(states.size()) + " states");
  return ok;
}

bool check_nodes(Report& rep) {
  int wrong = 0;
  const auto states = solved_table_grid();
  for (const SolvedState& st : states) {
    const RadialWavefunction wf = build_wavefunction(st.p, st.lvl, st.idx);
    if (count_nodes(wf, 1e-3, 80.0, 6000) != st.idx.n_r) ++wrong;
  }
  const bool ok = wrong == 0;
  rep.line("node counts", ok,
           std::to_string(wrong) + " mismatches over " +
               std::to_string(states.size()) + " states");
  return ok;
}

bool check_susy_ground(Report& rep) {
  double worst = 0.0;
  for (const SolvedState& gs : nu_ground_states()) {
    const Superpotential sp = build_superpotential(gs.p, gs.idx.l, gs.lvl.E);
    const RadialWavefunction wf = build_wavefunction(gs.p, gs.lvl, gs.idx);
    const double r0 = 1.0;
    const double ref = eval_chi(wf, r0) / susy_ground_state(sp, r0);
    for (double r : {0.5, 2.0, 4.0, 8.0, 12.0}) {
      const double ratio = eval_chi(wf, r) / susy_ground_state(sp, r);
      worst = std::max(worst, std::abs(ratio / ref - 1.0));
    }
  }
  const bool ok = worst <= 1e-8;
  rep.line("susy ground state", ok, "max ratio spread " + sci(worst));
  return ok;
}

bool check_special_cases(Report& rep) {
  int failures = 0;
  const ModelParams p = preset_params(0.05);
  // forcing restrictions must reject inconsistent parameters
  const auto expect_throw = [&](SpecialCase c, const ModelParams& bad_p) {
    try {
      solve_special_case(c, bad_p, StateIndex{0, 0, Convention::nu},
                         Branch::negative_N);
      ++failures;
    } catch (const std::invalid_argument&) {
    }
  };
  expect_throw(SpecialCase::manning_rosen, p);      // V0, V0' nonzero
  expect_throw(SpecialCase::class_yukawa, p);       // eta != 1, A != 0
  expect_throw(SpecialCase::hulthen, p);            // V0 nonzero
  expect_throw(SpecialCase::yukawa, p);             // eta != 1
  expect_throw(SpecialCase::inv_quad_yukawa, p);    // V0 nonzero
  {
    ModelParams sp = p;
    try {
      solve_special_case(SpecialCase::s_wave, sp,
                         StateIndex{0, 1, Convention::nu},
                         Branch::negative_N);
      ++failures;  // l must be 0 for the s-wave restriction
    } catch (const std::invalid_argument&) {
    }
  }
  // a valid restriction runs and agrees with the general solver
  ModelParams mr = p;
  mr.V0 = 0.0;
  mr.V0p = 0.0;
  const auto a =
      solve_special_case(SpecialCase::manning_rosen, mr,
                         StateIndex{0, 0, Convention::nu}, Branch::negative_N);
  const auto b =
      solve_level(mr, StateIndex{0, 0, Convention::nu}, Branch::negative_N);
  if (a.size() != b.size()) ++failures;
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (std::abs(a[i].E - b[i].E) > 1e-12) ++failures;
  const bool ok = failures == 0;
  rep.line("special cases", ok, std::to_string(failures) + " failures");
  return ok;
}

bool check_coulomb_limit(Report& rep) {
  double worst = 0.0;
  bool ok = true;
  for (double v0 : {0.5, 1.0}) {
    ModelParams p;
    p.M = 1.0;
    p.delta = 1e-3;
    p.V0 = v0;
    p.V0p = 0.0;
    p.eta = 1.0;
    p.A = 0.0;
    const auto roots =
        solve_special_case(SpecialCase::yukawa, p,
                           StateIndex{0, 0, Convention::nu}, Branch::positive_N);
    const double closed = coulomb_energy(v0, 0, 0, 1.0);
    if (roots.empty()) {
      ok = false;
      continue;
    }
    double best = std::abs(roots.front().E - closed);
    for (const auto& r : roots) best = std::min(best, std::abs(r.E - closed));
    worst = std::max(worst, best);
  }
  ok = ok && worst <= 1e-3 && coulomb_energy(1.0, 0, 0, 1.0) == 0.0;
  rep.line("coulomb limit", ok, "max |dE| " + sci(worst) + " at delta=1e-3");
  return ok;
}

bool check_oracle(Report& rep) {
  const ModelParams p = preset_params(0.05);
  GridSpec grid;
  grid.r_min = 1e-6;
  grid.r_max = 30.0;
  grid.n_points = 32000;

  // candidate analytic energies for node count k under each convention
  const auto closest = [&](Convention conv, int k, int l, double E) {
    double best = std::numeric_limits<double>::infinity();
    const StateIndex idx{k, l, conv};
    for (Branch br : {Branch::negative_N, Branch::positive_N})
      for (const EnergyLevel& lvl : solve_level(p, idx, br))
        best = std::min(best, std::abs(lvl.E - E));
    return best;
  };

  bool ok = true;
  bool all_nu = true, all_tab = true;
  double worst = 0.0;
  // one probe per sign branch and angular momentum
  const OracleResult r0 = self_consistent_solve(p, 0, 0, -0.65, grid);
  const OracleResult r1 = self_consistent_solve(p, 1, 0, 0.05, grid);
  for (const OracleResult* r : {&r0, &r1}) {
    if (!r->converged) {
      ok = false;
      continue;
    }
    const int l = r == &r0 ? 0 : 1;
    const double d_nu = closest(Convention::nu, 0, l, r->E);
    const double d_tab = closest(Convention::paper_table, 0, l, r->E);
    worst = std::max(worst, std::min(d_nu, d_tab));
    if (d_nu > 1e-3) all_nu = false;
    if (d_tab > 1e-3) all_tab = false;
    if (r->node_count != 0) ok = false;
  }
  ok = ok && (all_nu != all_tab);  // exactly one convention must match
  // opposite-sign probes: no l=1 state below zero, l=0 collapse above zero
  const OracleResult r2 = self_consistent_solve(p, 0, 0, 0.5, grid);
  const OracleResult r3 = self_consistent_solve(p, 1, 0, -0.5, grid);
  if (r2.converged || !r2.unphysical) ok = false;
  if (r3.converged || r3.unphysical) ok = false;
  const char* verdict = all_nu == all_tab ? "no unique convention"
                        : all_nu          ? "convention nu (q = n_r)"
                                          : "convention paper_table (q = n)";
  rep.line("oracle", ok,
           std::string(verdict) + ", max |dE| " + sci(worst) +
               " (grid-limited)");
  return ok;
}

}  // namespace

int cmd_verify(const RunConfig& cfg) {
  OutStream out = open_out(cfg);
  if (!out.ok) return 2;
  Report rep{*out.os};
  check_identity(rep);
  check_solver_agreement(rep);
  check_riccati(rep);
  check_normalization(rep, cfg.inject_norm_fault);
  check_nodes(rep);
  check_susy_ground(rep);
  check_special_cases(rep);
  check_coulomb_limit(rep);
  if (cfg.skip_oracle)
    *out.os << "oracle                skipped\n";
  else
    check_oracle(rep);
  *out.os << "verdict: " << (rep.all_ok ? "PASS" : "FAIL") << "\n";
  return rep.all_ok ? 0 : 1;
}

}  // namespace kgcli
