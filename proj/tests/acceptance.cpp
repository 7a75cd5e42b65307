// Acceptance gate. One criterion per invocation: `acceptance N` runs check N,
// prints exactly one line
//   criterion N: PASS -- <detail>
//   criterion N: FAIL -- <detail>
// and exits 0/1 accordingly. Registered with ctest once per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "kgbound/model.hpp"
#include "kgbound/oracle.hpp"
#include "kgbound/spectrum.hpp"
#include "kgbound/susy.hpp"
#include "kgbound/wavefunction.hpp"

using namespace kgbound;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TableState {
  const char* label;
  int n_r;
  int l;
};
constexpr TableState kStates[8] = {{"1s", 0, 0}, {"2s", 1, 0}, {"2p", 0, 1},
                                   {"3p", 1, 1}, {"3d", 0, 2}, {"4p", 2, 1},
                                   {"4d", 1, 2}, {"4f", 0, 3}};
constexpr double kDeltas[4] = {0.05, 0.10, 0.15, 0.20};

// Published reference energies E/M (blank cells as NaN).
const double kRef[4][8] = {
    {-0.995440, -0.989722, -0.981633, -0.971171, -0.958218, -0.958249,
     -0.942728, -0.924535},
    {-0.983156, -0.961884, -0.930941, -0.890279, -0.837997, -0.838488,
     -0.772955, -0.691402},
    {-0.964688, -0.919695, -0.851356, -0.759000, -0.631085, -0.633957,
     -0.453749, -0.158160},
    {-0.941123, -0.865398, -0.743352, -0.570175, -0.381591, -0.300651, kNaN,
     kNaN}};

ModelParams preset(double delta) { return reference_params(delta); }

StateIndex table_state(int si) {
  return StateIndex{kStates[si].n_r, kStates[si].l, Convention::paper_table};
}

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

// ---------------------------------------------------------------------------

bool criterion1(std::string& detail) {
  // Reference-table reproduction within 1e-5 absolute, four spot-check
  // residuals below 1e-5 at the printed energies, full table under 2 s.
  const auto t0 = std::chrono::steady_clock::now();
  int matched = 0, populated = 0;
  double worst_dev = 0.0;
  std::string worst_at = "-";
  for (int di = 0; di < 4; ++di) {
    const ModelParams p = preset(kDeltas[di]);
    for (int si = 0; si < 8; ++si) {
      const double ref = kRef[di][si];
      if (std::isnan(ref)) continue;
      ++populated;
      const EnergyLevel lvl = solve_table_level(p, table_state(si));
      if (!lvl.exists) continue;
      const double dev = std::fabs(lvl.E - ref);
      if (dev <= 1e-5) {
        ++matched;
      } else if (dev > worst_dev) {
        worst_dev = dev;
        worst_at = std::string(kStates[si].label) + " at delta=" +
                   (di == 0   ? "0.05"
                    : di == 1 ? "0.10"
                    : di == 2 ? "0.15"
                              : "0.20");
      }
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  const double ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  // Spot checks: substitute the printed 6-decimal energies into the
  // quantization condition.
  struct Spot {
    double delta;
    int si;
    double E;
  };
  const Spot spots[4] = {{0.05, 0, -0.995440},
                         {0.10, 1, -0.961884},
                         {0.10, 2, -0.930941},
                         {0.15, 4, -0.631085}};
  int spot_ok = 0;
  double worst_spot = 0.0;
  for (const Spot& s : spots) {
    const ModelParams p = preset(s.delta);
    const ResidualValue rv = residual(p, table_state(s.si), s.E);
    const double af = std::fabs(rv.f);
    if (af < 1e-5)
      ++spot_ok;
    else
      worst_spot = std::max(worst_spot, af);
  }

  const bool ok = matched == populated && spot_ok == 4 && ms < 2000.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d/%d entries within 1e-5%s%s; spot residuals %d/4 below "
                "1e-5%s; table in %.0f ms",
                matched, populated,
                matched == populated ? "" : ", worst ",
                matched == populated ? "" : (sci(worst_dev) + " at " + worst_at).c_str(),
                spot_ok,
                spot_ok == 4 ? "" : (", worst " + sci(worst_spot)).c_str(),
                ms);
  detail = buf;
  return ok;
}

bool criterion2(std::string& detail) {
  // 4d and 4f at delta = 0.20 must come back exists = false, while the other
  // six states at the same delta still exist.
  const ModelParams p = preset(0.20);
  const bool no_4d = !solve_table_level(p, table_state(6)).exists;
  const bool no_4f = !solve_table_level(p, table_state(7)).exists;
  int others = 0;
  for (int si = 0; si < 6; ++si)
    if (solve_table_level(p, table_state(si)).exists) ++others;
  const bool ok = no_4d && no_4f && others == 6;
  detail = std::string("4d ") + (no_4d ? "absent" : "present") + ", 4f " +
           (no_4f ? "absent" : "present") + ", " + std::to_string(others) +
           "/6 lower states present at delta=0.20";
  return ok;
}

bool criterion3(std::string& detail) {
  // Weak-screening Yukawa against the closed-form Coulomb limit.
  double worst = 0.0;
  bool found_all = true;
  for (double v0 : {0.5, 1.0}) {
    ModelParams p;
    p.delta = 1e-3;
    p.V0 = v0;
    const double closed = coulomb_energy(v0, 0, 0, 1.0);
    const auto roots = solve_level(p, StateIndex{0, 0, Convention::nu},
                                   Branch::positive_N);
    if (roots.empty()) {
      found_all = false;
      continue;
    }
    double best = std::fabs(roots.front().E - closed);
    for (const auto& r : roots) best = std::min(best, std::fabs(r.E - closed));
    worst = std::max(worst, best);
  }
  const bool exact_zero = coulomb_energy(1.0, 0, 0, 1.0) == 0.0;
  const bool ok = found_all && worst <= 1e-3 && exact_zero;
  detail = "max |dE| " + sci(worst) +
           " vs closed form at delta=1e-3; V0=1 closed form is exactly 0: " +
           (exact_zero ? "yes" : "no");
  return ok;
}

bool criterion4(std::string& detail) {
  // Squared-condition identity on random tuples, then root-for-root solver
  // agreement on the table grid for both sign branches.
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> ud(0.01, 0.3), ua(-2.0, 2.0),
      ub(-5.0, 5.0);
  double worst_id = 0.0;
  int tuples = 0;
  while (tuples < 1000) {
    const double delta = ud(rng);
    const int l = static_cast<int>(rng() % 6);
    const int q = static_cast<int>(rng() % 6);
    const double a2 = ua(rng), b2 = ub(rng);
    if (0.25 + a2 + l * (l + 1.0) < 0.0) continue;
    ++tuples;
    const double x = nu_squared_rhs(delta, l, q, a2, b2);
    const double y = susy_squared_rhs(delta, l, q, a2, b2);
    worst_id = std::max(worst_id,
                        std::fabs(x - y) / std::max(1.0, std::fabs(x)));
  }

  double worst_root = 0.0;
  bool sizes_ok = true;
  for (int di = 0; di < 4; ++di) {
    const ModelParams p = preset(kDeltas[di]);
    for (int si = 0; si < 8; ++si) {
      const StateIndex st = table_state(si);
      for (Branch br : {Branch::negative_N, Branch::positive_N}) {
        const auto a = solve_level(p, st, br);
        const auto b = energy_from_shape_invariance(p, st, br);
        if (a.size() != b.size()) {
          sizes_ok = false;
          continue;
        }
        for (size_t i = 0; i < a.size(); ++i)
          worst_root = std::max(worst_root, std::fabs(a[i].E - b[i].E));
      }
    }
  }
  const bool ok = worst_id <= 1e-12 && sizes_ok && worst_root <= 1e-10;
  detail = "identity dev " + sci(worst_id) + " over 1000 tuples; solver dev " +
           sci(worst_root) + (sizes_ok ? "" : "; root counts differ");
  return ok;
}

bool criterion5(std::string& detail) {
  // Riccati identity at every nu-convention ground state of the table grid.
  std::vector<double> grid;
  for (double r = 0.1; r <= 20.0 + 1e-12; r += 0.1) grid.push_back(r);
  double worst = 0.0;
  int states = 0;
  for (double delta : kDeltas) {
    const ModelParams p = preset(delta);
    for (int l = 0; l <= 3; ++l) {
      const EnergyLevel lvl =
          solve_table_level(p, StateIndex{0, l, Convention::nu});
      if (!lvl.exists) continue;
      ++states;
      const Superpotential sp = build_superpotential(p, l, lvl.E);
      worst = std::max(worst, riccati_check(sp, p, l, grid));
    }
  }
  const bool ok = states == 16 && worst <= 1e-9;
  detail = "max deviation " + sci(worst) + " over " + std::to_string(states) +
           " ground states";
  return ok;
}

bool criterion6(std::string& detail) {
  // Unit normalization, node counts, and ground-state proportionality.
  double worst_norm = 0.0;
  int bad_nodes = 0, states = 0;
  for (int di = 0; di < 4; ++di) {
    const ModelParams p = preset(kDeltas[di]);
    for (int si = 0; si < 8; ++si) {
      const StateIndex st = table_state(si);
      const EnergyLevel lvl = solve_table_level(p, st);
      if (!lvl.exists) continue;
      ++states;
      const RadialWavefunction wf = build_wavefunction(p, lvl, st);
      const IntegrationResult norm = normalization_check(wf);
      worst_norm = std::max(worst_norm, std::fabs(norm.value - 1.0));
      if (count_nodes(wf, 1e-3, 80.0, 6000) != kStates[si].n_r) ++bad_nodes;
    }
  }

  double worst_ratio = 0.0;
  for (double delta : kDeltas) {
    const ModelParams p = preset(delta);
    for (int l = 0; l <= 3; ++l) {
      const StateIndex st{0, l, Convention::nu};
      const EnergyLevel lvl = solve_table_level(p, st);
      if (!lvl.exists) continue;
      const RadialWavefunction wf = build_wavefunction(p, lvl, st);
      const Superpotential sp = build_superpotential(p, l, lvl.E);
      const double ref = eval_chi(wf, 1.0) / susy_ground_state(sp, 1.0);
      for (double r : {0.5, 2.0, 4.0, 8.0, 12.0}) {
        const double ratio = eval_chi(wf, r) / susy_ground_state(sp, r);
        worst_ratio = std::max(worst_ratio,
                               std::fabs(ratio - ref) / std::fabs(ref));
      }
    }
  }
  const bool ok =
      states == 30 && worst_norm <= 1e-8 && bad_nodes == 0 && worst_ratio <= 1e-8;
  detail = "norm dev " + sci(worst_norm) + ", node mismatches " +
           std::to_string(bad_nodes) + "/" + std::to_string(states) +
           ", ground-state ratio spread " + sci(worst_ratio);
  return ok;
}

bool criterion7(std::string& detail) {
  // Finite-difference cross-validation at delta = 0.05 for l = 0 and l = 1;
  // the FD levels must match the analytic spectrum under exactly one index
  // convention within 1e-3, and the matching convention is recorded here.
  const auto t0 = std::chrono::steady_clock::now();
  const ModelParams p = preset(0.05);
  GridSpec grid;
  grid.r_min = 1e-6;
  grid.r_max = 30.0;
  grid.n_points = 32000;

  const auto closest = [&](Convention conv, int k, int l, double E) {
    double best = std::numeric_limits<double>::infinity();
    const StateIndex idx{k, l, conv};
    for (Branch br : {Branch::negative_N, Branch::positive_N})
      for (const EnergyLevel& lvl : solve_level(p, idx, br))
        best = std::min(best, std::fabs(lvl.E - E));
    return best;
  };

  bool ok = true;
  bool all_nu = true, all_tab = true;
  double worst = 0.0;
  const OracleResult r0 = self_consistent_solve(p, 0, 0, -0.65, grid);
  const OracleResult r1 = self_consistent_solve(p, 1, 0, 0.05, grid);
  for (const OracleResult* r : {&r0, &r1}) {
    if (!r->converged || r->node_count != 0) {
      ok = false;
      continue;
    }
    const int l = (r == &r0) ? 0 : 1;
    const double d_nu = closest(Convention::nu, 0, l, r->E);
    const double d_tab = closest(Convention::paper_table, 0, l, r->E);
    worst = std::max(worst, std::min(d_nu, d_tab));
    if (d_nu > 1e-3) all_nu = false;
    if (d_tab > 1e-3) all_tab = false;
  }
  ok = ok && (all_nu != all_tab) && worst <= 1e-3;
  const auto t1 = std::chrono::steady_clock::now();
  const double sec = std::chrono::duration<double>(t1 - t0).count();
  ok = ok && sec < 30.0;
  const char* verdict = (all_nu == all_tab) ? "no unique convention"
                        : all_nu            ? "nu (q = n_r)"
                                            : "paper_table (q = n)";
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "matched convention: %s, max |dE| %s (grid-limited), %.1f s",
                verdict, sci(worst).c_str(), sec);
  detail = buf;
  return ok;
}

bool criterion8(std::string& detail) {
  // Substitution error: below 1e-2 (and of order 1e-3) at delta = 0.05,
  // strictly decreasing toward smaller delta.
  const auto max_err = [](double delta) {
    const ModelParams p = preset(delta);
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double r = 0.1 * std::pow(200.0, i / 400.0);
      worst = std::max(worst, std::fabs(approx_error(p, r)));
    }
    return worst;
  };
  const double e05 = max_err(0.05), e10 = max_err(0.10), e15 = max_err(0.15);
  const bool ok = e05 < 1e-2 && e05 >= 1e-3 && e15 > e10 && e10 > e05;
  detail = "max |dV| " + sci(e15) + " -> " + sci(e10) + " -> " + sci(e05) +
           " for delta 0.15 -> 0.10 -> 0.05";
  return ok;
}

bool criterion9(std::string& detail) {
  // Trends: E nondecreasing in delta per table state; E increasing in n_r at
  // fixed l for delta in {0.05, 0.15}.
  int delta_violations = 0;
  for (int si = 0; si < 8; ++si) {
    double prev = -2.0;
    for (int di = 0; di < 4; ++di) {
      const EnergyLevel lvl =
          solve_table_level(preset(kDeltas[di]), table_state(si));
      if (!lvl.exists) continue;
      if (lvl.E < prev) ++delta_violations;
      prev = lvl.E;
    }
  }
  int nr_violations = 0;
  for (double delta : {0.05, 0.15}) {
    const ModelParams p = preset(delta);
    for (int l = 0; l <= 3; ++l) {
      double prev = -2.0;
      bool have_prev = false;
      for (int n_r = 0; n_r <= 5; ++n_r) {
        const EnergyLevel lvl =
            solve_table_level(p, StateIndex{n_r, l, Convention::paper_table});
        if (!lvl.exists) continue;
        if (have_prev && lvl.E <= prev) ++nr_violations;
        prev = lvl.E;
        have_prev = true;
      }
    }
  }
  const bool ok = delta_violations == 0 && nr_violations == 0;
  detail = std::to_string(delta_violations) + " delta-trend and " +
           std::to_string(nr_violations) + " n_r-trend violations";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1-9>\n");
    return 2;
  }
  const int n = std::atoi(argv[1]);
  bool ok = false;
  std::string detail;
  switch (n) {
    case 1: ok = criterion1(detail); break;
    case 2: ok = criterion2(detail); break;
    case 3: ok = criterion3(detail); break;
    case 4: ok = criterion4(detail); break;
    case 5: ok = criterion5(detail); break;
    case 6: ok = criterion6(detail); break;
    case 7: ok = criterion7(detail); break;
    case 8: ok = criterion8(detail); break;
    case 9: ok = criterion9(detail); break;
    default:
      std::fprintf(stderr, "usage: acceptance <criterion 1-9>\n");
      return 2;
  }
  std::printf("criterion %d: %s -- %s\n", n, ok ? "PASS" : "FAIL",
              detail.c_str());
  return ok ? 0 : 1;
}
