#include "kgbound/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "root_scan.hpp"

namespace kgbound {

DimensionlessParams dimensionless(const ModelParams& p, double E, int l) {
  validate(p);
  if (l < 0) throw std::domain_error("dimensionless: requires l >= 0");
  DimensionlessParams d;
  const CoefficientSet c = derive_coefficients(p);
  const double two_d2 = 2.0 * p.delta * p.delta;
  d.alpha_sq = c.V014 * (E + p.M) / two_d2;
  d.beta_sq = c.V023 * (E + p.M) / two_d2;
  const double radicand = 0.25 + d.alpha_sq + l * (l + 1.0);
  const bool e_ok = std::abs(E) < p.M;
  if (e_ok) d.epsilon = std::sqrt((p.M - E) * (p.M + E)) / (2.0 * p.delta);
  if (radicand >= 0.0 && e_ok) {
    d.w = std::sqrt(radicand);
    d.kappa = 0.5 + d.w;
    d.valid = true;
  }
  return d;
}

ResidualValue residual(const ModelParams& p, const StateIndex& state, double E,
                       Branch branch) {
  if (!(E + p.M > 0.0) || !(std::abs(E) < p.M))
    throw std::domain_error("residual: requires -M < E < M");
  ResidualValue r;
  const DimensionlessParams d = dimensionless(p, E, state.l);
  if (!d.valid) return r;  // discriminant < 0: no real w at this E
  r.valid = true;
  const int q = state.q();
  const double L = state.l * (state.l + 1.0);
  r.N = d.beta_sq - L - 0.5 - q * (q + 1.0) - (2.0 * q + 1.0) * d.w;
  r.D = q + 0.5 + d.w;
  // negative_N: f = eps + N/(2D), roots need N < 0.
  // positive_N: f = eps - N/(2D), roots need N > 0.
  if (branch == Branch::negative_N) {
    r.f = d.epsilon + r.N / (2.0 * r.D);
    r.physical = r.N < 0.0;
  } else {
    r.f = d.epsilon - r.N / (2.0 * r.D);
    r.physical = r.N > 0.0;
  }
  return r;
}

std::vector<EnergyLevel> solve_level(const ModelParams& p, const StateIndex& state,
                                     Branch branch) {
  validate(p);
  if (state.n_r < 0 || state.l < 0)
    throw std::invalid_argument("solve_level: requires n_r, l >= 0");
  const auto fres = [&](double E) {
    const ResidualValue rv = residual(p, state, E, branch);
    return detail::ScanPoint{rv.f, rv.valid && rv.physical};
  };
  std::vector<EnergyLevel> out;
  for (double root : detail::scan_roots(p.M, fres)) {
    EnergyLevel lvl;
    lvl.E = root;
    lvl.residual = std::abs(residual(p, state, root, branch).f);
    lvl.q_used = state.q();
    lvl.branch = root > 0.0 ? 1 : (root < 0.0 ? -1 : 0);
    lvl.exists = true;
    out.push_back(lvl);
  }
  std::sort(out.begin(), out.end(),
            [](const EnergyLevel& a, const EnergyLevel& b) { return a.E < b.E; });
  return out;
}

EnergyLevel solve_table_level(const ModelParams& p, const StateIndex& state) {
  const std::vector<EnergyLevel> roots = solve_level(p, state, Branch::negative_N);
  for (const EnergyLevel& lvl : roots) {
    if (lvl.E < 0.0) return lvl;  // ascending: first negative root is lowest
  }
  EnergyLevel none;
  none.q_used = state.q();
  return none;
}

double nu_squared_rhs(double delta, int l, int q, double alpha_sq, double beta_sq) {
  const double L = l * (l + 1.0);
  const double radicand = 0.25 + alpha_sq + L;
  if (radicand < 0.0)
    throw std::domain_error("nu_squared_rhs: discriminant < 0");
  const double w = std::sqrt(radicand);
  const double N = beta_sq - L - 0.5 - q * (q + 1.0) - (2.0 * q + 1.0) * w;
  const double D = q + 0.5 + w;
  const double ratio = N / (2.0 * D);
  return 4.0 * delta * delta * ratio * ratio;
}

SpecialCaseParams special_case_params(const ModelParams& p, double E) {
  SpecialCaseParams sc;
  sc.gamma_sq = p.A * (E + p.M) / p.M;
  sc.xi_sq = p.V0 * (E + p.M) / p.delta;
  sc.zeta_sq = -2.0 * p.V0p * (E + p.M);
  return sc;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::vector<EnergyLevel> solve_special_case(SpecialCase c, const ModelParams& p,
                                            const StateIndex& state, Branch branch) {
  switch (c) {
    case SpecialCase::manning_rosen:
      require(p.V0 == 0.0 && p.V0p == 0.0,
              "solve_special_case: MANNING_ROSEN forces V0 = V0' = 0");
      break;
    case SpecialCase::class_yukawa:
      require(p.eta == 1.0 && p.A == 0.0,
              "solve_special_case: CLASS_YUKAWA forces eta = 1, A = 0");
      break;
    case SpecialCase::hulthen:
      require(p.eta == 1.0 && p.V0 == 0.0 && p.V0p == 0.0,
              "solve_special_case: HULTHEN forces eta = 1, V0 = V0' = 0");
      break;
    case SpecialCase::yukawa:
      require(p.eta == 1.0 && p.A == 0.0 && p.V0p == 0.0,
              "solve_special_case: YUKAWA forces eta = 1, A = 0, V0' = 0");
      break;
    case SpecialCase::inv_quad_yukawa:
      require(p.eta == 1.0 && p.A == 0.0 && p.V0 == 0.0,
              "solve_special_case: INV_QUAD_YUKAWA forces eta = 1, A = 0, V0 = 0");
      break;
    case SpecialCase::s_wave:
      require(state.l == 0, "solve_special_case: S_WAVE forces l = 0");
      break;
  }
  return solve_level(p, state, branch);
}

double coulomb_energy(double V0, int n_r, int l, double M) {
  if (n_r < 0 || l < 0)
    throw std::domain_error("coulomb_energy: requires n_r, l >= 0");
  const double n_tot = n_r + l + 1.0;
  const double n2 = n_tot * n_tot;
  return M * (n2 - V0 * V0) / (n2 + V0 * V0);
}

}  // namespace kgbound
