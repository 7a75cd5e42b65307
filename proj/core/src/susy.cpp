#include "kgbound/susy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "root_scan.hpp"

namespace kgbound {

namespace {

// F for a given chain member G at energy E (alpha^2, beta^2 recomputed at E;
// the shape-invariance "constants" are E-dependent through the coupling).
double F_of_G(const ModelParams& p, double E, double G) {
  if (!(G > 0.0)) throw std::domain_error("susy: requires G > 0");
  const CoefficientSet c = derive_coefficients(p);
  const double two_d2 = 2.0 * p.delta * p.delta;
  const double alpha_sq = c.V014 * (E + p.M) / two_d2;
  const double beta_sq = c.V023 * (E + p.M) / two_d2;
  return -0.5 * G + two_d2 * (alpha_sq + beta_sq) / G;
}

}  // namespace

Superpotential build_superpotential(const ModelParams& p, int l, double E) {
  if (!(E + p.M > 0.0))
    throw std::domain_error("build_superpotential: requires E + M > 0");
  const DimensionlessParams d = dimensionless(p, E, l);
  if (!d.valid)
    throw std::domain_error(
        "build_superpotential: discriminant < 0 or |E| >= M");
  Superpotential sp;
  sp.delta = p.delta;
  sp.E0 = E;
  sp.G = p.delta * (1.0 + 2.0 * d.w);  // positive root selection
  sp.F = F_of_G(p, E, sp.G);
  return sp;
}

double eval_W(const Superpotential& sp, double r) {
  if (!(r > 0.0)) throw std::domain_error("eval_W: requires r > 0");
  const double s = std::exp(-2.0 * sp.delta * r);
  return sp.F - sp.G * s / (1.0 - s);
}

double eval_W_prime(const Superpotential& sp, double r) {
  if (!(r > 0.0)) throw std::domain_error("eval_W_prime: requires r > 0");
  // ds/dr = -2 delta s, so d/dr [s/(1-s)] = -2 delta s/(1-s)^2 and the
  // derivative of W = F - G s/(1-s) is positive:
  const double s = std::exp(-2.0 * sp.delta * r);
  const double one_ms = 1.0 - s;
  return 2.0 * sp.delta * sp.G * s / (one_ms * one_ms);
}

double riccati_check(const Superpotential& sp, const ModelParams& p, int l,
                     const std::vector<double>& r_grid) {
  const double shift = sp.E0 * sp.E0 - p.M * p.M;
  double worst = 0.0;
  for (double r : r_grid) {
    const double w = eval_W(sp, r);
    const double left = w * w - eval_W_prime(sp, r);
    const double right = eval_effective_potential(p, sp.E0, l, r) - shift;
    const double scale = std::abs(right) + std::abs(shift);
    const double dev =
        std::abs(left - right) / (scale > 0.0 ? scale : 1.0);
    worst = std::max(worst, dev);
  }
  return worst;
}

double partner_potential(const ModelParams& p, int l, double E, double G,
                         bool plus, double r) {
  (void)l;  // the chain member G already carries the angular dependence
  Superpotential sp;
  sp.delta = p.delta;
  sp.E0 = E;
  sp.G = G;
  sp.F = F_of_G(p, E, G);
  const double w = eval_W(sp, r);
  const double wp = eval_W_prime(sp, r);
  return plus ? w * w + wp : w * w - wp;
}

double shape_invariance_remainder(const ModelParams& p, int l, double E, int i,
                                  double r) {
  if (i < 1)
    throw std::domain_error("shape_invariance_remainder: requires i >= 1");
  const DimensionlessParams d = dimensionless(p, E, l);
  if (!d.valid)
    throw std::domain_error("shape_invariance_remainder: discriminant < 0");
  const double G = p.delta * (1.0 + 2.0 * d.w);
  const double G_prev = G + 2.0 * (i - 1.0) * p.delta;
  const double G_cur = G + 2.0 * i * p.delta;
  return partner_potential(p, l, E, G_prev, true, r) -
         partner_potential(p, l, E, G_cur, false, r);
}

double susy_squared_rhs(double delta, int l, int q, double alpha_sq,
                        double beta_sq) {
  const double L = l * (l + 1.0);
  const double radicand = 0.25 + alpha_sq + L;
  if (radicand < 0.0)
    throw std::domain_error("susy_squared_rhs: discriminant < 0");
  const double w = std::sqrt(radicand);
  const double G_q = delta * (1.0 + 2.0 * w) + 2.0 * q * delta;
  const double F_q = -0.5 * G_q + 2.0 * delta * delta * (alpha_sq + beta_sq) / G_q;
  return F_q * F_q;
}

std::vector<EnergyLevel> energy_from_shape_invariance(const ModelParams& p,
                                                      const StateIndex& state,
                                                      Branch branch) {
  validate(p);
  if (state.n_r < 0 || state.l < 0)
    throw std::invalid_argument("energy_from_shape_invariance: requires n_r, l >= 0");
  const int q = state.q();
  // Unsquared form of M^2 - E^2 = F_q^2: the physical sign of F_q picks the
  // branch. 2 delta epsilon = -F_q (F_q < 0) on negative_N, = +F_q on
  // positive_N; both as residuals on epsilon's scale.
  const auto fres = [&](double E) {
    detail::ScanPoint pt;
    const DimensionlessParams d = dimensionless(p, E, state.l);
    if (!d.valid) return pt;
    const double G_q = p.delta * (1.0 + 2.0 * d.w) + 2.0 * q * p.delta;
    const double F_q = F_of_G(p, E, G_q);
    if (branch == Branch::negative_N) {
      pt.f = d.epsilon + F_q / (2.0 * p.delta);
      pt.usable = F_q < 0.0;
    } else {
      pt.f = d.epsilon - F_q / (2.0 * p.delta);
      pt.usable = F_q > 0.0;
    }
    return pt;
  };
  std::vector<EnergyLevel> out;
  for (double root : detail::scan_roots(p.M, fres)) {
    EnergyLevel lvl;
    lvl.E = root;
    lvl.residual = std::abs(fres(root).f);
    lvl.q_used = q;
    lvl.branch = root > 0.0 ? 1 : (root < 0.0 ? -1 : 0);
    lvl.exists = true;
    out.push_back(lvl);
  }
  std::sort(out.begin(), out.end(),
            [](const EnergyLevel& a, const EnergyLevel& b) { return a.E < b.E; });
  return out;
}

double susy_ground_state(const Superpotential& sp, double r) {
  if (r < 0.0) throw std::domain_error("susy_ground_state: requires r >= 0");
  if (r == 0.0) return 0.0;  // (1-s)^{G/2delta} -> 0 with G > 0
  const double s = std::exp(-2.0 * sp.delta * r);
  return std::exp(sp.F * r) * std::pow(1.0 - s, sp.G / (2.0 * sp.delta));
}

}  // namespace kgbound
