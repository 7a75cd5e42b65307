#include "kgbound/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kgbound/specfun.hpp"

namespace kgbound {

RadialWavefunction build_wavefunction(const ModelParams& p,
                                      const EnergyLevel& level,
                                      const StateIndex& state) {
  validate(p);
  if (!level.exists)
    throw std::invalid_argument("build_wavefunction: level does not exist");
  if (state.n_r < 0)
    throw std::invalid_argument("build_wavefunction: requires n_r >= 0");
  const DimensionlessParams d = dimensionless(p, level.E, state.l);
  if (!d.valid || !(d.epsilon > 0.0) || !(d.kappa > 0.5))
    throw std::domain_error(
        "build_wavefunction: state is not a normalizable bound state");

  RadialWavefunction wf;
  wf.epsilon = d.epsilon;
  wf.kappa = d.kappa;
  wf.delta = p.delta;
  wf.n_r = state.n_r;

  // Closed-form normalization from the Jacobi orthogonality weight
  // (1-s)^{2kappa-1} s^{2eps-1} on (0,1) with the extra 1/(2 delta s) radial
  // Jacobian folded in.
  const double n = state.n_r;
  const double e2 = 2.0 * d.epsilon;
  const double k2 = 2.0 * d.kappa;
  const double ln_c2 = std::log(2.0 * p.delta) + ln_gamma(n + 1.0) +
                       std::log(n + d.kappa + d.epsilon) +
                       ln_gamma(n + e2 + k2) + ln_gamma(e2 + 1.0) -
                       std::log(n + d.kappa) - ln_gamma(n + e2 + 1.0) -
                       ln_gamma(e2) - ln_gamma(k2 + n);
  wf.C = std::exp(0.5 * ln_c2);
  return wf;
}

double eval_chi_s(const RadialWavefunction& wf, double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double e2 = 2.0 * wf.epsilon;
  const double k2 = 2.0 * wf.kappa;
  // Laguerre-style prefactor binom(n+2eps, n) written in log-gamma form.
  const double pre = std::exp(ln_gamma(wf.n_r + e2 + 1.0) -
                              ln_gamma(wf.n_r + 1.0) - ln_gamma(e2 + 1.0));
  const double hyp = hyp2f1_terminating(wf.n_r, e2 + k2 + wf.n_r, 1.0 + e2, s);
  return wf.C * std::pow(s, wf.epsilon) * std::pow(1.0 - s, wf.kappa) * pre *
         hyp;
}

double eval_chi(const RadialWavefunction& wf, double r) {
  if (r < 0.0) throw std::domain_error("eval_chi: requires r >= 0");
  if (r == 0.0) return 0.0;
  return eval_chi_s(wf, std::exp(-2.0 * wf.delta * r));
}

IntegrationResult normalization_check(const RadialWavefunction& wf,
                                      const QuadratureSpec& spec) {
  // r in (0,inf) maps to s in (0,1) with dr = -ds/(2 delta s).
  const auto integrand = [&wf](double s) {
    const double chi = eval_chi_s(wf, s);
    return chi * chi / s;
  };
  IntegrationResult res = integrate(integrand, 0.0, 1.0, spec);
  res.value /= 2.0 * wf.delta;
  res.error /= 2.0 * wf.delta;
  return res;
}

int count_nodes(const RadialWavefunction& wf, double r_lo, double r_hi,
                int samples) {
  if (!(r_lo > 0.0) || !(r_hi > r_lo) || samples < 2)
    throw std::invalid_argument("count_nodes: bad scan window");
  std::vector<double> vals(samples);
  double amax = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (samples - 1.0);
    vals[i] = eval_chi(wf, r);
    amax = std::max(amax, std::abs(vals[i]));
  }
  const double floor = 1e-12 * amax;
  int count = 0;
  int last_sign = 0;
  for (double v : vals) {
    if (std::abs(v) <= floor) continue;  // skip near-zero samples at a node
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++count;
    last_sign = sign;
  }
  return count;
}

}  // namespace kgbound
