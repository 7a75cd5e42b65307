#include "kgbound/model.hpp"

#include <cmath>
#include <stdexcept>

namespace kgbound {

void validate(const ModelParams& p) {
  if (!(p.delta > 0.0))
    throw std::invalid_argument("ModelParams: delta must be > 0");
  if (!(p.M > 0.0)) throw std::invalid_argument("ModelParams: M must be > 0");
}

ModelParams reference_params(double delta) {
  ModelParams p;
  p.M = 1.0;
  p.delta = delta;
  p.V0 = 1.0;
  p.V0p = 0.1;
  p.eta = 0.75;
  p.A = 1.0 / delta;  // = 2b
  validate(p);
  return p;
}

CoefficientSet derive_coefficients(const ModelParams& p) {
  validate(p);
  CoefficientSet c;
  const double d2 = p.delta * p.delta;
  c.V01 = 2.0 * d2 * p.eta * (p.eta - 1.0) / p.M;
  c.V02 = 2.0 * d2 * p.A / p.M;
  c.V03 = 2.0 * p.delta * p.V0;
  c.V04 = -4.0 * d2 * p.V0p;
  c.V014 = c.V01 + c.V04;
  c.V023 = c.V02 + c.V03;
  return c;
}

double eval_exact_potential(const ModelParams& p, double r) {
  validate(p);
  if (!(r > 0.0))
    throw std::domain_error("eval_exact_potential: requires r > 0");
  // Manning-Rosen part, screening 1/b: with 1/b = 2 delta, e^{-r/b} = s and
  // 1/(2Mb^2) = 2 delta^2/M:
  //   (2 delta^2/M) [eta(eta-1) s^2/(1-s)^2 - A s/(1-s)].
  const double s = std::exp(-2.0 * p.delta * r);
  const double one_ms = 1.0 - s;
  const double mr =
      (2.0 * p.delta * p.delta / p.M) *
      (p.eta * (p.eta - 1.0) * s * s / (one_ms * one_ms) - p.A * s / one_ms);
  // Class-of-Yukawa part: -V0 e^{-delta r}/r - V0' e^{-2 delta r}/r^2.
  const double cy = -p.V0 * std::exp(-p.delta * r) / r - p.V0p * s / (r * r);
  return mr + cy;
}

double eval_approx_potential(const ModelParams& p, double r) {
  if (!(r > 0.0))
    throw std::domain_error("eval_approx_potential: requires r > 0");
  const CoefficientSet c = derive_coefficients(p);
  const double s = std::exp(-2.0 * p.delta * r);
  const double one_ms = 1.0 - s;
  return c.V014 * s * s / (one_ms * one_ms) - c.V023 * s / one_ms;
}

double eval_effective_potential(const ModelParams& p, double E, int l, double r) {
  if (!(r > 0.0))
    throw std::domain_error("eval_effective_potential: requires r > 0");
  if (!(E + p.M > 0.0))
    throw std::domain_error("eval_effective_potential: requires E + M > 0");
  if (l < 0) throw std::domain_error("eval_effective_potential: requires l >= 0");
  const double s = std::exp(-2.0 * p.delta * r);
  const double one_ms = 1.0 - s;
  // screened centrifugal barrier: l(l+1)/r^2 -> 4 l(l+1) delta^2 s/(1-s)^2
  const double centrifugal =
      4.0 * l * (l + 1.0) * p.delta * p.delta * s / (one_ms * one_ms);
  return 2.0 * (E + p.M) * eval_approx_potential(p, r) + centrifugal;
}

double approx_error(const ModelParams& p, double r) {
  return eval_exact_potential(p, r) - eval_approx_potential(p, r);
}

}  // namespace kgbound
