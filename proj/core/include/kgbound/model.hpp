// Physical inputs and potential evaluation for the combined Manning-Rosen +
// class-of-Yukawa model in natural units (hbar = c = 1).
//
// Exact potential:
//   V(r) = V_MR(r) + V_CY(r)
//   V_MR(r) = (1/(2 M b^2)) [ eta(eta-1) e^{-2r/b}/(1-e^{-r/b})^2
//                             - A e^{-r/b}/(1-e^{-r/b}) ]
//   V_CY(r) = -V0 e^{-delta r}/r - V0' e^{-2 delta r}/r^2
// with the Manning-Rosen range b tied to the screening by 1/b = 2 delta
// (the rewrite below needs that tie, so b is derived, not free).
//
// Screened rewrite: with s = e^{-2 delta r} and the substitutions
//   1/r   ~ 2 delta e^{-delta r} / (1 - e^{-2 delta r})
//   1/r^2 ~ 4 delta^2 e^{-2 delta r} / (1 - e^{-2 delta r})^2
// (the 1/r^2 form is exactly the square of the 1/r form) the potential becomes
//   V_approx(r) = V014 s^2/(1-s)^2 - V023 s/(1-s),
//   V01 = 2 delta^2 eta(eta-1)/M,  V02 = 2 delta^2 A/M,
//   V03 = 2 delta V0,              V04 = -4 delta^2 V0',
//   V014 = V01 + V04,              V023 = V02 + V03.
// The Manning-Rosen part of the rewrite is an identity; only the V_CY part is
// approximate, so approx_error() isolates the substitution error.
#pragma once

namespace kgbound {

struct ModelParams {
  double M = 1.0;       // rest mass
  double delta = 0.05;  // screening parameter (inverse length), > 0
  double V0 = 0.0;      // Yukawa strength
  double V0p = 0.0;     // inverse-quadratic Yukawa strength (V0')
  double eta = 1.0;     // Manning-Rosen dimensionless eta
  double A = 0.0;       // Manning-Rosen dimensionless A

  // Manning-Rosen range, derived: the rewrite assumes 1/b = 2 delta exactly.
  double b() const { return 1.0 / (2.0 * delta); }
};

// Throws std::invalid_argument unless delta > 0 and M > 0.
void validate(const ModelParams& p);

// Reference parameter set used throughout the published table and figures:
// V0 = 1, V0' = 0.1, M = 1, eta = 0.75, A = 1/delta (= 2b).
ModelParams reference_params(double delta);

struct CoefficientSet {
  double V01 = 0.0;
  double V02 = 0.0;
  double V03 = 0.0;
  double V04 = 0.0;
  double V014 = 0.0;  // V01 + V04
  double V023 = 0.0;  // V02 + V03
};

CoefficientSet derive_coefficients(const ModelParams& p);

// Eq.-by-term evaluation of the unapproximated potential. Throws
// std::domain_error for r <= 0 (Coulombic singularity).
double eval_exact_potential(const ModelParams& p, double r);

// V014 e^{-4 delta r}/(1-e^{-2 delta r})^2 - V023 e^{-2 delta r}/(1-e^{-2 delta r}).
double eval_approx_potential(const ModelParams& p, double r);

// 2(E+M) V_approx(r) + 4 l(l+1) delta^2 e^{-2 delta r}/(1-e^{-2 delta r})^2.
// This is the potential term of the screened radial problem in Schroedinger
// form; E enters through the energy-dependent coupling 2(E+M).
double eval_effective_potential(const ModelParams& p, double E, int l, double r);

// eval_exact_potential - eval_approx_potential (no centrifugal term).
double approx_error(const ModelParams& p, double r);

}  // namespace kgbound
