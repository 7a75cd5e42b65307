// Analytic radial eigenfunctions: evaluation, closed-form normalization,
// and node counting.
//
// chi_{n_r}(s) = C s^epsilon (1-s)^kappa
//                * [Gamma(n_r + 2 epsilon + 1) / (n_r! Gamma(2 epsilon + 1))]
//                * 2F1(-n_r, 2 epsilon + 2 kappa + n_r; 1 + 2 epsilon; s),
// s = e^{-2 delta r}. Normalization is 1 = (1/(2 delta)) Int_0^1 |chi|^2 / s ds,
// i.e. Int_0^inf |chi(r)|^2 dr = 1.
#pragma once

#include "kgbound/model.hpp"
#include "kgbound/specfun.hpp"
#include "kgbound/spectrum.hpp"

namespace kgbound {

struct RadialWavefunction {
  double epsilon = 0.0;  // decay exponent at the solved energy
  double kappa = 0.0;    // 1/2 + w
  double C = 0.0;        // normalization constant (> 0)
  double delta = 0.0;    // screening (for the s <-> r map)
  int n_r = 0;           // polynomial degree = radial node count
};

// Computes epsilon, kappa at level.E and the closed-form normalization
// constant. The polynomial degree is always the physical node count n_r,
// independent of which index convention located the energy. Throws
// std::invalid_argument when !level.exists, std::domain_error when the
// exponents are not in the normalizable range (epsilon > 0, kappa > 1/2).
RadialWavefunction build_wavefunction(const ModelParams& p,
                                      const EnergyLevel& level,
                                      const StateIndex& state);

// chi as a function of s in (0, 1]; returns 0 at s = 1 (r = 0).
double eval_chi_s(const RadialWavefunction& wf, double s);

// chi(r) for r >= 0; r = 0 maps to s = 1 where chi vanishes.
double eval_chi(const RadialWavefunction& wf, double r);

// (1/(2 delta)) Int_0^1 |chi(s)|^2 / s ds by adaptive quadrature; equals 1
// within quadrature error for a correctly built wavefunction. Quadrature
// non-convergence is reported by returning the (flagged) estimate from
// integrate(); callers compare against 1 with their own tolerance.
IntegrationResult normalization_check(const RadialWavefunction& wf,
                                      const QuadratureSpec& spec = {});

// Counts strict sign changes of chi over (r_lo, r_hi) on a uniform scan with
// the given sample count, ignoring samples below an absolute noise floor.
int count_nodes(const RadialWavefunction& wf, double r_lo, double r_hi,
                int samples);

}  // namespace kgbound
