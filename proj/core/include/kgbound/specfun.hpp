// Self-contained special functions: log-gamma, terminating Gauss
// hypergeometric sums, Jacobi polynomials, and adaptive quadrature with
// endpoint-singularity handling. Everything here is pure and thread-safe.
#pragma once

#include <functional>

namespace kgbound {

// Natural log of Gamma(x) for x > 0, relative error <= 1e-12 on [1e-3, 1e3].
// Throws std::domain_error for x <= 0.
double ln_gamma(double x);

// Terminating series 2F1(-n, bb; cc; s) = sum_{k=0}^{n} (-n)_k (bb)_k / (cc)_k s^k / k!.
// The first parameter is a nonpositive integer, so the sum is a degree-n
// polynomial in s: evaluated exactly, no transformation formulas.
// Throws std::domain_error when cc is zero or a negative integer.
double hyp2f1_terminating(int n, double bb, double cc, double s);

// Jacobi polynomial P_n^{(a,b)}(x) by the standard three-term recurrence,
// valid for a, b > -1. Satisfies
//   P_n^{(a,b)}(1-2s) = Gamma(n+a+1)/(n! Gamma(a+1)) * 2F1(-n, n+a+b+1; 1+a; s).
double jacobi_p(int n, double a, double b, double x);

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 60;  // refinement cap (adaptive splits / endpoint levels)
};

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;   // estimated absolute error
  bool converged = false;
};

// Adaptive Gauss-Kronrod (7,15) integration of f over (lo, hi).
// Integrable endpoint singularities x^p with p > -1 are supported at either
// end: when plain adaptive subdivision stalls, the integral is re-assembled
// from geometrically shrinking panels toward each endpoint and the panel
// partial sums are accelerated with the Wynn epsilon algorithm. The nodes
// never touch lo or hi, so the integrand is not evaluated at the endpoints.
IntegrationResult integrate(const std::function<double(double)>& f, double lo,
                            double hi, const QuadratureSpec& spec = {});

}  // namespace kgbound
