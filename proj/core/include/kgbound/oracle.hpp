// Finite-difference ground truth for the screened radial equation, with
// self-consistent handling of the energy-dependent coupling.
//
// The radial problem in Schroedinger form is
//   [-d^2/dr^2 + U(r; E)] chi = lambda chi,   lambda = E^2 - M^2,
//   U(r; E) = 2(M+E) V_approx(r) + 4 l(l+1) delta^2 s/(1-s)^2,
// discretized by second-order central differences on a uniform grid with
// Dirichlet ends. Because U depends on E, a bound state is a fixed point of
//   E = sign * sqrt(M^2 + lambda_k(E)),
// where lambda_k is the k-th eigenvalue (k = target node count).
//
// The damped iteration E <- E + 0.5 (E_raw - E) is attempted first, but at
// every genuine fixed point of this model |d E_raw / dE| > 1 (the well depth
// scales with M+E, making the map repelling), so when the damped phase fails
// to land on a genuine bound state the solver falls back to bracketed
// bisection on g(E) = lambda_k(E) - (E^2 - M^2) over the half-window selected
// by sign(E_guess). The damped phase typically walks to the spurious
// zero-well box state at |E| slightly above M; that outcome is detected and
// never reported as converged.
#pragma once

#include <vector>

#include "kgbound/model.hpp"

namespace kgbound {

struct GridSpec {
  double r_min = 1e-6;
  double r_max = 30.0;
  int n_points = 4000;  // interior points; >= 100

  double spacing() const { return (r_max - r_min) / (n_points + 1); }
};

// r_max = max(30, 12/delta): at reference parameters the shallowest table
// states decay on the scale 1/(2 delta epsilon) with epsilon ~ 0.5.
GridSpec default_grid(double delta);

struct TridiagEigen {
  double value = 0.0;
  std::vector<double> vector;  // normalized (max-norm 1)
  bool ok = false;             // inverse iteration converged
};

// k-th smallest eigenvalue of the symmetric tridiagonal matrix with the given
// diagonal and off-diagonal, via Sturm-sequence bisection to 1e-12 relative,
// plus its eigenvector via shifted inverse iteration.
TridiagEigen eigen_tridiag(const std::vector<double>& diag,
                           const std::vector<double>& offdiag, int k);

// Eigenvalue-only variant (no inverse iteration); used inside scans.
double tridiag_eigenvalue(const std::vector<double>& diag,
                          const std::vector<double>& offdiag, int k);

struct OracleResult {
  double E = 0.0;
  int iterations = 0;       // damped steps + fallback eigenvalue evaluations
  int node_count = -1;      // interior sign changes of the eigenvector
  bool converged = false;   // genuine bound state found (|E| < M, lambda < 0)
  double lambda = 0.0;      // eigenvalue at the final E
  bool used_fallback = false;
  bool damped_contraction = false;  // |dE| decreased monotonically after step 5
  bool unphysical = false;  // no bound state at this node count (lambda >= 0
                            // across the window, or lambda <= -M^2 encountered)
};

OracleResult self_consistent_solve(const ModelParams& p, int l, int k,
                                   double E_guess, const GridSpec& grid);

// Uses default_grid(p.delta).
OracleResult self_consistent_solve(const ModelParams& p, int l, int k,
                                   double E_guess);

}  // namespace kgbound
