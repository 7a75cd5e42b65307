// Supersymmetric cross-check: superpotential, Riccati identity, partner
// potentials, and the shape-invariance energy chain. Everything is coded
// independently of the spectrum module's N/D form so agreement between the
// two is a real consistency test, not a tautology.
//
// Ansatz: W(r) = F - G s/(1-s), s = e^{-2 delta r}, with
//   G = delta (1 + 2w)                 (positive root selection)
//   F = -G/2 + 2 delta^2 (alpha^2 + beta^2) / G.
// At a physical ground state F < 0 and G > 0, and -F/(2 delta) = epsilon(E).
// The shape-invariance chain shifts G_q = G + 2 q delta and solves
//   M^2 - E^2 = F_q^2,  F_q = -G_q/2 + 2 delta^2 (alpha^2 + beta^2)/G_q.
#pragma once

#include <vector>

#include "kgbound/model.hpp"
#include "kgbound/spectrum.hpp"

namespace kgbound {

struct Superpotential {
  double F = 0.0;      // asymptotic value W(r -> inf); negative when physical
  double G = 0.0;      // strength of the screened term; positive
  double delta = 0.0;
  double E0 = 0.0;     // energy at which F, G were computed
};

// F, G at the given energy. Throws std::domain_error when the discriminant
// 1/4 + alpha^2 + l(l+1) is negative or E + M <= 0.
Superpotential build_superpotential(const ModelParams& p, int l, double E);

// W(r) = F - G e^{-2 delta r} / (1 - e^{-2 delta r}); r > 0.
double eval_W(const Superpotential& sp, double r);

// Analytic derivative. With s = e^{-2 delta r}, ds/dr = -2 delta s, so
//   d/dr [s/(1-s)] = -2 delta s/(1-s)^2
//   W'(r) = +2 delta G s/(1-s)^2.
double eval_W_prime(const Superpotential& sp, double r);

// Max over the grid of |W^2 - W' - [V_eff(r; E0, l) - (E0^2 - M^2)]| divided
// by the local scale |V_eff| + |E0^2 - M^2|. At a true nodeless ground state
// (q = 0 under the n_r convention) this vanishes to rounding.
double riccati_check(const Superpotential& sp, const ModelParams& p, int l,
                     const std::vector<double>& r_grid);

// Partner potentials V+/- (G; r) = W_G^2 +/- W_G', where W_G uses the given
// member G of the shape-invariance chain and F recomputed for that G.
double partner_potential(const ModelParams& p, int l, double E, double G,
                         bool plus, double r);

// R(G_i) = V+(G_{i-1}; r) - V-(G_i; r) with G_i = G + 2 i delta; independent
// of r, which is the shape-invariance property itself.
double shape_invariance_remainder(const ModelParams& p, int l, double E, int i,
                                  double r);

// Independently coded squared energy expression F_q^2 on raw tuples; must
// agree with nu_squared_rhs to rounding wherever both are defined.
double susy_squared_rhs(double delta, int l, int q, double alpha_sq, double beta_sq);

// Solves M^2 - E^2 = F_q^2 with the same scan/bisection contract (and branch
// semantics) as spectrum::solve_level; roots must match solve_level's.
std::vector<EnergyLevel> energy_from_shape_invariance(const ModelParams& p,
                                                      const StateIndex& state,
                                                      Branch branch = Branch::negative_N);

// Unnormalized nodeless ground state e^{F r} (1 - e^{-2 delta r})^{G/(2 delta)}.
// Vanishes at both ends when F < 0 < G; at a solved ground state it is
// pointwise proportional to the analytic n_r = 0 eigenfunction, because
// F = -2 delta epsilon there and G/(2 delta) = kappa.
double susy_ground_state(const Superpotential& sp, double r);

}  // namespace kgbound
