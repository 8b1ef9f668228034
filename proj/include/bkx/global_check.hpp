#pragma once

#include <vector>

#include "bkx/schwartz.hpp"

namespace bkx {

// Numeric helpers used by the desk-scale global summation check (rank one
// over the rationals).  All of these are plain double precision.

// Hurwitz zeta for real w != 1, a > 0, by Euler-Maclaurin summation.
double hurwitz_zeta(double w, double a);
// Riemann zeta via the same routine.
double riemann_zeta(double w);
// Dirichlet beta L(w, chi_-4) = sum (-1)^k (2k+1)^-w.
double dirichlet_beta(double w);
// Upper incomplete gamma Gamma(a, x) for x > 0 (continued fraction).
double upper_incomplete_gamma(double a, double x);
// The square-lattice Epstein zeta Z(w) = sum'_{(m,k) != 0} (m^2+k^2)^-w,
// analytically continued by the theta split; valid for w != 0, 1.
double epstein_z_theta(double w);

// Value of the degenerate Eisenstein series at the identity against the
// section attached to the Gaussian of scale lambda at rank one:
//   E(s) = 1/2 * lambda^(-(s+1)/2) * Gamma_R(s+1) * Z((s+1)/2),
// with Gamma_R(s) = pi^(-s/2) Gamma(s/2).  epstein_by_product switches
// Z between the theta-split route and the 4*zeta*beta factorization.
double eisenstein_value(double s, double lambda, bool epstein_by_product);

// Residue at s = 1 of eisenstein_value by symmetric Richardson
// extrapolation of (s-1)E(s) with steps 1e-3 and 1e-4.
double eisenstein_residue(double lambda, bool epstein_by_product);

struct GlobalCheckReport {
  double lambda = 1.0;
  int radius = 10;
  double tol = 1e-8;
  double sum_phi = 0.0;        // sum of Phi over nonzero lattice points
  double sum_fphi = 0.0;       // same for the Fourier transform of Phi
  double res_phi = 0.0;        // residue term of E(Phi), theta route
  double res_fphi = 0.0;       // residue term of E(F Phi), theta route
  double res_phi_alt = 0.0;    // product-route cross-checks
  double res_fphi_alt = 0.0;
  double lhs = 0.0;            // sum_phi + res_fphi
  double rhs = 0.0;            // sum_fphi + res_phi
  double discrepancy = 0.0;    // |lhs - rhs|
  double route_gap = 0.0;      // max residue disagreement between routes
  int finite_points_checked = 0;
  bool pass = false;
};

// Desk-scale check of the summation formula at rank one over Q with the
// unramified global datum: Phi is the basic function at every finite place
// and exp(-pi*lambda*|x|^2) at the real place.  Every lattice point that
// enters the sum has its finite-place factors literally evaluated through
// the coefficient functions at p in {2,3,5}; a handful of non-integral
// rational points are checked to evaluate to 0.  Throws OracleDisagreement
// when the two residue routes differ by more than 1e-8.
GlobalCheckReport verify_global_rank_one(double lambda, int radius, double tol);

}  // namespace bkx
