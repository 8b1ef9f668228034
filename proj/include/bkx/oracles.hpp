#pragma once

#include <complex>

#include "bkx/schwartz.hpp"

namespace bkx {

// Truncated shell-by-shell evaluation of the rank-one intertwining integral
// against its closed form.  The integral over the big cell splits into
// valuation shells |x| = q^k; the shell with k >= 1 has volume q^k(1-1/q)
// and integrand value (z q^-s)^k / q^k... combined: (1-1/q)(z q^-s)^k, and
// the shell |x| <= 1 contributes 1.
struct ShellSumReport {
  std::complex<double> partial;      // 1 + (1-1/q) sum_{k<=K} (z q^-s)^k
  std::complex<double> closed_form;  // the exact quotient evaluated numerically
  double tail_bound;                 // geometric bound on the dropped tail
  int shells;
};

// q a prime power >= 2, z the unramified character value on the uniformizer
// (|z| = 1), Re(s) > 0, K >= 1 shells.
ShellSumReport rank_one_shell_sum(long q, std::complex<double> z,
                                  std::complex<double> s, int K);

// Valuation profile of the plane Fourier transform of the indicator of
// (p^c Z_p)^2 at rank one: the transform is p^(-2c) times the indicator of
// (p^-c Z_p)^2, i.e. coefficients q^(-2c) from index -c upward.
CoefficientFunction classical_fourier_pattern(int c);

// The rank-one shifted basic function: indicator sum over cosets >= c.
CoefficientFunction shifted_basic_rank_one(int c);

}  // namespace bkx
