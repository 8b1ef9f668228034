#pragma once

#include <string>
#include <vector>

#include "bkx/mellin_symbol.hpp"

namespace bkx {

// Coset representative datum for the degenerate principal series on Sp(2n):
// the 2^n representatives of the relevant double cosets are indexed by the
// subsets I of {1..n} (I lists which torus coordinates get inverted).
struct WeylCosetDatum {
  int n = 1;
  std::vector<int> subset;  // strictly increasing, entries in 1..n

  int k() const { return static_cast<int>(subset.size()); }
  // Complement of subset in {1..n}, increasing.
  std::vector<int> complement() const;
  std::string to_string() const;
};

// Validates 1 <= n <= 8 and the subset shape.
WeylCosetDatum make_coset(int n, std::vector<int> subset);

// All 2^n cosets in bitmask order (bit i-1 set means i is in the subset).
std::vector<WeylCosetDatum> enumerate_cosets(int n);

// One local L-factor of the unramified principal series computation:
// L(e*s + shift2/2, chi^e), where e in {1, 2} for the factors that occur in
// the intertwining products and e in {-1, -2} for their reflections.
struct LFactorAtom {
  int e = 1;       // coefficient of s; the character is chi^e
  int shift2 = 0;  // twice the additive shift, kept integral

  bool operator==(const LFactorAtom&) const = default;
  std::string to_string() const;
  // Image under the Mellin substitution U = chi(pi) q^(-s-(n+1)/2):
  //   L(e*s + a, chi^e) -> 1 / (1 - U^e v^(e(n+1) - 2a)).
  MellinSymbol symbol(int n) const;
};

// Formal product of atoms (with multiplicity, canonically sorted).
struct LFactorProduct {
  std::vector<LFactorAtom> atoms;

  LFactorProduct& push(LFactorAtom a);
  void sort_atoms();
  bool operator==(const LFactorProduct&) const = default;
  std::string to_string() const;
  MellinSymbol symbol(int n) const;
};

// Exponent recursion for the short-root factors: the smallest m with
// n-k+1 <= m <= n whose inverted index i_(n-m+1) lies below the r-th
// non-inverted index (for r <= n-k), and r+1 beyond that range.
// Throws EmptyMinSet when no m qualifies.
int mu(const WeylCosetDatum& w, int r);

// Enumerates every (subset, r) pair for which the numerator product actually
// consults mu at this n, in deterministic order.
struct MuUse {
  WeylCosetDatum w;
  int r;
};
std::vector<MuUse> mu_uses(int n);

// Numerator L-factor product of the normalized intertwining operator
// attached to the coset datum.
LFactorProduct a_factor(const WeylCosetDatum& w);

// Common denominator: d(n) = L(s+(n+1)/2, chi) * prod_r L(2s+n+1-2r, chi^2).
LFactorProduct d_factor(int n);

// Closed form of the numerator for the longest coset (full subset):
// L(s+(1-n)/2, chi) * prod_r L(2s-n+2r, chi^2).
LFactorProduct a_full_closed_form(int n);

// Normalized quotient c_w = a_w / d as an exact symbol in U.
MellinSymbol c_symbol(const WeylCosetDatum& w);

// Rank-one telescoping product over the positive roots moved by the longest
// coset; an independent route to c_symbol(full subset):
//   prod_i L(s+(n+1)/2-i)/L(s+(n+1)/2-i+1)
//   * prod_{i<j} L(2s+n+1-i-j, chi^2)/L(2s+n+2-i-j, chi^2).
MellinSymbol gk_product(int n);

// Mellin-side factor of the Fourier transform: the image of
// d(s, chi) / d(-s, chibar) under the U-substitution.  Satisfies
// multiplier(U) * multiplier(q^-(n+1)/U) = 1.
MellinSymbol fourier_multiplier(int n);

}  // namespace bkx
