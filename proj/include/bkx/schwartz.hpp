#pragma once

#include <vector>

#include "bkx/mellin_symbol.hpp"
#include "bkx/plucker.hpp"

namespace bkx {

// Spherical function on the boundary-degree cosets of the space
// [P,P]\Sp(2n): a coefficient c_m for every integer m, supported below by
// a floor.  Two storage forms:
//   * finite:   finitely many coefficients, kept from floor() upward;
//   * rational: the Mellin symbol, whose Laurent coefficients at U = 0 are
//               the c_m (the symbol of the indicator of coset m is U^m).
class CoefficientFunction {
 public:
  static CoefficientFunction indicator(int n, int m);
  static CoefficientFunction finite(int n, int first, std::vector<ScalarQV> coeffs);
  static CoefficientFunction rational(int n, MellinSymbol symbol);

  int n() const { return n_; }
  bool is_finite_form() const { return finite_; }
  bool is_zero() const { return symbol_.is_zero(); }
  // Lowest index carrying a nonzero coefficient (0 for the zero function).
  int floor() const { return symbol_.floor(); }
  const MellinSymbol& symbol() const { return symbol_; }

  ScalarQV coefficient(int m) const;
  std::vector<ScalarQV> coefficients(int upto) const;  // floor()..upto

  CoefficientFunction operator+(const CoefficientFunction& o) const;
  CoefficientFunction operator-(const CoefficientFunction& o) const;
  CoefficientFunction scaled(const ScalarQV& s) const;
  // Equality of the underlying functions (form-insensitive).
  bool operator==(const CoefficientFunction& o) const;

 private:
  CoefficientFunction(int n, bool finite, MellinSymbol symbol)
      : n_(n), finite_(finite), symbol_(std::move(symbol)) {}
  int n_;
  bool finite_;  // remembers which storage form produced this value
  MellinSymbol symbol_;
};

MellinSymbol mellin(const CoefficientFunction& f);
CoefficientFunction inverse_mellin(int n, const MellinSymbol& symbol);

// The distinguished spherical vector: geometric series over the boundary
// degrees weighted so that its Mellin symbol is exactly the substituted
// common denominator d(n).
CoefficientFunction basic_function(int n);
// Direct summation of the defining series of the basic function, for
// cross-checking the rational form: coefficients c_0..c_upto.
std::vector<ScalarQV> basic_function_direct(int n, int upto);

// Mellin-side Fourier transform: reflect U -> q^-(n+1)/U, then multiply by
// the fourier multiplier.  An involution.
CoefficientFunction fourier(const CoefficientFunction& f);

// Value of f at the group element g for the prime p, i.e. the coefficient
// of the boundary coset that g lands in.
ScalarQV evaluate(const CoefficientFunction& f, const SymplecticMatrix& g, long p);

}  // namespace bkx
