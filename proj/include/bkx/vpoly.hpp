#pragma once

#include <gmpxx.h>

#include <vector>

namespace bkx {

// Dense univariate polynomial with rational coefficients in the variable v,
// where v stands for the half power of the residue cardinality: q = v^2.
// Keeping the half power as the actual variable lets every formula that
// involves q^(1/2) stay polynomial.
class VPoly {
 public:
  VPoly() = default;
  VPoly(const mpq_class& constant);  // NOLINT: implicit by design
  VPoly(long constant);              // NOLINT: implicit by design
  static VPoly monomial(const mpq_class& coeff, int deg);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Coefficient of v^i; zero outside the stored range.
  const mpq_class& coeff(int i) const;
  // True when every monomial has even degree, i.e. the value is a
  // polynomial in q alone.
  bool even_powers_only() const;

  VPoly operator-() const;
  VPoly operator+(const VPoly& o) const;
  VPoly operator-(const VPoly& o) const;
  VPoly operator*(const VPoly& o) const;
  bool operator==(const VPoly& o) const { return c_ == o.c_; }

  // Quotient and remainder of exact field division: *this = q*div + r with
  // deg r < deg div.  div must be nonzero.
  std::pair<VPoly, VPoly> divmod(const VPoly& div) const;
  // Exact division; throws DomainError when the remainder is nonzero.
  VPoly divide_exact(const VPoly& div) const;

  // Monic greatest common divisor (1 for coprime inputs, 0 only if both are 0).
  static VPoly gcd(VPoly a, VPoly b);

  // Multiply every coefficient by the scalar.
  VPoly scaled(const mpq_class& s) const;
  // Make the leading coefficient 1 (nonzero polynomials only).
  VPoly monic() const;

  mpq_class leading() const { return is_zero() ? mpq_class(0) : c_.back(); }

  // Evaluate at a rational value of v.
  mpq_class eval(const mpq_class& v) const;
  // Evaluate at a rational value of q = v^2.  Requires even_powers_only().
  mpq_class eval_at_q(const mpq_class& q) const;
  double eval_double(double v) const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

}  // namespace bkx
