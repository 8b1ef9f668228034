#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "bkx/scalar.hpp"

namespace bkx {

// Dense polynomial in the Mellin variable U with ScalarQV coefficients.
class UPoly {
 public:
  UPoly() = default;
  UPoly(ScalarQV constant);  // NOLINT: implicit by design
  static UPoly monomial(ScalarQV coeff, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const ScalarQV& coeff(int i) const;
  // Smallest exponent with a nonzero coefficient (zero polynomial: 0).
  int low_degree() const;

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  std::pair<UPoly, UPoly> divmod(const UPoly& div) const;
  static UPoly gcd(UPoly a, UPoly b);

  UPoly scaled(const ScalarQV& s) const;
  // Divide by U^k (requires the k lowest coefficients to vanish).
  UPoly shifted_down(int k) const;
  // Coefficients reversed: U^deg * p(1/U).
  UPoly reversed() const;

 private:
  void trim();
  std::vector<ScalarQV> c_;
};

// Rational function of U over Q(v) together with the lowest exponent of its
// Laurent expansion at U = 0.  Stored canonically as
//
//     U^floor * num(U) / den(U),   num(0) != 0,  den(0) = 1,  gcd(num,den)=1,
//
// so the tracked floor is definitionally the expansion floor (the zero symbol
// stores floor 0).  The Mellin variable is the unramified character value
// U = chi(pi) q^(-s-(n+1)/2); an indicator of the coset with index c has
// symbol U^c.
class MellinSymbol {
 public:
  MellinSymbol() : floor_(0), num_(), den_(ScalarQV(1)) {}
  static MellinSymbol zero() { return MellinSymbol(); }
  static MellinSymbol one() { return from_scalar(ScalarQV(1)); }
  static MellinSymbol from_scalar(const ScalarQV& s);
  static MellinSymbol u_power(int k);
  // num / den as given (den nonzero), U powers allowed via the shift args.
  static MellinSymbol fraction(UPoly num, UPoly den, int num_shift = 0,
                               int den_shift = 0);
  // Finite Laurent polynomial sum_m coeffs[m] U^m.
  static MellinSymbol from_laurent(const std::map<int, ScalarQV>& coeffs);

  bool is_zero() const { return num_.is_zero(); }
  // Lowest exponent of the Laurent expansion at U = 0 (0 for the zero symbol).
  int floor() const { return floor_; }
  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  // True when the denominator is 1, i.e. the symbol is a Laurent polynomial.
  bool is_laurent_polynomial() const { return den_ == UPoly(ScalarQV(1)); }

  MellinSymbol operator-() const;
  MellinSymbol operator+(const MellinSymbol& o) const;
  MellinSymbol operator-(const MellinSymbol& o) const;
  MellinSymbol operator*(const MellinSymbol& o) const;
  MellinSymbol operator/(const MellinSymbol& o) const;
  bool operator==(const MellinSymbol& o) const {
    return floor_ == o.floor_ && num_ == o.num_ && den_ == o.den_;
  }

  // Laurent coefficients c_floor .. c_upto (empty when upto < floor).
  // first holds the exponent of the first entry.
  struct Expansion {
    int first = 0;
    std::vector<ScalarQV> coeffs;
    const ScalarQV& at(int m) const;
  };
  Expansion laurent(int upto) const;
  ScalarQV laurent_coeff(int m) const;

  // The substitution U -> U^(-1) * r for a nonzero scalar r; used with
  // r = q^(-(n+1)) this is the Mellin-side reflection behind the Fourier
  // transform.
  MellinSymbol substitute_u_inverse(const ScalarQV& r) const;

  // Numeric evaluation at v = v0, U = u0.
  std::complex<double> eval(double v0, std::complex<double> u0) const;

  std::string to_string() const;
  // The two halves of to_string: numerator text (carries the U^floor
  // factor) and denominator text (constant term 1).
  std::string num_string() const;
  std::string den_string() const;

 private:
  void canonicalize();
  int floor_;
  UPoly num_, den_;
};

}  // namespace bkx
