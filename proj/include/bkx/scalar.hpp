#pragma once

#include <string>

#include "bkx/vpoly.hpp"

namespace bkx {

// Exact element of the rational function field Q(v) with q = v^2.
//
// Canonical form maintained by every operation:
//   * numerator and denominator are coprime integer-coefficient polynomials,
//   * the pair carries no common integer content,
//   * the denominator has a positive leading coefficient,
//   * zero is 0/1.
//
// Printing renders even powers of v as powers of q and odd powers with a
// trailing q_half token, e.g. v^5 -> q^2*q_half.
class ScalarQV {
 public:
  ScalarQV() : num_(), den_(1) {}
  ScalarQV(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  ScalarQV(const mpq_class& value);               // NOLINT: implicit by design
  ScalarQV(VPoly num, VPoly den);

  // v^k (k may be negative), so q^m is v_power(2*m).
  static ScalarQV v_power(int k);
  static ScalarQV q_power(int m) { return v_power(2 * m); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  const VPoly& num() const { return num_; }
  const VPoly& den() const { return den_; }

  ScalarQV operator-() const;
  ScalarQV operator+(const ScalarQV& o) const;
  ScalarQV operator-(const ScalarQV& o) const;
  ScalarQV operator*(const ScalarQV& o) const;
  ScalarQV operator/(const ScalarQV& o) const;  // throws DivisionByZero
  bool operator==(const ScalarQV& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  ScalarQV inverse() const;

  // Exact evaluation at a rational v.  Throws DivisionByZero if the
  // denominator vanishes there.
  mpq_class eval(const mpq_class& v) const;
  // Exact evaluation at rational q = v^2; requires both polynomials to have
  // even powers only.
  mpq_class eval_at_q(const mpq_class& q) const;
  double eval_double(double v) const;

  std::string to_string() const;

 private:
  void reduce();
  VPoly num_, den_;
};

// Renders an integer-coefficient polynomial in v with the q / q_half tokens,
// terms in increasing degree ("1-q^2", "q*q_half", ...).  Exposed for the
// symbol printer.
std::string vpoly_to_string(const VPoly& p);

}  // namespace bkx
