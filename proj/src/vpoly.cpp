#include "bkx/vpoly.hpp"

#include "bkx/errors.hpp"

namespace bkx {

namespace {
// Shared zero for out-of-range coefficient lookups and fills.  Kept behind
// a function-local static so it is safe to use while some other translation
// unit is still running its own static initialization.
const mpq_class& zero_rational() {
  static const mpq_class z(0);
  return z;
}
}

VPoly::VPoly(const mpq_class& constant) {
  if (constant != 0) c_.push_back(constant);
}

VPoly::VPoly(long constant) {
  if (constant != 0) c_.push_back(mpq_class(constant));
}

VPoly VPoly::monomial(const mpq_class& coeff, int deg) {
  VPoly p;
  if (coeff == 0) return p;
  if (deg < 0) throw DomainError("monomial degree must be nonnegative");
  p.c_.assign(deg + 1, zero_rational());
  p.c_[deg] = coeff;
  return p;
}

void VPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& VPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero_rational();
  return c_[i];
}

bool VPoly::even_powers_only() const {
  for (size_t i = 1; i < c_.size(); i += 2) {
    if (c_[i] != 0) return false;
  }
  return true;
}

VPoly VPoly::operator-() const {
  VPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

VPoly VPoly::operator+(const VPoly& o) const {
  VPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), zero_rational());
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
  r.trim();
  return r;
}

VPoly VPoly::operator-(const VPoly& o) const { return *this + (-o); }

VPoly VPoly::operator*(const VPoly& o) const {
  VPoly r;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, zero_rational());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

std::pair<VPoly, VPoly> VPoly::divmod(const VPoly& div) const {
  if (div.is_zero()) throw DivisionByZero("polynomial division by zero");
  VPoly rem = *this;
  VPoly quot;
  const int dd = div.degree();
  const mpq_class lead = div.c_.back();
  if (rem.degree() >= dd) quot.c_.assign(rem.degree() - dd + 1, zero_rational());
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int k = rem.degree() - dd;
    mpq_class f = rem.c_.back() / lead;
    quot.c_[k] = f;
    for (int i = 0; i <= dd; ++i) rem.c_[k + i] -= f * div.c_[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

VPoly VPoly::divide_exact(const VPoly& div) const {
  auto [q, r] = divmod(div);
  if (!r.is_zero()) throw DomainError("polynomial division left a remainder");
  return q;
}

namespace {

// Integer-coefficient copy with the common content stripped.  Rational
// Euclid alone blows up the coefficient bit sizes exponentially in the
// degree; resetting each remainder to this form keeps them flat.
VPoly primitive_part(const VPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm(1);
  for (int i = 0; i <= p.degree(); ++i) {
    const mpq_class& c = p.coeff(i);
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  VPoly out = den_lcm == 1 ? p : p.scaled(mpq_class(den_lcm));
  mpz_class content(0);
  for (int i = 0; i <= out.degree(); ++i) {
    const mpq_class& c = out.coeff(i);
    if (c == 0) continue;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
    if (content == 1) return out;
  }
  return out.scaled(mpq_class(mpz_class(1), content));
}

}  // namespace

VPoly VPoly::gcd(VPoly a, VPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    VPoly r = a.divmod(b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

VPoly VPoly::scaled(const mpq_class& s) const {
  if (s == 0) return VPoly();
  VPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

VPoly VPoly::monic() const {
  if (is_zero()) throw DomainError("monic of the zero polynomial");
  return scaled(mpq_class(1) / c_.back());
}

mpq_class VPoly::eval(const mpq_class& v) const {
  mpq_class acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  return acc;
}

mpq_class VPoly::eval_at_q(const mpq_class& q) const {
  if (!even_powers_only())
    throw DomainError("value involves q^(1/2); cannot evaluate at q alone");
  mpq_class acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    if (i % 2 == 0) acc = acc * q + c_[i];
  }
  return acc;
}

double VPoly::eval_double(double v) const {
  double acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i].get_d();
  return acc;
}

}  // namespace bkx
