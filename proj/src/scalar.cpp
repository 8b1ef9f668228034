#include "bkx/scalar.hpp"

#include "bkx/errors.hpp"

namespace bkx {

ScalarQV::ScalarQV(const mpq_class& value) : num_(value), den_(1) { reduce(); }

ScalarQV::ScalarQV(VPoly num, VPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
  reduce();
}

ScalarQV ScalarQV::v_power(int k) {
  if (k >= 0) return ScalarQV(VPoly::monomial(1, k), VPoly(1));
  return ScalarQV(VPoly(1), VPoly::monomial(1, -k));
}

void ScalarQV::reduce() {
  if (num_.is_zero()) {
    den_ = VPoly(1);
    return;
  }
  VPoly g = VPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  // Clear coefficient denominators, then strip the common integer content.
  mpz_class lcm(1);
  for (int i = 0; i <= num_.degree(); ++i)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), num_.coeff(i).get_den_mpz_t());
  for (int i = 0; i <= den_.degree(); ++i)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den_.coeff(i).get_den_mpz_t());
  if (lcm != 1) {
    num_ = num_.scaled(mpq_class(lcm));
    den_ = den_.scaled(mpq_class(lcm));
  }
  mpz_class content(0);
  for (int i = 0; i <= num_.degree(); ++i)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num_.coeff(i).get_num_mpz_t());
  for (int i = 0; i <= den_.degree(); ++i)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), den_.coeff(i).get_num_mpz_t());
  if (content > 1) {
    mpq_class inv = mpq_class(1) / mpq_class(content);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

ScalarQV ScalarQV::operator-() const {
  ScalarQV r = *this;
  r.num_ = -r.num_;
  return r;
}

ScalarQV ScalarQV::operator+(const ScalarQV& o) const {
  return ScalarQV(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ScalarQV ScalarQV::operator-(const ScalarQV& o) const { return *this + (-o); }

ScalarQV ScalarQV::operator*(const ScalarQV& o) const {
  return ScalarQV(num_ * o.num_, den_ * o.den_);
}

ScalarQV ScalarQV::operator/(const ScalarQV& o) const {
  if (o.is_zero()) throw DivisionByZero("scalar division by zero");
  return ScalarQV(num_ * o.den_, den_ * o.num_);
}

ScalarQV ScalarQV::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  return ScalarQV(den_, num_);
}

mpq_class ScalarQV::eval(const mpq_class& v) const {
  mpq_class d = den_.eval(v);
  if (d == 0) throw DivisionByZero("scalar denominator vanishes at v");
  return num_.eval(v) / d;
}

mpq_class ScalarQV::eval_at_q(const mpq_class& q) const {
  mpq_class d = den_.eval_at_q(q);
  if (d == 0) throw DivisionByZero("scalar denominator vanishes at q");
  return num_.eval_at_q(q) / d;
}

double ScalarQV::eval_double(double v) const {
  return num_.eval_double(v) / den_.eval_double(v);
}

namespace {

int term_count(const VPoly& p) {
  int k = 0;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) ++k;
  return k;
}

std::string power_token(int i) {
  const int m = i / 2;
  std::string s;
  if (m == 1) {
    s = "q";
  } else if (m > 1) {
    s = "q^" + std::to_string(m);
  }
  if (i % 2 == 1) {
    if (!s.empty()) s += "*";
    s += "q_half";
  }
  return s;
}

}  // namespace

std::string vpoly_to_string(const VPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    const mpq_class& c = p.coeff(i);
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = c.get_str();
    } else {
      std::string pw = power_token(i);
      if (c == 1) {
        term = pw;
      } else if (c == -1) {
        term = "-" + pw;
      } else {
        term = c.get_str() + "*" + pw;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += "-" + term.substr(1);
    } else {
      out += "+" + term;
    }
  }
  return out;
}

std::string ScalarQV::to_string() const {
  std::string ns = vpoly_to_string(num_);
  if (den_ == VPoly(1)) return ns;
  std::string ds = vpoly_to_string(den_);
  if (term_count(num_) > 1) ns = "(" + ns + ")";
  if (term_count(den_) > 1 || ds.find('*') != std::string::npos)
    ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace bkx
