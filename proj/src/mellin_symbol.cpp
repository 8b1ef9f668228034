#include "bkx/mellin_symbol.hpp"

#include <algorithm>

#include "bkx/errors.hpp"

namespace bkx {

namespace {
// Shared zero for out-of-range coefficient lookups and fills.  Kept behind
// a function-local static so it is safe to use while some other translation
// unit is still running its own static initialization.
const ScalarQV& zero_scalar() {
  static const ScalarQV z;
  return z;
}

ScalarQV scalar_pow(const ScalarQV& s, int k) {
  ScalarQV base = k < 0 ? s.inverse() : s;
  int e = k < 0 ? -k : k;
  ScalarQV acc(1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// True when the rendered scalar cannot be spliced in front of "*U^k"
// without changing the parse (it has a top-level + or binary -).
bool needs_parens(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || (ch == '-' && i > 0))) return true;
  }
  return false;
}

std::string upoly_to_string(const UPoly& p, int offset) {
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    const ScalarQV& c = p.coeff(i);
    if (c.is_zero()) continue;
    const int e = i + offset;
    std::string term;
    if (e == 0) {
      term = c.to_string();
    } else {
      std::string pw = e == 1 ? "U" : "U^" + std::to_string(e);
      if (c == ScalarQV(1)) {
        term = pw;
      } else if (c == ScalarQV(-1)) {
        term = "-" + pw;
      } else {
        std::string cs = c.to_string();
        if (needs_parens(cs)) cs = "(" + cs + ")";
        term = cs + "*" + pw;
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
  return out.empty() ? "0" : out;
}

}  // namespace

UPoly::UPoly(ScalarQV constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UPoly UPoly::monomial(ScalarQV coeff, int deg) {
  UPoly p;
  if (coeff.is_zero()) return p;
  if (deg < 0) throw DomainError("monomial degree must be nonnegative");
  p.c_.assign(deg + 1, zero_scalar());
  p.c_[deg] = std::move(coeff);
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const ScalarQV& UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero_scalar();
  return c_[i];
}

int UPoly::low_degree() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return 0;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), zero_scalar());
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
  r.trim();
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  UPoly r;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, zero_scalar());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& div) const {
  if (div.is_zero()) throw DivisionByZero("polynomial division by zero");
  UPoly rem = *this;
  UPoly quot;
  const int dd = div.degree();
  const ScalarQV lead_inv = div.c_.back().inverse();
  if (rem.degree() >= dd) quot.c_.assign(rem.degree() - dd + 1, zero_scalar());
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int k = rem.degree() - dd;
    ScalarQV f = rem.c_.back() * lead_inv;
    quot.c_[k] = f;
    for (int i = 0; i <= dd; ++i) rem.c_[k + i] = rem.c_[k + i] - f * div.c_[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

namespace {

// Rescales so every coefficient is polynomial in v and the coefficient
// numerators are coprime.  Plain monic Euclid over Q(v) doubles coefficient
// degrees at every division step; resetting to the primitive form after each
// remainder keeps the growth flat.
UPoly primitive_scaled(const UPoly& p) {
  if (p.is_zero()) return p;
  VPoly den_lcm(1);
  for (int i = 0; i <= p.degree(); ++i) {
    const ScalarQV& c = p.coeff(i);
    if (c.is_zero()) continue;
    den_lcm = den_lcm * c.den().divide_exact(VPoly::gcd(den_lcm, c.den()));
  }
  UPoly cleared = den_lcm == VPoly(1) ? p : p.scaled(ScalarQV(den_lcm, VPoly(1)));
  VPoly num_gcd;
  for (int i = 0; i <= cleared.degree(); ++i) {
    const ScalarQV& c = cleared.coeff(i);
    if (c.is_zero()) continue;
    num_gcd = VPoly::gcd(num_gcd, c.num());
    if (num_gcd.degree() == 0) return cleared;
  }
  return cleared.scaled(ScalarQV(VPoly(1), num_gcd));
}

// Sound coprimality certificate for primitive inputs.  Evaluating the
// coefficients at a fixed rational v is a ring map into Q[U]; when it
// preserves both degrees, any nonconstant common factor would survive as a
// nonconstant common factor of the evaluations.  So a constant evaluated
// gcd proves the symbolic gcd is constant and the remainder sequence can be
// skipped.  A nonconstant evaluated gcd proves nothing; the caller falls
// through to the symbolic computation.
bool surely_coprime(const UPoly& a, const UPoly& b) {
  const mpq_class t(5);
  VPoly ea, eb;
  for (int i = 0; i <= a.degree(); ++i) {
    const ScalarQV& c = a.coeff(i);
    if (c.is_zero()) continue;
    const mpq_class d = c.den().eval(t);
    if (d == 0) return false;
    ea = ea + VPoly::monomial(c.num().eval(t) / d, i);
  }
  for (int i = 0; i <= b.degree(); ++i) {
    const ScalarQV& c = b.coeff(i);
    if (c.is_zero()) continue;
    const mpq_class d = c.den().eval(t);
    if (d == 0) return false;
    eb = eb + VPoly::monomial(c.num().eval(t) / d, i);
  }
  if (ea.degree() != a.degree() || eb.degree() != b.degree()) return false;
  return VPoly::gcd(ea, eb).degree() == 0;
}

// Fraction-free remainder: scales the running remainder by the divisor's
// leading coefficient before each elimination step instead of dividing by
// it.  On primitive inputs every intermediate coefficient stays polynomial,
// which avoids the coefficient blow-up of rational division.  The result
// differs from the true remainder by a scalar factor only, which the gcd
// does not care about.
UPoly pseudo_rem(UPoly rem, const UPoly& div) {
  const int dd = div.degree();
  const ScalarQV& lead = div.coeff(dd);
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int k = rem.degree() - dd;
    const ScalarQV f = rem.coeff(rem.degree());
    rem = rem.scaled(lead) - UPoly::monomial(f, k) * div;
  }
  return rem;
}

}  // namespace

UPoly UPoly::gcd(UPoly a, UPoly b) {
  a = primitive_scaled(a);
  b = primitive_scaled(b);
  if (!a.is_zero() && !b.is_zero()) {
    if (a.degree() == 0 || b.degree() == 0 || surely_coprime(a, b))
      return UPoly(ScalarQV(1));
  }
  while (!b.is_zero()) {
    UPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_scaled(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.c_.back().inverse());
}

UPoly UPoly::scaled(const ScalarQV& s) const {
  if (s.is_zero()) return UPoly();
  UPoly r = *this;
  for (auto& x : r.c_) x = x * s;
  return r;
}

UPoly UPoly::shifted_down(int k) const {
  if (k == 0) return *this;
  UPoly r;
  for (int i = 0; i < k; ++i)
    if (!coeff(i).is_zero())
      throw DomainError("cannot shift below a nonzero coefficient");
  if (degree() >= k) r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

UPoly UPoly::reversed() const {
  UPoly r = *this;
  std::reverse(r.c_.begin(), r.c_.end());
  r.trim();
  return r;
}

MellinSymbol MellinSymbol::from_scalar(const ScalarQV& s) {
  MellinSymbol m;
  m.num_ = UPoly(s);
  m.den_ = UPoly(ScalarQV(1));
  m.canonicalize();
  return m;
}

MellinSymbol MellinSymbol::u_power(int k) {
  MellinSymbol m = one();
  m.floor_ = k;
  return m;
}

MellinSymbol MellinSymbol::fraction(UPoly num, UPoly den, int num_shift,
                                    int den_shift) {
  if (den.is_zero()) throw DivisionByZero("symbol with zero denominator");
  MellinSymbol m;
  m.num_ = std::move(num);
  m.den_ = std::move(den);
  m.floor_ = num_shift - den_shift;
  m.canonicalize();
  return m;
}

MellinSymbol MellinSymbol::from_laurent(const std::map<int, ScalarQV>& coeffs) {
  int lo = 0;
  bool any = false;
  for (const auto& [m, c] : coeffs) {
    if (!c.is_zero() && (!any || m < lo)) {
      lo = m;
      any = true;
    }
  }
  if (!any) return zero();
  UPoly num;
  for (const auto& [m, c] : coeffs)
    if (!c.is_zero()) num = num + UPoly::monomial(c, m - lo);
  MellinSymbol r;
  r.num_ = std::move(num);
  r.den_ = UPoly(ScalarQV(1));
  r.floor_ = lo;
  r.canonicalize();
  return r;
}

void MellinSymbol::canonicalize() {
  if (num_.is_zero()) {
    floor_ = 0;
    den_ = UPoly(ScalarQV(1));
    return;
  }
  const int a = num_.low_degree();
  if (a > 0) {
    num_ = num_.shifted_down(a);
    floor_ += a;
  }
  const int b = den_.low_degree();
  if (b > 0) {
    den_ = den_.shifted_down(b);
    floor_ -= b;
  }
  UPoly g = UPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    auto [qn, rn] = num_.divmod(g);
    auto [qd, rd] = den_.divmod(g);
    if (!rn.is_zero() || !rd.is_zero())
      throw DomainError("internal: gcd failed to divide");
    num_ = std::move(qn);
    den_ = std::move(qd);
  }
  const ScalarQV scale = den_.coeff(0).inverse();
  num_ = num_.scaled(scale);
  den_ = den_.scaled(scale);
}

MellinSymbol MellinSymbol::operator-() const {
  MellinSymbol r = *this;
  r.num_ = -r.num_;
  return r;
}

MellinSymbol MellinSymbol::operator+(const MellinSymbol& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int s = std::min(floor_, o.floor_);
  UPoly a = num_ * UPoly::monomial(ScalarQV(1), floor_ - s) * o.den_;
  UPoly b = o.num_ * UPoly::monomial(ScalarQV(1), o.floor_ - s) * den_;
  MellinSymbol r;
  r.num_ = a + b;
  r.den_ = den_ * o.den_;
  r.floor_ = s;
  r.canonicalize();
  return r;
}

MellinSymbol MellinSymbol::operator-(const MellinSymbol& o) const {
  return *this + (-o);
}

MellinSymbol MellinSymbol::operator*(const MellinSymbol& o) const {
  if (is_zero() || o.is_zero()) return zero();
  MellinSymbol r;
  r.num_ = num_ * o.num_;
  r.den_ = den_ * o.den_;
  r.floor_ = floor_ + o.floor_;
  r.canonicalize();
  return r;
}

MellinSymbol MellinSymbol::operator/(const MellinSymbol& o) const {
  if (o.is_zero()) throw DivisionByZero("symbol division by zero");
  if (is_zero()) return zero();
  MellinSymbol r;
  r.num_ = num_ * o.den_;
  r.den_ = den_ * o.num_;
  r.floor_ = floor_ - o.floor_;
  r.canonicalize();
  return r;
}

const ScalarQV& MellinSymbol::Expansion::at(int m) const {
  const int idx = m - first;
  if (idx < 0 || idx >= static_cast<int>(coeffs.size())) return zero_scalar();
  return coeffs[idx];
}

MellinSymbol::Expansion MellinSymbol::laurent(int upto) const {
  Expansion ex;
  ex.first = floor_;
  if (is_zero() || upto < floor_) return ex;
  const int len = upto - floor_ + 1;
  // Power series inverse of den (den(0) = 1), then a truncated product.
  std::vector<ScalarQV> inv(len);
  inv[0] = ScalarQV(1);
  for (int k = 1; k < len; ++k) {
    ScalarQV acc;
    for (int j = 1; j <= std::min(k, den_.degree()); ++j)
      acc = acc + den_.coeff(j) * inv[k - j];
    inv[k] = -acc;
  }
  ex.coeffs.assign(len, zero_scalar());
  for (int k = 0; k < len; ++k) {
    ScalarQV acc;
    for (int j = 0; j <= std::min(k, num_.degree()); ++j)
      acc = acc + num_.coeff(j) * inv[k - j];
    ex.coeffs[k] = acc;
  }
  return ex;
}

ScalarQV MellinSymbol::laurent_coeff(int m) const {
  if (is_zero() || m < floor_) return ScalarQV();
  return laurent(m).at(m);
}

MellinSymbol MellinSymbol::substitute_u_inverse(const ScalarQV& r) const {
  if (r.is_zero()) throw DomainError("reflection scalar must be nonzero");
  if (is_zero()) return zero();
  // For a polynomial p of degree d, p(r/U) = U^(-d) * sum_j p_j r^j U^(d-j).
  auto twist_reverse = [&r](const UPoly& p) {
    UPoly out;
    ScalarQV rp(1);
    const int d = p.degree();
    for (int j = 0; j <= d; ++j) {
      if (!p.coeff(j).is_zero())
        out = out + UPoly::monomial(p.coeff(j) * rp, d - j);
      rp = rp * r;
    }
    return out;
  };
  MellinSymbol res;
  res.num_ = twist_reverse(num_).scaled(scalar_pow(r, floor_));
  res.den_ = twist_reverse(den_);
  res.floor_ = den_.degree() - num_.degree() - floor_;
  res.canonicalize();
  return res;
}

std::complex<double> MellinSymbol::eval(double v0, std::complex<double> u0) const {
  if (is_zero()) return {0.0, 0.0};
  auto horner = [v0, u0](const UPoly& p) {
    std::complex<double> acc(0.0, 0.0);
    for (int i = p.degree(); i >= 0; --i)
      acc = acc * u0 + std::complex<double>(p.coeff(i).eval_double(v0), 0.0);
    return acc;
  };
  std::complex<double> d = horner(den_);
  if (d == std::complex<double>(0.0, 0.0))
    throw DivisionByZero("symbol denominator vanishes at the evaluation point");
  std::complex<double> base = horner(num_) / d;
  std::complex<double> upow = std::pow(u0, floor_);
  return base * upow;
}

std::string MellinSymbol::num_string() const {
  if (is_zero()) return "0";
  if (floor_ < 0)
    return "U^" + std::to_string(floor_) + "*(" + upoly_to_string(num_, 0) + ")";
  return upoly_to_string(num_, floor_);
}

std::string MellinSymbol::den_string() const { return upoly_to_string(den_, 0); }

std::string MellinSymbol::to_string() const {
  if (is_zero()) return "0";
  const bool den_trivial = den_ == UPoly(ScalarQV(1));
  if (den_trivial) return num_string();
  std::string ns = num_string();
  // U^-k*(...) keeps its own parentheses; anything else gets wrapped so the
  // division cannot rebind.
  if (floor_ >= 0) ns = "(" + ns + ")";
  return ns + "/(" + upoly_to_string(den_, 0) + ")";
}

}  // namespace bkx
