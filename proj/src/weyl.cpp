#include "bkx/weyl.hpp"

#include <algorithm>

#include "bkx/errors.hpp"

namespace bkx {

namespace {

void check_n(int n, int hi) {
  if (n < 1 || n > hi)
    throw DomainError("rank n out of range [1," + std::to_string(hi) + "]");
}

// 1 - v^w U^e as a symbol; e may be negative.
MellinSymbol one_minus(int e, int w) {
  std::map<int, ScalarQV> m;
  m[0] = ScalarQV(1);
  m[e] = m[e] + (-ScalarQV::v_power(w));
  return MellinSymbol::from_laurent(m);
}

std::string half_shift_string(int shift2) {
  if (shift2 == 0) return "";
  std::string sign = shift2 > 0 ? "+" : "-";
  const int a = shift2 > 0 ? shift2 : -shift2;
  if (a % 2 == 0) return sign + std::to_string(a / 2);
  return sign + std::to_string(a) + "/2";
}

// Removes atoms common to both lists (multiset cancellation).
void cancel_common(std::vector<LFactorAtom>& xs, std::vector<LFactorAtom>& ys) {
  for (auto it = xs.begin(); it != xs.end();) {
    auto j = std::find(ys.begin(), ys.end(), *it);
    if (j != ys.end()) {
      ys.erase(j);
      it = xs.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

std::vector<int> WeylCosetDatum::complement() const {
  std::vector<int> out;
  size_t t = 0;
  for (int i = 1; i <= n; ++i) {
    if (t < subset.size() && subset[t] == i) {
      ++t;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::string WeylCosetDatum::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i]);
  }
  return s + "}";
}

WeylCosetDatum make_coset(int n, std::vector<int> subset) {
  check_n(n, 8);
  std::vector<int> s = std::move(subset);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n) throw DomainError("subset entry out of 1..n");
    if (i > 0 && s[i] <= s[i - 1])
      throw DomainError("subset must be strictly increasing");
  }
  return WeylCosetDatum{n, std::move(s)};
}

std::vector<WeylCosetDatum> enumerate_cosets(int n) {
  check_n(n, 8);
  std::vector<WeylCosetDatum> out;
  out.reserve(1u << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) subset.push_back(i);
    out.push_back(WeylCosetDatum{n, std::move(subset)});
  }
  return out;
}

std::string LFactorAtom::to_string() const {
  std::string arg;
  switch (e) {
    case 1: arg = "s"; break;
    case 2: arg = "2s"; break;
    case -1: arg = "-s"; break;
    case -2: arg = "-2s"; break;
    default: throw DomainError("atom slope must be one of -2,-1,1,2");
  }
  arg += half_shift_string(shift2);
  std::string chi;
  switch (e) {
    case 1: chi = "chi"; break;
    case 2: chi = "chi^2"; break;
    case -1: chi = "chibar"; break;
    case -2: chi = "chibar^2"; break;
  }
  return "L(" + arg + "," + chi + ")";
}

MellinSymbol LFactorAtom::symbol(int n) const {
  // v-weight of the substituted monomial: e(n+1) - 2a with 2a = shift2.
  const int w = e * (n + 1) - shift2;
  return MellinSymbol::one() / one_minus(e, w);
}

LFactorProduct& LFactorProduct::push(LFactorAtom a) {
  atoms.push_back(a);
  return *this;
}

void LFactorProduct::sort_atoms() {
  std::sort(atoms.begin(), atoms.end(), [](const LFactorAtom& x, const LFactorAtom& y) {
    const int ax = x.e < 0 ? -x.e : x.e;
    const int ay = y.e < 0 ? -y.e : y.e;
    if (ax != ay) return ax < ay;
    if ((x.e < 0) != (y.e < 0)) return !(x.e < 0);
    return x.shift2 < y.shift2;
  });
}

std::string LFactorProduct::to_string() const {
  if (atoms.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += " * ";
    out += atoms[i].to_string();
  }
  return out;
}

MellinSymbol LFactorProduct::symbol(int n) const {
  MellinSymbol acc = MellinSymbol::one();
  for (const auto& a : atoms) acc = acc * a.symbol(n);
  return acc;
}

int mu(const WeylCosetDatum& w, int r) {
  const int n = w.n;
  const int k = w.k();
  if (r < 1 || r > n / 2) throw DomainError("mu index r out of range 1..n/2");
  if (r >= n - k + 1) return r + 1;
  const std::vector<int> comp = w.complement();
  const int jr = comp[r - 1];
  for (int m = n - k + 1; m <= n; ++m) {
    // The inverted index in slot n-m+1 (1-based).
    const int it = w.subset[n - m];
    if (it < jr) return m;
  }
  throw EmptyMinSet("no admissible m for coset " + w.to_string() + " at r=" +
                    std::to_string(r));
}

std::vector<MuUse> mu_uses(int n) {
  check_n(n, 8);
  std::vector<MuUse> out;
  for (const auto& w : enumerate_cosets(n)) {
    const int k = w.k();
    const int top = std::min(k, n / 2);
    for (int r = 1; r <= top; ++r) {
      if (w.subset[r - 1] <= 2 * r - 1) out.push_back(MuUse{w, r});
    }
  }
  return out;
}

LFactorProduct a_factor(const WeylCosetDatum& w) {
  const int n = w.n;
  check_n(n, 8);
  const int k = w.k();
  LFactorProduct p;
  p.push({1, n + 1 - 2 * k});
  const int top = std::min(k, n / 2);
  for (int r = 1; r <= top; ++r) {
    const int ir = w.subset[r - 1];
    if (ir >= 2 * r) {
      p.push({2, 2 * (ir - 2 * r + 1)});
    } else {
      // ir <= 2r-1: the shift depends on the exponent recursion.
      p.push({2, 2 * (-n + r + mu(w, r) - 1)});
    }
  }
  for (int r = k + 1; r <= n / 2; ++r) p.push({2, 2 * (n + 1 - 2 * r)});
  p.sort_atoms();
  return p;
}

LFactorProduct d_factor(int n) {
  check_n(n, 8);
  LFactorProduct p;
  p.push({1, n + 1});
  for (int r = 1; r <= n / 2; ++r) p.push({2, 2 * (n + 1 - 2 * r)});
  p.sort_atoms();
  return p;
}

LFactorProduct a_full_closed_form(int n) {
  check_n(n, 8);
  LFactorProduct p;
  p.push({1, 1 - n});
  for (int r = 1; r <= n / 2; ++r) p.push({2, 2 * (2 * r - n)});
  p.sort_atoms();
  return p;
}

MellinSymbol c_symbol(const WeylCosetDatum& w) {
  const int n = w.n;
  std::vector<LFactorAtom> num = d_factor(n).atoms;   // survives in numerator
  std::vector<LFactorAtom> den = a_factor(w).atoms;   // survives in denominator
  cancel_common(num, den);
  UPoly np(ScalarQV(1)), dp(ScalarQV(1));
  for (const auto& a : num)
    np = np * (UPoly(ScalarQV(1)) - UPoly::monomial(ScalarQV::v_power(a.e * (n + 1) - a.shift2), a.e));
  for (const auto& a : den)
    dp = dp * (UPoly(ScalarQV(1)) - UPoly::monomial(ScalarQV::v_power(a.e * (n + 1) - a.shift2), a.e));
  return MellinSymbol::fraction(std::move(np), std::move(dp));
}

MellinSymbol gk_product(int n) {
  check_n(n, 6);
  std::vector<LFactorAtom> lnum, lden;
  for (int i = 1; i <= n; ++i) {
    lnum.push_back({1, n + 1 - 2 * i});
    lden.push_back({1, n + 1 - 2 * i + 2});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      lnum.push_back({2, 2 * (n + 1 - i - j)});
      lden.push_back({2, 2 * (n + 2 - i - j)});
    }
  }
  cancel_common(lnum, lden);
  // L-factors in the numerator put their binomials in the denominator.
  UPoly np(ScalarQV(1)), dp(ScalarQV(1));
  for (const auto& a : lden)
    np = np * (UPoly(ScalarQV(1)) - UPoly::monomial(ScalarQV::v_power(a.e * (n + 1) - a.shift2), a.e));
  for (const auto& a : lnum)
    dp = dp * (UPoly(ScalarQV(1)) - UPoly::monomial(ScalarQV::v_power(a.e * (n + 1) - a.shift2), a.e));
  return MellinSymbol::fraction(std::move(np), std::move(dp));
}

MellinSymbol fourier_multiplier(int n) {
  check_n(n, 8);
  MellinSymbol acc = MellinSymbol::one();
  for (const auto& a : d_factor(n).atoms) {
    // Reflection s -> -s, chi -> conjugate sends the atom (e, a) to (-e, a).
    acc = acc * one_minus(-a.e, -a.e * (n + 1) - a.shift2);
    acc = acc / one_minus(a.e, a.e * (n + 1) - a.shift2);
  }
  return acc;
}

}  // namespace bkx
