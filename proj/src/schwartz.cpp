#include "bkx/schwartz.hpp"

#include "bkx/errors.hpp"
#include "bkx/weyl.hpp"

namespace bkx {

namespace {
void check_n(int n, int hi) {
  if (n < 1 || n > hi)
    throw DomainError("rank n out of range [1," + std::to_string(hi) + "]");
}
}  // namespace

CoefficientFunction CoefficientFunction::indicator(int n, int m) {
  check_n(n, 8);
  return CoefficientFunction(n, true, MellinSymbol::u_power(m));
}

CoefficientFunction CoefficientFunction::finite(int n, int first,
                                                std::vector<ScalarQV> coeffs) {
  check_n(n, 8);
  std::map<int, ScalarQV> m;
  for (size_t i = 0; i < coeffs.size(); ++i)
    m[first + static_cast<int>(i)] = std::move(coeffs[i]);
  return CoefficientFunction(n, true, MellinSymbol::from_laurent(m));
}

CoefficientFunction CoefficientFunction::rational(int n, MellinSymbol symbol) {
  check_n(n, 8);
  return CoefficientFunction(n, false, std::move(symbol));
}

ScalarQV CoefficientFunction::coefficient(int m) const {
  return symbol_.laurent_coeff(m);
}

std::vector<ScalarQV> CoefficientFunction::coefficients(int upto) const {
  return symbol_.laurent(upto).coeffs;
}

CoefficientFunction CoefficientFunction::operator+(const CoefficientFunction& o) const {
  if (n_ != o.n_) throw DomainError("rank mismatch");
  return CoefficientFunction(n_, finite_ && o.finite_, symbol_ + o.symbol_);
}

CoefficientFunction CoefficientFunction::operator-(const CoefficientFunction& o) const {
  if (n_ != o.n_) throw DomainError("rank mismatch");
  return CoefficientFunction(n_, finite_ && o.finite_, symbol_ - o.symbol_);
}

CoefficientFunction CoefficientFunction::scaled(const ScalarQV& s) const {
  return CoefficientFunction(n_, finite_, symbol_ * MellinSymbol::from_scalar(s));
}

bool CoefficientFunction::operator==(const CoefficientFunction& o) const {
  return n_ == o.n_ && symbol_ == o.symbol_;
}

MellinSymbol mellin(const CoefficientFunction& f) { return f.symbol(); }

CoefficientFunction inverse_mellin(int n, const MellinSymbol& symbol) {
  return CoefficientFunction::rational(n, symbol);
}

CoefficientFunction basic_function(int n) {
  check_n(n, 8);
  return CoefficientFunction::rational(n, d_factor(n).symbol(n));
}

std::vector<ScalarQV> basic_function_direct(int n, int upto) {
  check_n(n, 8);
  if (upto < 0) throw DomainError("upto must be nonnegative");
  // c_m = sum over b_1..b_f >= 0 with 2(b_1+..+b_f) <= m of
  //       q^(2*(1*b_1 + 2*b_2 + ... + f*b_f)),
  // the remaining a = m - 2*sum b_r contributing weight 1.
  const int f = n / 2;
  std::vector<ScalarQV> out(upto + 1, ScalarQV(0));
  std::vector<int> b(f, 0);
  // Iterate over all tuples with 2*sum(b) <= upto.
  while (true) {
    int sum = 0, weight = 0;
    for (int r = 0; r < f; ++r) {
      sum += b[r];
      weight += (r + 1) * b[r];
    }
    if (2 * sum <= upto) {
      const ScalarQV w = ScalarQV::q_power(2 * weight);
      for (int m = 2 * sum; m <= upto; ++m) out[m] = out[m] + w;
    }
    // Advance the tuple; carry resets keep the enumeration finite.
    int pos = 0;
    while (pos < f) {
      ++b[pos];
      int s = 0;
      for (int r = 0; r < f; ++r) s += b[r];
      if (2 * s <= upto) break;
      b[pos] = 0;
      ++pos;
    }
    if (pos == f) break;
  }
  return out;
}

CoefficientFunction fourier(const CoefficientFunction& f) {
  const int n = f.n();
  const MellinSymbol reflected =
      mellin(f).substitute_u_inverse(ScalarQV::q_power(-(n + 1)));
  return CoefficientFunction::rational(n, reflected * fourier_multiplier(n));
}

ScalarQV evaluate(const CoefficientFunction& f, const SymplecticMatrix& g, long p) {
  if (f.n() != g.n()) throw DomainError("rank mismatch between function and matrix");
  return f.coefficient(static_cast<int>(coset_index(g, p)));
}

}  // namespace bkx
