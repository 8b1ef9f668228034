#include "bkx/oracles.hpp"

#include <cmath>

#include "bkx/errors.hpp"
#include "bkx/weyl.hpp"

namespace bkx {

ShellSumReport rank_one_shell_sum(long q, std::complex<double> z,
                                  std::complex<double> s, int K) {
  if (q < 2) throw DomainError("q must be at least 2");
  if (s.real() <= 0) throw DomainError("shell sum needs Re(s) > 0");
  if (K < 1) throw DomainError("need at least one shell");
  const double qd = static_cast<double>(q);
  const std::complex<double> x = z * std::exp(-s * std::log(qd));
  std::complex<double> sum(1.0, 0.0);
  std::complex<double> xk(1.0, 0.0);
  for (int k = 1; k <= K; ++k) {
    xk *= x;
    sum += (1.0 - 1.0 / qd) * xk;
  }

  // Closed form: the normalized quotient at the full subset for rank one,
  // evaluated at U = z q^(-s-1) (and v = sqrt(q)).
  const MellinSymbol c1 = c_symbol(make_coset(1, {1}));
  const std::complex<double> u0 = z * std::exp(-(s + 1.0) * std::log(qd));
  const std::complex<double> closed = c1.eval(std::sqrt(qd), u0);

  const double re = s.real();
  const double tail = (1.0 - 1.0 / qd) * std::pow(qd, -(K + 1) * re) /
                      (1.0 - std::pow(qd, -re));
  return ShellSumReport{sum, closed, tail, K};
}

CoefficientFunction classical_fourier_pattern(int c) {
  // q^(-2c) times the geometric series starting at index -c.
  const MellinSymbol series =
      MellinSymbol::u_power(-c) /
      (MellinSymbol::one() - MellinSymbol::u_power(1));
  return CoefficientFunction::rational(
      1, MellinSymbol::from_scalar(ScalarQV::q_power(-2 * c)) * series);
}

CoefficientFunction shifted_basic_rank_one(int c) {
  const MellinSymbol series =
      MellinSymbol::u_power(c) /
      (MellinSymbol::one() - MellinSymbol::u_power(1));
  return CoefficientFunction::rational(1, series);
}

}  // namespace bkx
