#include "bkx/global_check.hpp"

#include <cmath>

#include "bkx/errors.hpp"

namespace bkx {

namespace {

// First Bernoulli numbers B_2, B_4, ..., B_12.
const double kBernoulli[] = {1.0 / 6,  -1.0 / 30, 1.0 / 42,
                             -1.0 / 30, 5.0 / 66,  -691.0 / 2730};

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double hurwitz_zeta(double w, double a) {
  if (a <= 0) throw DomainError("hurwitz zeta needs a > 0");
  if (w == 1.0) throw DomainError("hurwitz zeta pole at w = 1");
  const int N = 24;
  double sum = 0.0;
  for (int k = 0; k < N; ++k) sum += std::pow(a + k, -w);
  const double x = a + N;
  sum += std::pow(x, 1.0 - w) / (w - 1.0);
  sum += 0.5 * std::pow(x, -w);
  // Euler-Maclaurin correction terms with ascending Pochhammer products.
  double poch = w;  // w (w+1) ... accumulated two at a time
  double xpow = std::pow(x, -w - 1.0);
  for (int j = 0; j < 6; ++j) {
    const int two_j = 2 * (j + 1);
    double fact = 1.0;
    for (int t = 2; t <= two_j; ++t) fact *= t;
    sum += kBernoulli[j] / fact * poch * xpow;
    // extend the product w(w+1)...(w+2j) for the next term
    poch *= (w + two_j - 1) * (w + two_j);
    xpow /= x * x;
  }
  return sum;
}

double riemann_zeta(double w) { return hurwitz_zeta(w, 1.0); }

double dirichlet_beta(double w) {
  return std::pow(4.0, -w) * (hurwitz_zeta(w, 0.25) - hurwitz_zeta(w, 0.75));
}

double upper_incomplete_gamma(double a, double x) {
  if (x <= 0) throw DomainError("incomplete gamma needs x > 0");
  // Lentz continued fraction; solid for x >= 1 and moderate a, which is the
  // only regime used here (x >= pi).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 400; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x)) * h;
}

double epstein_z_theta(double w) {
  if (w == 0.0 || w == 1.0) throw DomainError("epstein zeta pole/zero point");
  // pi^-w Gamma(w) Z(w) = 1/(w-1) - 1/w
  //   + sum'_xi [ (pi|xi|^2)^-w G(w, pi|xi|^2) + (pi|xi|^2)^(w-1) G(1-w, pi|xi|^2) ]
  // where G is the upper incomplete gamma; terms fall like exp(-pi|xi|^2).
  double acc = 1.0 / (w - 1.0) - 1.0 / w;
  const int L = 6;  // |xi|^2 <= 36 keeps terms below exp(-113)
  for (int m = -L; m <= L; ++m) {
    for (int k = -L; k <= L; ++k) {
      if (m == 0 && k == 0) continue;
      const double r2 = static_cast<double>(m * m + k * k);
      if (r2 > 36.0) continue;
      const double x = kPi * r2;
      acc += std::pow(x, -w) * upper_incomplete_gamma(w, x);
      acc += std::pow(x, w - 1.0) * upper_incomplete_gamma(1.0 - w, x);
    }
  }
  return acc * std::pow(kPi, w) / std::tgamma(w);
}

double eisenstein_value(double s, double lambda, bool epstein_by_product) {
  if (lambda <= 0) throw DomainError("gaussian scale must be positive");
  const double w = (s + 1.0) / 2.0;
  const double z = epstein_by_product
                       ? 4.0 * riemann_zeta(w) * dirichlet_beta(w)
                       : epstein_z_theta(w);
  const double gamma_r = std::pow(kPi, -(s + 1.0) / 2.0) * std::tgamma((s + 1.0) / 2.0);
  return 0.5 * std::pow(lambda, -(s + 1.0) / 2.0) * gamma_r * z;
}

double eisenstein_residue(double lambda, bool epstein_by_product) {
  // (s-1) E(s) is analytic at s = 1; its value there is the residue.  The
  // symmetric average at s = 1 +- h kills the odd Taylor terms, and one
  // Richardson step on h = 1e-3, 1e-4 removes the h^2 term.
  auto g = [&](double s) {
    return (s - 1.0) * eisenstein_value(s, lambda, epstein_by_product);
  };
  auto sym = [&](double h) { return 0.5 * (g(1.0 + h) + g(1.0 - h)); };
  const double a1 = sym(1e-3);
  const double a2 = sym(1e-4);
  return (100.0 * a2 - a1) / 99.0;
}

GlobalCheckReport verify_global_rank_one(double lambda, int radius, double tol) {
  if (lambda <= 0) throw DomainError("gaussian scale must be positive");
  if (radius < 1) throw DomainError("radius must be at least 1");
  GlobalCheckReport rep;
  rep.lambda = lambda;
  rep.radius = radius;
  rep.tol = tol;

  const CoefficientFunction b = basic_function(1);
  const std::vector<long> primes = {2, 3, 5};

  // Rational points on the degree-one space are rows (m1, m2); complete to a
  // determinant-one matrix to evaluate through the group.
  auto matrix_with_bottom_row = [](const mpq_class& m1, const mpq_class& m2) {
    const mpq_class nrm = m1 * m1 + m2 * m2;
    return SymplecticMatrix::from_entries(
        1, {{m2 / nrm, -m1 / nrm}, {m1, m2}});
  };

  for (int m1 = -radius; m1 <= radius; ++m1) {
    for (int m2 = -radius; m2 <= radius; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      if (m1 * m1 + m2 * m2 > radius * radius) continue;
      const SymplecticMatrix g = matrix_with_bottom_row(m1, m2);
      double finite_part = 1.0;
      for (long p : primes) {
        const ScalarQV value = evaluate(b, g, p);
        if (!(value == ScalarQV(1)))
          throw CheckFailed("finite factor differs from 1 at an integral point");
        finite_part *= value.eval_double(std::sqrt(static_cast<double>(p)));
      }
      ++rep.finite_points_checked;
      const double r2 = static_cast<double>(m1 * m1 + m2 * m2);
      rep.sum_phi += finite_part * std::exp(-kPi * lambda * r2);
      rep.sum_fphi += finite_part * (1.0 / lambda) * std::exp(-kPi * r2 / lambda);
    }
  }

  // Points with a denominator must die at the corresponding prime.
  const std::vector<std::pair<mpq_class, mpq_class>> bad_points = {
      {mpq_class(1, 2), mpq_class(3)},  {mpq_class(1), mpq_class(5, 3)},
      {mpq_class(7, 5), mpq_class(2)},  {mpq_class(1, 4), mpq_class(1, 6)},
      {mpq_class(11, 10), mpq_class(1)}};
  for (const auto& [m1, m2] : bad_points) {
    const SymplecticMatrix g = matrix_with_bottom_row(m1, m2);
    bool vanishes = false;
    for (long p : primes) {
      if (evaluate(b, g, p).is_zero()) vanishes = true;
    }
    if (!vanishes)
      throw CheckFailed("finite factor fails to vanish at a non-integral point");
  }

  rep.res_phi = eisenstein_residue(lambda, false);
  rep.res_phi_alt = eisenstein_residue(lambda, true);
  // The transform pairs the Gaussian of scale lambda with 1/lambda times the
  // Gaussian of scale 1/lambda.
  rep.res_fphi = (1.0 / lambda) * eisenstein_residue(1.0 / lambda, false);
  rep.res_fphi_alt = (1.0 / lambda) * eisenstein_residue(1.0 / lambda, true);
  rep.route_gap = std::max(std::fabs(rep.res_phi - rep.res_phi_alt),
                           std::fabs(rep.res_fphi - rep.res_fphi_alt));
  if (rep.route_gap > 1e-8)
    throw OracleDisagreement("residue routes differ beyond 1e-8");

  rep.lhs = rep.sum_phi + rep.res_fphi;
  rep.rhs = rep.sum_fphi + rep.res_phi;
  rep.discrepancy = std::fabs(rep.lhs - rep.rhs);
  rep.pass = rep.discrepancy < tol;
  return rep;
}

}  // namespace bkx
