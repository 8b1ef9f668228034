#include <doctest.h>

#include <complex>
#include <map>

#include "bkx/errors.hpp"
#include "bkx/mellin_symbol.hpp"

using bkx::MellinSymbol;
using bkx::ScalarQV;
using bkx::UPoly;

namespace {
const ScalarQV kQ = ScalarQV::q_power(1);

MellinSymbol geometric() {  // 1/(1-U)
  return MellinSymbol::one() / (MellinSymbol::one() - MellinSymbol::u_power(1));
}
}  // namespace

TEST_SUITE_BEGIN("mellin symbol");

TEST_CASE("canonical form strips U powers and the gcd") {
  const MellinSymbol s = geometric() * (MellinSymbol::one() - MellinSymbol::u_power(1));
  CHECK(s == MellinSymbol::one());

  // U^3 * (1 - U) / (U * (1 - U)) -> U^2
  const MellinSymbol t = MellinSymbol::fraction(
      UPoly(ScalarQV(1)) - UPoly::monomial(ScalarQV(1), 1),
      UPoly(ScalarQV(1)) - UPoly::monomial(ScalarQV(1), 1), 3, 1);
  CHECK(t == MellinSymbol::u_power(2));
  CHECK(t.floor() == 2);
}

TEST_CASE("floor bookkeeping") {
  const MellinSymbol spread = MellinSymbol::from_laurent(
      {{-2, ScalarQV(1)}, {1, ScalarQV(1)}});  // U^-2 + U
  CHECK(spread.floor() == -2);
  CHECK(spread.to_string() == "U^-2*(1+U^3)");

  const MellinSymbol num =
      MellinSymbol::one() -
      MellinSymbol::from_scalar(ScalarQV::q_power(-2)) * MellinSymbol::u_power(-1);
  const MellinSymbol den =
      MellinSymbol::one() -
      MellinSymbol::from_scalar(ScalarQV::q_power(-1)) * MellinSymbol::u_power(1);
  CHECK((num / den).floor() == -1);
}

TEST_CASE("geometric series expansion") {
  const auto ex = geometric().laurent(6);
  CHECK(ex.first == 0);
  REQUIRE(ex.coeffs.size() == 7);
  for (const auto& c : ex.coeffs) CHECK(c == ScalarQV(1));
  CHECK(geometric().laurent_coeff(-1).is_zero());
}

TEST_CASE("shifted product expansion") {
  // (1 - q^-2 U^-1) / (1 - U): c_-1 = -q^-2, then the constant 1 - q^-2.
  const MellinSymbol f =
      (MellinSymbol::one() -
       MellinSymbol::from_scalar(ScalarQV::q_power(-2)) * MellinSymbol::u_power(-1)) *
      geometric();
  CHECK(f.floor() == -1);
  CHECK(f.laurent_coeff(-1) == ScalarQV(0) - ScalarQV::q_power(-2));
  const ScalarQV plateau = ScalarQV(1) - ScalarQV::q_power(-2);
  CHECK(f.laurent_coeff(0) == plateau);
  CHECK(f.laurent_coeff(5) == plateau);
}

TEST_CASE("odd geometric series") {
  // U^3 / (1 - q U^2) has support 3, 5, 7, ... with weights 1, q, q^2.
  const MellinSymbol f =
      MellinSymbol::u_power(3) /
      (MellinSymbol::one() - MellinSymbol::from_scalar(kQ) * MellinSymbol::u_power(2));
  CHECK(f.floor() == 3);
  CHECK(f.laurent_coeff(3) == ScalarQV(1));
  CHECK(f.laurent_coeff(4).is_zero());
  CHECK(f.laurent_coeff(5) == kQ);
  CHECK(f.laurent_coeff(6).is_zero());
  CHECK(f.laurent_coeff(7) == kQ * kQ);
}

TEST_CASE("expansion of a product is the Cauchy product") {
  const MellinSymbol f = MellinSymbol::from_laurent(
                             {{-1, ScalarQV::q_power(-1)}, {2, ScalarQV(3)}}) /
                         (MellinSymbol::one() -
                          MellinSymbol::from_scalar(kQ) * MellinSymbol::u_power(1));
  const MellinSymbol g =
      (MellinSymbol::one() + MellinSymbol::u_power(2)) / geometric();
  const MellinSymbol prod = f * g;
  const int upto = 8;
  const auto ef = f.laurent(upto - g.floor());
  const auto eg = g.laurent(upto - f.floor());
  const auto ep = prod.laurent(upto);
  for (int m = prod.floor(); m <= upto; ++m) {
    ScalarQV acc;
    for (int i = f.floor(); i <= m - g.floor(); ++i) acc = acc + ef.at(i) * eg.at(m - i);
    CHECK(ep.at(m) == acc);
  }
}

TEST_CASE("sum and difference round-trip") {
  const MellinSymbol f = MellinSymbol::from_laurent({{-3, ScalarQV(2)}, {0, kQ}}) /
                         (MellinSymbol::one() -
                          MellinSymbol::from_scalar(ScalarQV::v_power(1)) *
                              MellinSymbol::u_power(1));
  const MellinSymbol g = geometric() * MellinSymbol::u_power(-1);
  CHECK((f + g) - g == f);
  CHECK(f - f == MellinSymbol::zero());
  CHECK((f + g) == (g + f));
  CHECK(-(-f) == f);
}

TEST_CASE("division errors") {
  CHECK_THROWS_AS(MellinSymbol::one() / MellinSymbol::zero(), bkx::DivisionByZero);
  CHECK_THROWS_AS(
      MellinSymbol::fraction(UPoly(ScalarQV(1)), UPoly(), 0, 0), bkx::DivisionByZero);
}

TEST_CASE("reflection substitutes U -> r/U") {
  const ScalarQV r = ScalarQV::q_power(-2);
  for (int c = -3; c <= 3; ++c) {
    const MellinSymbol image = MellinSymbol::u_power(c).substitute_u_inverse(r);
    ScalarQV want(1);
    for (int i = 0; i < (c < 0 ? -c : c); ++i)
      want = c > 0 ? want * r : want / r;
    CHECK(image == MellinSymbol::from_scalar(want) * MellinSymbol::u_power(-c));
  }

  const MellinSymbol f =
      (MellinSymbol::one() + MellinSymbol::from_scalar(kQ) * MellinSymbol::u_power(1)) /
      (MellinSymbol::one() -
       MellinSymbol::from_scalar(kQ * kQ) * MellinSymbol::u_power(2));
  SUBCASE("is an involution") {
    CHECK(f.substitute_u_inverse(r).substitute_u_inverse(r) == f);
  }
  SUBCASE("agrees with numeric substitution") {
    const double v0 = 1.3;
    const std::complex<double> u0(0.21, -0.37);
    const std::complex<double> r0(r.eval_double(v0), 0.0);
    const auto lhs = f.substitute_u_inverse(r).eval(v0, u0);
    const auto rhs = f.eval(v0, r0 / u0);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("numeric evaluation is a homomorphism") {
  const MellinSymbol f =
      (MellinSymbol::one() - MellinSymbol::from_scalar(kQ) * MellinSymbol::u_power(1)) /
      (MellinSymbol::one() + MellinSymbol::u_power(3));
  const MellinSymbol g = geometric() * MellinSymbol::u_power(-2);
  const double v0 = 1.7;
  const std::complex<double> u0(0.4, 0.1);
  CHECK(std::abs((f * g).eval(v0, u0) - f.eval(v0, u0) * g.eval(v0, u0)) < 1e-12);
  CHECK(std::abs((f + g).eval(v0, u0) - (f.eval(v0, u0) + g.eval(v0, u0))) < 1e-12);
}

TEST_CASE("evaluation matches the truncated expansion") {
  const MellinSymbol f = geometric();  // radius of convergence 1
  const std::complex<double> u0(0.5, 0.0);
  const int m = 40;
  std::complex<double> acc(0.0, 0.0);
  const auto ex = f.laurent(m);
  std::complex<double> upow(1.0, 0.0);
  for (int i = 0; i <= m; ++i) {
    acc += ex.at(i).eval_double(2.0) * upow;
    upow *= u0;
  }
  const double tail = std::pow(0.5, m + 1) / (1 - 0.5);
  CHECK(std::abs(f.eval(2.0, u0) - acc) <= tail + 1e-14);
}

TEST_CASE("evaluation pole detection") {
  CHECK_THROWS_AS(geometric().eval(2.0, {1.0, 0.0}), bkx::DivisionByZero);
}

TEST_CASE("printing") {
  CHECK(MellinSymbol::zero().to_string() == "0");
  CHECK(MellinSymbol::one().to_string() == "1");
  CHECK(MellinSymbol::u_power(1).to_string() == "U");
  CHECK(MellinSymbol::u_power(-2).to_string() == "U^-2*(1)");
  CHECK(geometric().to_string() == "(1)/(1-U)");
  const MellinSymbol f =
      (MellinSymbol::one() -
       MellinSymbol::from_scalar(ScalarQV::q_power(-2)) * MellinSymbol::u_power(-1)) /
      (MellinSymbol::one() - MellinSymbol::u_power(1));
  CHECK(f.to_string() == "U^-1*(-1/q^2+U)/(1-U)");
}

TEST_SUITE_END();
