#include <doctest.h>

#include "bkx/errors.hpp"
#include "bkx/scalar.hpp"
#include "bkx/vpoly.hpp"

using bkx::ScalarQV;
using bkx::VPoly;

TEST_SUITE_BEGIN("vpoly");

TEST_CASE("zero polynomial conventions") {
  VPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK((z + z).is_zero());
  CHECK((z * VPoly(5)).is_zero());
  CHECK(VPoly(mpq_class(3, 4)).degree() == 0);
}

TEST_CASE("arithmetic and exact division") {
  // v^2 - 1 = (v - 1)(v + 1)
  const VPoly a = VPoly::monomial(1, 2) - VPoly(1);
  const VPoly b = VPoly::monomial(1, 1) - VPoly(1);
  const auto [q, r] = a.divmod(b);
  CHECK(r.is_zero());
  CHECK(q == VPoly::monomial(1, 1) + VPoly(1));
  CHECK(a.divide_exact(b) == q);
  CHECK(q * b == a);
}

TEST_CASE("divmod remainder") {
  const VPoly a = VPoly::monomial(1, 3) + VPoly(2);
  const VPoly b = VPoly::monomial(1, 2) + VPoly(1);
  const auto [q, r] = a.divmod(b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
}

TEST_CASE("gcd is monic") {
  const VPoly f = (VPoly::monomial(1, 1) - VPoly(1)) * (VPoly::monomial(1, 1) + VPoly(2));
  const VPoly g = (VPoly::monomial(1, 1) - VPoly(1)) * (VPoly::monomial(2, 1) + VPoly(6));
  const VPoly d = VPoly::gcd(f, g);
  CHECK(d == VPoly::monomial(1, 1) - VPoly(1));
  CHECK(VPoly::gcd(f, VPoly()) == f.monic());
}

TEST_CASE("evaluation at q only sees even powers") {
  const VPoly even = VPoly::monomial(3, 4) + VPoly(1);  // 3q^2 + 1
  CHECK(even.even_powers_only());
  CHECK(even.eval_at_q(mpq_class(2)) == 13);
  const VPoly odd = VPoly::monomial(1, 1);
  CHECK(!odd.even_powers_only());
  CHECK_THROWS_AS(odd.eval_at_q(mpq_class(2)), bkx::DomainError);
  CHECK(odd.eval(mpq_class(7)) == 7);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("scalar");

TEST_CASE("q is v squared") {
  const ScalarQV v = ScalarQV::v_power(1);
  CHECK(v * v == ScalarQV::q_power(1));
  CHECK((v * v).to_string() == "q");
  CHECK(ScalarQV::v_power(3).to_string() == "q*q_half");
  CHECK(ScalarQV::v_power(1).to_string() == "q_half");
  CHECK(ScalarQV::q_power(-2).to_string() == "1/q^2");
  CHECK(ScalarQV::v_power(-1).to_string() == "1/q_half");
}

TEST_CASE("reduction to lowest terms") {
  // (1 - q) / (1 - q_half) = 1 + q_half as polynomials in v.
  const ScalarQV num(VPoly(1) - VPoly::monomial(1, 2), VPoly(1));
  const ScalarQV den(VPoly(1) - VPoly::monomial(1, 1), VPoly(1));
  CHECK((num / den).to_string() == "1+q_half");
  // Common integer content must disappear: (2+2q)/4 -> (1+q)/2.
  const ScalarQV x(VPoly(2) + VPoly::monomial(2, 2), VPoly(4));
  CHECK(x.to_string() == "(1+q)/2");
}

TEST_CASE("denominator sign and coefficient denominators are normalized") {
  // 1 / (-1 + q_half) == -1 / (1 - q_half): leading coefficient positive.
  const ScalarQV a(VPoly(1), VPoly::monomial(1, 1) - VPoly(1));
  const ScalarQV b(VPoly(-1), VPoly(1) - VPoly::monomial(1, 1));
  CHECK(a == b);
  CHECK(a.to_string() == b.to_string());
  // Fractional coefficients get cleared: (1/2) / (1/3 + q) has integer form.
  const ScalarQV c(VPoly(mpq_class(1, 2)), VPoly(mpq_class(1, 3)) + VPoly::monomial(1, 2));
  CHECK(c.to_string() == "3/(2+6*q)");
}

TEST_CASE("field operations") {
  const ScalarQV q = ScalarQV::q_power(1);
  const ScalarQV one(1);
  const ScalarQV x = (one - q.inverse());  // 1 - 1/q
  CHECK(x * q == q - one);
  CHECK(x + q.inverse() == one);
  CHECK((q / q) == one);
  CHECK_THROWS_AS(one / ScalarQV(0), bkx::DivisionByZero);
  CHECK_THROWS_AS(ScalarQV(0).inverse(), bkx::DivisionByZero);
}

TEST_CASE("exact evaluation") {
  const ScalarQV q = ScalarQV::q_power(1);
  const ScalarQV r = (ScalarQV(1) - q * q) / (ScalarQV(1) - q);  // 1 + q
  CHECK(r.eval_at_q(mpq_class(9)) == 10);
  CHECK(r.eval(mpq_class(3)) == 10);  // v = 3 means q = 9
  CHECK(r.eval_double(3.0) == doctest::Approx(10.0));
  const ScalarQV pole = ScalarQV(1) / (ScalarQV(1) - q);
  CHECK_THROWS_AS(pole.eval_at_q(mpq_class(1)), bkx::DivisionByZero);
}

TEST_CASE("printing round corners") {
  CHECK(ScalarQV(0).to_string() == "0");
  CHECK(ScalarQV(-7).to_string() == "-7");
  CHECK(ScalarQV(mpq_class(3, 5)).to_string() == "3/5");
  const ScalarQV q = ScalarQV::q_power(1);
  CHECK((ScalarQV(1) - q.inverse()).to_string() == "(-1+q)/q");
  CHECK((ScalarQV(2) * q).to_string() == "2*q");
}

TEST_SUITE_END();
