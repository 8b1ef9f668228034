#include <cmath>

#include "bkx/errors.hpp"
#include "bkx/global_check.hpp"
#include "doctest.h"

using namespace bkx;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("special functions") {
  TEST_CASE("zeta values") {
    CHECK(std::fabs(riemann_zeta(2.0) - kPi * kPi / 6.0) < 1e-12);
    CHECK(std::fabs(riemann_zeta(3.0) - 1.2020569031595943) < 1e-12);
    CHECK(std::fabs(riemann_zeta(4.0) - kPi * kPi * kPi * kPi / 90.0) < 1e-12);
  }

  TEST_CASE("hurwitz zeta specializations") {
    // sum over half-integers: zeta(2, 1/2) = 3 zeta(2)
    CHECK(std::fabs(hurwitz_zeta(2.0, 0.5) - 3.0 * riemann_zeta(2.0)) < 1e-12);
    // shifting the offset drops the first term
    CHECK(std::fabs(hurwitz_zeta(3.0, 2.0) - (riemann_zeta(3.0) - 1.0)) <
          1e-13);
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
  }

  TEST_CASE("beta values") {
    CHECK(std::fabs(dirichlet_beta(2.0) - 0.91596559417721902) < 1e-12);
    CHECK(std::fabs(dirichlet_beta(3.0) - kPi * kPi * kPi / 32.0) < 1e-12);
    // beta(1) = pi/4 is finite, but the implementation reaches it through
    // the Hurwitz series, which stops at its pole.
    CHECK_THROWS_AS(dirichlet_beta(1.0), DomainError);
  }

  TEST_CASE("incomplete gamma") {
    for (double x : {1.0, kPi, 10.0}) {
      CHECK(std::fabs(upper_incomplete_gamma(1.0, x) - std::exp(-x)) <
            1e-14 * std::exp(-x) + 1e-300);
    }
    // recurrence G(a+1,x) = a G(a,x) + x^a e^-x
    const double a = 1.5, x = kPi;
    const double lhs = upper_incomplete_gamma(a + 1.0, x);
    const double rhs =
        a * upper_incomplete_gamma(a, x) + std::pow(x, a) * std::exp(-x);
    CHECK(std::fabs(lhs - rhs) < 1e-12 * std::fabs(lhs));
    CHECK_THROWS_AS(upper_incomplete_gamma(1.0, 0.0), DomainError);
  }
}

TEST_SUITE("lattice zeta routes") {
  TEST_CASE("theta route matches the product route") {
    for (double w : {1.5, 2.0, 3.0, 0.75}) {
      const double via_theta = epstein_z_theta(w);
      const double via_product =
          4.0 * riemann_zeta(w) * dirichlet_beta(w);
      CHECK(std::fabs(via_theta - via_product) < 1e-10);
    }
    // spot value: Z(2) = 4 zeta(2) beta(2)
    CHECK(std::fabs(epstein_z_theta(2.0) - 6.0268120396919401) < 1e-10);
    CHECK_THROWS_AS(epstein_z_theta(1.0), DomainError);
    CHECK_THROWS_AS(epstein_z_theta(0.0), DomainError);
  }

  TEST_CASE("eisenstein value agrees across routes") {
    for (double s : {2.0, 3.0}) {
      for (double lambda : {0.5, 1.0, 2.0}) {
        const double a = eisenstein_value(s, lambda, false);
        const double b = eisenstein_value(s, lambda, true);
        CHECK(std::fabs(a - b) < 1e-10 * std::fabs(a));
      }
    }
    CHECK_THROWS_AS(eisenstein_value(2.0, 0.0, false), DomainError);
  }

  TEST_CASE("residue scales like 1/lambda") {
    for (double lambda : {0.5, 1.0, 2.0, 3.0}) {
      const double r = eisenstein_residue(lambda, false);
      CHECK(std::fabs(r - 1.0 / lambda) < 1e-8);
      CHECK(std::fabs(r - eisenstein_residue(lambda, true)) < 1e-8);
    }
  }
}

TEST_SUITE("global summation check") {
  TEST_CASE("balanced case lambda = 1") {
    const auto rep = verify_global_rank_one(1.0, 10, 1e-8);
    CHECK(rep.pass);
    CHECK(rep.discrepancy < 1e-8);
    CHECK(rep.route_gap < 1e-8);
    CHECK(rep.finite_points_checked > 100);
    CHECK(std::fabs(rep.res_phi - 1.0) < 1e-8);
    CHECK(std::fabs(rep.res_fphi - 1.0) < 1e-8);
    // scale 1 is self-dual, so the two theta sums coincide
    CHECK(std::fabs(rep.sum_phi - rep.sum_fphi) < 1e-13);
  }

  TEST_CASE("theta sums satisfy the modular identity") {
    // sum_phi - sum_fphi = 1/lambda - 1 up to a truncation error far below
    // double precision at radius 10.
    for (double lambda : {0.5, 2.0, 3.0}) {
      const auto rep = verify_global_rank_one(lambda, 10, 1e-8);
      CHECK(std::fabs((rep.sum_phi - rep.sum_fphi) - (1.0 / lambda - 1.0)) <
            1e-12);
      CHECK(rep.pass);
      CHECK(std::fabs(rep.lhs - rep.rhs) == rep.discrepancy);
    }
  }

  TEST_CASE("rejects bad parameters") {
    CHECK_THROWS_AS(verify_global_rank_one(0.0, 10, 1e-8), DomainError);
    CHECK_THROWS_AS(verify_global_rank_one(-1.0, 10, 1e-8), DomainError);
    CHECK_THROWS_AS(verify_global_rank_one(1.0, 0, 1e-8), DomainError);
  }
}
