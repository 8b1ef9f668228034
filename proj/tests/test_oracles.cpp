#include <complex>
#include <limits>

#include "bkx/errors.hpp"
#include "bkx/oracles.hpp"
#include "bkx/schwartz.hpp"
#include "doctest.h"

using namespace bkx;

namespace {

double gap(const ShellSumReport& rep) {
  return std::abs(rep.partial - rep.closed_form);
}

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

TEST_SUITE("shell sum oracle") {
  TEST_CASE("frozen sample point q=5 z=1 s=2") {
    const auto rep = rank_one_shell_sum(5, {1.0, 0.0}, {2.0, 0.0}, 30);
    // (1 - 5^-3) / (1 - 5^-2) = 31/30
    CHECK(std::abs(rep.closed_form - 31.0 / 30.0) < 1e-13);
    CHECK(gap(rep) <= rep.tail_bound + 64 * kEps);
    CHECK(rep.shells == 30);
  }

  TEST_CASE("agreement across a spread of parameters") {
    const std::complex<double> zs[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    const std::complex<double> ss[] = {{0.5, 0}, {1, 0}, {2, 0.5}, {1, 1}};
    for (long q : {2L, 3L, 7L, 11L})
      for (const auto& z : zs)
        for (const auto& s : ss) {
          const auto rep = rank_one_shell_sum(q, z, s, 40);
          CHECK(gap(rep) <= rep.tail_bound + 64 * kEps);
        }
  }

  TEST_CASE("more shells shrink the gap on the positive line") {
    // z = 1 and real s make every dropped term positive, so the distance to
    // the closed form must strictly decrease with each added shell.
    const auto a = rank_one_shell_sum(3, {1, 0}, {0.5, 0}, 10);
    const auto b = rank_one_shell_sum(3, {1, 0}, {0.5, 0}, 11);
    const auto c = rank_one_shell_sum(3, {1, 0}, {0.5, 0}, 20);
    CHECK(gap(b) < gap(a));
    CHECK(gap(c) < gap(b));
    CHECK(a.closed_form == b.closed_form);
  }

  TEST_CASE("tail bound decreases in K and in Re(s)") {
    const auto a = rank_one_shell_sum(5, {1, 0}, {1, 0}, 10);
    const auto b = rank_one_shell_sum(5, {1, 0}, {1, 0}, 20);
    const auto c = rank_one_shell_sum(5, {1, 0}, {2, 0}, 10);
    CHECK(b.tail_bound < a.tail_bound);
    CHECK(c.tail_bound < a.tail_bound);
    CHECK(a.tail_bound > 0);
  }

  TEST_CASE("rejects parameters outside the convergent range") {
    CHECK_THROWS_AS(rank_one_shell_sum(1, {1, 0}, {2, 0}, 10), DomainError);
    CHECK_THROWS_AS(rank_one_shell_sum(5, {1, 0}, {2, 0}, 0), DomainError);
    CHECK_THROWS_AS(rank_one_shell_sum(5, {1, 0}, {-1, 0}, 10), DomainError);
    CHECK_THROWS_AS(rank_one_shell_sum(5, {1, 0}, {0, 1}, 10), DomainError);
  }
}

TEST_SUITE("classical transform oracle") {
  TEST_CASE("pattern coefficients") {
    const auto f = classical_fourier_pattern(2);
    CHECK(f.floor() == -2);
    for (int m = -2; m <= 5; ++m)
      CHECK(f.coefficient(m) == ScalarQV::q_power(-4));
    CHECK(f.coefficient(-3).is_zero());
  }

  TEST_CASE("shifted basic coefficients") {
    const auto f = shifted_basic_rank_one(-1);
    CHECK(f.floor() == -1);
    for (int m = -1; m <= 6; ++m) CHECK(f.coefficient(m) == ScalarQV(1));
    CHECK(f.coefficient(-2).is_zero());
  }

  TEST_CASE("transform of shifted indicators matches the plane picture") {
    for (int c = -3; c <= 3; ++c) {
      const auto lhs = fourier(shifted_basic_rank_one(c));
      const auto rhs = classical_fourier_pattern(c);
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("shift zero is the basic function") {
    CHECK(shifted_basic_rank_one(0) == basic_function(1));
    CHECK(classical_fourier_pattern(0) == basic_function(1));
  }
}
