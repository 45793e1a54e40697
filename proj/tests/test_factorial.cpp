#include <doctest.h>

#include <facpol/combinat.hpp>
#include <facpol/factorial.hpp>
#include <facpol/numfam.hpp>

using namespace facpol;
using namespace facpol::fac;
namespace cb = facpol::combinat;

TEST_CASE("potential polynomials, small cases") {
  for (int n = 1; n <= 6; ++n) CHECK(potential(n, 1) == Polynomial::var(n));
  CHECK(to_canonical_string(potential(2, 2)) == "2*X0*X2 + 2*X1^2");
  CHECK(to_canonical_string(potential(1, -1)) == "-X0^-2*X1");
  CHECK(potential(0, 5) == Polynomial::var(0, 5));
  CHECK(potential(0, -3) == Polynomial::var(0, -3));
  CHECK(potential(3, 0).is_zero());
  CHECK(potential(0, 0) == Polynomial(Int(1)));
  CHECK_THROWS_AS(potential(-1, 2), std::domain_error);
}

TEST_CASE("potential with negative k specializes to k^n at all-ones") {
  for (int n = 0; n <= 6; ++n)
    for (long k = -5; k <= 5; ++k) {
      Rat val = Rat(potential(n, k).eval_all_ones());
      CHECK(val == rat_pow(Rat(k), n));
    }
}

TEST_CASE("lower and upper factorial polynomials at (2,2)") {
  Polynomial lower = lower_factorial_direct(2, 2);
  Polynomial upper = upper_factorial_direct(2, 2);
  CHECK(to_canonical_string(lower) == "2*X0*X2 + 2*X1^2 - X2");
  CHECK(to_canonical_string(upper) == "2*X0*X2 + 2*X1^2 + X2");
  CHECK(lower.eval_all_ones() == 3);
  CHECK(upper.eval_all_ones() == 5);
  for (int n = 1; n <= 5; ++n) {
    CHECK(lower_factorial_direct(n, 1) == Polynomial::var(n));
    CHECK(upper_factorial_direct(n, 1) == Polynomial::var(n));
  }
  CHECK(upper_factorial_direct(4, 0).is_zero());
  CHECK(lower_factorial_direct(0, 0) == Polynomial(Int(1)));
}

TEST_CASE("route equivalences, n,k <= 6") {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(lower_from_potential(n, k) == lower_factorial_direct(n, k));
      CHECK(upper_from_potential(n, k) == upper_factorial_direct(n, k));
      CHECK(potential_from_lower(n, k) == potential(n, k));
      CHECK(upper_from_lower(n, k) == upper_factorial_direct(n, k));
      CHECK(lower_from_upper(n, k) == lower_factorial_direct(n, k));
      CHECK(lower_factorial(n, k) == lower_factorial_direct(n, k));
      CHECK(upper_factorial(n, k) == upper_factorial_direct(n, k));
    }
}

TEST_CASE("all-ones values match the associated number families") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(lower_factorial(n, k).eval_all_ones() == numfam::lower_assoc(n, k));
      CHECK(upper_factorial(n, k).eval_all_ones() == numfam::upper_assoc(n, k));
    }
}

TEST_CASE("rising pre-expansion: rising(x,k) = sum_r c(k,r) x^r") {
  for (int k = 0; k <= 10; ++k)
    for (long x = -8; x <= 8; ++x) {
      Int s = 0;
      for (int r = 0; r <= k; ++r) s += cb::cycle(k, r) * int_pow(Int(x), r);
      CHECK(s == cb::rising(Int(x), k));
    }
}
