#include <doctest.h>

#include <facpol/combinat.hpp>
#include <facpol/numfam.hpp>

#include <random>

using namespace facpol;
using namespace facpol::numfam;
namespace cb = facpol::combinat;

TEST_CASE("associated families, small values") {
  CHECK(upper_assoc(2, 2) == 5);
  CHECK(upper_assoc(2, 3) == 23);
  CHECK(upper_assoc(7, 1) == 1);
  CHECK(upper_assoc(3, 2) == 9);
  CHECK(lower_assoc(2, 2) == 3);
  CHECK(lower_assoc(2, 3) == -1);
  CHECK(lower_assoc(5, 1) == 1);
  CHECK(lower_assoc(1, 3) == -1);
  CHECK(upper_assoc(4, 0) == 0);
  CHECK_THROWS_AS(upper_assoc(0, 3), std::domain_error);
  CHECK_THROWS_AS(lower_assoc(-2, 3), std::domain_error);
}

TEST_CASE("power sum reduction equals the direct sum for every scheme") {
  std::mt19937_64 rng(4242);
  for (long n = 1; n <= 20; ++n)
    for (long k = 1; k <= 20; ++k) {
      for (WeightScheme scheme : {WeightScheme{WeightScheme::Ones{}},
                                  WeightScheme{WeightScheme::Cycle{}},
                                  WeightScheme{WeightScheme::Stirling1Signed{}}})
        CHECK(power_sum_reduce(scheme, n, k) == power_sum_direct(scheme, n, k));
      std::vector<Int> w;
      for (long r = 0; r < k; ++r) w.emplace_back(static_cast<long>(rng() % 21) - 10);
      WeightScheme custom{WeightScheme::Custom{std::move(w)}};
      CHECK(power_sum_reduce(custom, n, k) == power_sum_direct(custom, n, k));
    }
}

TEST_CASE("named schemes reproduce the associated families") {
  CHECK(power_sum_reduce({WeightScheme::Ones{}}, 2, 3) == 14);
  CHECK(power_sum_reduce({WeightScheme::Cycle{}}, 2, 3) == 23);
  CHECK(power_sum_reduce({WeightScheme::Stirling1Signed{}}, 2, 3) == -1);
  for (long n = 1; n <= 10; ++n)
    for (long k = 1; k <= 10; ++k) {
      CHECK(power_sum_direct({WeightScheme::Cycle{}}, n, k) == upper_assoc(n, k));
      CHECK(power_sum_direct({WeightScheme::Stirling1Signed{}}, n, k) == lower_assoc(n, k));
    }
  CHECK_THROWS_AS(power_sum_direct({WeightScheme::Custom{{Int(1)}}}, 2, 3),
                  std::invalid_argument);
}

TEST_CASE("upper summation rule for unit weights") {
  CHECK(sum_rule_ones(3, 1) == 6);
  CHECK(sum_rule_ones(4, 2) == 10);
  CHECK(sum_rule_ones(5, 5) == 1);
  CHECK_THROWS_AS(sum_rule_ones(3, 4), std::domain_error);
  for (long k = 1; k <= 20; ++k)
    for (long j = 1; j <= k; ++j) {
      Int direct = 0;
      for (long r = j; r <= k; ++r) direct += cb::binomial(r, j);
      CHECK(sum_rule_ones(k, j) == direct);
    }
}

TEST_CASE("prop42 and prop44 right-hand sides") {
  CHECK(prop42_rhs(2, 3) == 23);
  CHECK(prop42_rhs(1, 1) == 1);
  CHECK(prop42_rhs(3, 2) == 9);
  CHECK(prop44_rhs(2, 3) == -1);
  CHECK(prop44_rhs(2, 2) == 3);
  for (long k = 2; k <= 12; ++k) {
    Int expect = cb::factorial(k - 2);
    if (k % 2 != 0) expect = -expect;
    CHECK(prop44_rhs(1, k) == expect);
  }
  for (long n = 1; n <= 20; ++n)
    for (long k = 1; k <= 20; ++k) {
      CHECK(prop42_rhs(n, k) == upper_assoc(n, k));
      CHECK(prop44_rhs(n, k) == lower_assoc(n, k));
    }
  CHECK_THROWS_AS(prop42_rhs(0, 1), std::domain_error);
  CHECK_THROWS_AS(prop44_rhs(1, 0), std::domain_error);
}

TEST_CASE("upper summation lemma for first-kind weights") {
  CHECK(prf1_lhs(1, 0) == 1); // both sides 1 in the base case
  CHECK(prf1_lhs(3, 1) == -3);
  CHECK(prf1_lhs(4, 2) == -12);
  CHECK_THROWS_AS(prf1_lhs(3, 3), std::domain_error);
  for (long k = 1; k <= 25; ++k)
    for (long j = 0; j <= k - 1; ++j)
      CHECK(prf1_lhs(k, j) == k * cb::stirling1_signed(k - 1, j));
}

TEST_CASE("closing identities for n = 1, 2, 3") {
  CHECK(closing_identity_coeffs(1) == std::vector<Int>{1});
  CHECK(closing_identity_coeffs(2) == std::vector<Int>{3, -2});
  CHECK(closing_identity_coeffs(3) == std::vector<Int>{7, -12, 6});
  CHECK_THROWS_AS(closing_identity_coeffs(0), std::domain_error);
  CHECK_THROWS_AS(closing_identity_coeffs(4), std::domain_error);
  for (int n = 1; n <= 3; ++n) {
    auto coeffs = closing_identity_coeffs(n);
    for (long k = 2; k <= 20; ++k) {
      Int lhs = 0;
      for (long r = 1; r <= k; ++r) {
        Int t = cb::cycle(k, r) * int_pow(Int(r), n);
        lhs += (r % 2 != 0) ? -t : t;
      }
      Int rhs = 0;
      for (int m = 1; m <= n; ++m) rhs += coeffs[m - 1] * cb::cycle(k - 1, m);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("the misprinted index variant fails") {
  bool any_mismatch = false;
  for (long k = 2; k <= 20; ++k) {
    Int lhs = 0;
    for (long r = 1; r <= k; ++r) {
      Int t = cb::cycle(k, r) * int_pow(Int(r), 3);
      lhs += (r % 2 != 0) ? -t : t;
    }
    if (lhs != closing_n3_literal_k_minus_10_rhs(k)) any_mismatch = true;
  }
  CHECK(any_mismatch);
}
