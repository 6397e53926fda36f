#include <doctest.h>

#include "gjt/bounds.hpp"
#include "gjt/error.hpp"
#include "gjt/wilson.hpp"
#include "support/oracles.hpp"

using namespace gjt;

namespace {

Rational q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

Rational binq(long n, long k) { return Rational(oracle::pascal(n, k)); }

}  // namespace

TEST_CASE("wilson_coeffs examples") {
  CHECK(wilson_coeffs(SchemeParams(7, 3), 2).coeffs == std::vector<Rational>{q(-1), q(1, 3)});
  CHECK(wilson_coeffs(SchemeParams(6, 3), 2).coeffs == std::vector<Rational>{q(-2), q(1, 2)});
  for (int k = 1; k <= 6; ++k) {
    for (int n = 2 * k; n <= 2 * k + 5; ++n) {
      const auto w = wilson_coeffs(SchemeParams(n, k), 1);
      REQUIRE(w.coeffs.size() == 1);
      CHECK(w.coeffs[0] == Rational(1) / binq(n - k - 1, k - 1));
    }
  }
}

TEST_CASE("wilson_coeffs rejects vanishing denominators") {
  CHECK_THROWS_WITH_AS(wilson_coeffs(SchemeParams(5, 3), 2), doctest::Contains("denominator"), RangeError);
  CHECK_THROWS_AS(wilson_coeffs(SchemeParams(9, 3), 4), RangeError);
  CHECK_THROWS_AS(wilson_coeffs(SchemeParams(9, 3), 0), RangeError);
}

TEST_CASE("wilson_vector examples") {
  const SchemeVector a = wilson_vector(SchemeParams(7, 3), 2);
  CHECK(a.entries() == std::vector<Rational>{q(0), q(1, 3), q(0), q(0)});
  const SchemeVector b = wilson_vector(SchemeParams(8, 3), 2);
  // c_0 = -C(2,1)/C(3,1), c_1 = 1/C(4,1); a_0 = c_0 C(3,3) + c_1 C(3,2).
  CHECK(b[0] == q(-2, 3) + q(1, 4) * q(3));
  CHECK(b[0] == q(1, 12));
}

TEST_CASE("wilson_vector vanishes for s >= t") {
  for (int k = 1; k <= 8; ++k) {
    for (int t = 1; t <= k; ++t) {
      for (int n = 2 * k; n <= 2 * k + 6; ++n) {
        const SchemeVector a = wilson_vector(SchemeParams(n, k), t);
        for (int s = t; s <= k; ++s) CHECK(a[s] == Rational(0));
      }
    }
  }
}

TEST_CASE("wilson_eigs examples") {
  const EigTable e73 = wilson_eigs(SchemeParams(7, 3), 2);
  CHECK(e73.values[0] == q(6));
  CHECK(e73.values[1] == q(-1));
  CHECK(e73.values[2] == q(-1));
  const EigTable e63 = wilson_eigs(SchemeParams(6, 3), 2);
  CHECK(e63.values[0] == binq(6, 3) / binq(4, 1) - q(1));
  CHECK(e63.values[0] == q(4));
  CHECK(e63.values[1] == q(-1));
  CHECK(e63.values[2] == q(-1));
  const EigTable e94 = wilson_eigs(SchemeParams(9, 4), 2);
  CHECK(e94.values[1] == q(-1));
  CHECK(e94.values[2] == q(-1));
  CHECK(e94.min() >= q(-1));
}

TEST_CASE("wilson eigenvalue lemma holds pointwise for k <= 8") {
  for (int k = 1; k <= 8; ++k) {
    for (int t = 1; t <= k; ++t) {
      for (int n = 2 * k; n <= k * k + 2; ++n) {
        const SchemeParams p(n, k);
        const EigTable e = wilson_eigs(p, t);
        CHECK(e.values[0] == binq(n, k) / binq(n - t, k - t) - q(1));
        for (int j = 1; j <= t; ++j) CHECK(e.values[j] == q(-1));
        if (n >= (t + 1) * (k - t + 1)) CHECK(e.min() >= q(-1));
      }
    }
  }
}

TEST_CASE("build_certificate examples") {
  SUBCASE("(7,3,2): feasible, tight, bound 5") {
    const Certificate c = build_certificate(SchemeParams(7, 3), 2);
    CHECK(c.entry_feasible_for_theta_prime);
    CHECK(c.entry_tight_for_theta);
    CHECK(c.eig_ok);
    CHECK(c.bound == q(5));
    CHECK(c.matrix[0] == q(1));
    CHECK(c.spec.allowed() == std::vector<int>{0, 2});
  }
  SUBCASE("(6,3,2): feasible, not tight") {
    const Certificate c = build_certificate(SchemeParams(6, 3), 2);
    CHECK(c.entry_feasible_for_theta_prime);
    CHECK_FALSE(c.entry_tight_for_theta);
    CHECK(c.matrix[0] == q(1) - q(4) * q(-1, 2));
    CHECK(c.matrix[0] == q(3));
    CHECK(c.eig_ok);
    CHECK(c.bound == q(4));
  }
  SUBCASE("(8,3,2): entry check fails") {
    const Certificate c = build_certificate(SchemeParams(8, 3), 2);
    CHECK_FALSE(c.entry_feasible_for_theta_prime);
    CHECK(c.matrix[0] == q(1, 2));
    CHECK_FALSE(c.certified());
  }
  SUBCASE("range errors") {
    CHECK_THROWS_AS(build_certificate(SchemeParams(7, 3), 1), RangeError);
    CHECK_THROWS_AS(build_certificate(SchemeParams(9, 3), 3), RangeError);
    CHECK_THROWS_WITH_AS(build_certificate(SchemeParams(5, 3), 2), doctest::Contains("n >= 2k"), RangeError);
  }
}

TEST_CASE("certificate agrees with J on classes s >= t and keeps the diagonal at 1") {
  for (int k = 3; k <= 8; ++k) {
    for (int t = 2; 2 * t <= k + 2; ++t) {
      for (int n = 2 * k; n <= k * k; ++n) {
        const Certificate c = build_certificate(SchemeParams(n, k), t);
        for (int s = t; s <= k; ++s) CHECK(c.matrix[s] == q(1));
        CHECK(c.eigs.values[0] == c.bound);
      }
    }
  }
}

TEST_CASE("certificate_range_scan examples") {
  SUBCASE("k=3, t=2") {
    const auto scan = certificate_range_scan(3, 2);
    REQUIRE(scan.size() == 4);
    std::vector<int> ns;
    std::vector<bool> feasible;
    for (const auto& c : scan) {
      ns.push_back(c.spec.params().n());
      feasible.push_back(c.certified());
    }
    CHECK(ns == std::vector<int>{6, 7, 8, 9});
    CHECK(feasible == std::vector<bool>{true, true, false, false});
  }
  SUBCASE("k=4, t=3 collapses to n = 8") {
    const NRange r = certificate_range(4, 3);
    CHECK(r.lo == 8);
    CHECK(r.hi == 8);
    for (const auto& c : certificate_range_scan(4, 3)) {
      CHECK(c.certified() == (c.spec.params().n() == 8));
    }
  }
  SUBCASE("k=4, t=2 feasible on 9..13") {
    for (const auto& c : certificate_range_scan(4, 2)) {
      const int n = c.spec.params().n();
      CHECK(c.certified() == (n >= 9 && n <= 13));
    }
  }
}

TEST_CASE("entry feasibility at s = 0, t = 2 holds exactly when n <= k^2 - k + 1") {
  for (int k = 3; k <= 8; ++k) {
    for (int n = 3 * k - 3; n <= k * k + k; ++n) {
      const Certificate c = build_certificate(SchemeParams(n, k), 2);
      CHECK((c.matrix[0] >= q(1)) == (n <= k * k - k + 1));
    }
  }
}

TEST_CASE("a feasible certificate bounds the theta' LP from above") {
  for (int k = 3; k <= 6; ++k) {
    for (int t = 2; 2 * t <= k + 2; ++t) {
      for (const Certificate& c : certificate_range_scan(k, t)) {
        if (c.certified()) CHECK(theta_prime_lp(c.spec) <= c.bound);
      }
    }
  }
}
