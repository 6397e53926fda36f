#include <doctest.h>

#include <random>

#include "gjt/alpha.hpp"
#include "gjt/bounds.hpp"
#include "gjt/error.hpp"
#include "support/oracles.hpp"

using namespace gjt;

namespace {

Rational binq(long n, long k) { return Rational(oracle::pascal(n, k)); }

LSystemSpec random_spec(std::mt19937& rng, int n, int k) {
  std::vector<int> allowed;
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < k; ++s) {
    if (coin(rng)) allowed.push_back(s);
  }
  return LSystemSpec(SchemeParams(n, k), allowed);
}

}  // namespace

TEST_CASE("theta_prime_lp examples") {
  CHECK(theta_prime_lp(LSystemSpec(SchemeParams(7, 3), {0, 2})) == Rational(5));
  CHECK(theta_prime_lp(LSystemSpec(SchemeParams(5, 2), {})) == Rational(1));
  for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {8, 4}, {5, 2}, {4, 3}}) {
    std::vector<int> all;
    for (int s = 0; s < k; ++s) all.push_back(s);
    CHECK(theta_prime_lp(LSystemSpec(SchemeParams(n, k), all)) == binq(n, k));
    CHECK(theta_lp(LSystemSpec(SchemeParams(n, k), all)) == binq(n, k));
  }
}

TEST_CASE("theta_lp examples") {
  CHECK(theta_lp(LSystemSpec(SchemeParams(7, 3), {0, 2})) == Rational(5));
  CHECK(theta_lp(LSystemSpec(SchemeParams(6, 3), {0, 2})) == closed_form_theta_gnk1(SchemeParams(6, 3)));
  CHECK(theta_lp(LSystemSpec(SchemeParams(6, 3), {0, 2})) == Rational(5));
}

TEST_CASE("optimal matrices are feasible and attain the optimum") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {9, 4}, {12, 4}}) {
    const LSystemSpec spec = LSystemSpec::missing_one(SchemeParams(n, k), 1);
    for (ThetaKind kind : {ThetaKind::schrijver, ThetaKind::lovasz}) {
      const SchemeVector m = theta_optimal_matrix(spec, kind);
      for (int s = 0; s <= k; ++s) {
        if (!spec.non_edge(s)) continue;
        if (kind == ThetaKind::lovasz) {
          CHECK(m[s] == Rational(1));
        } else {
          CHECK(m[s] >= Rational(1));
        }
      }
      const Rational value = kind == ThetaKind::lovasz ? theta_lp(spec) : theta_prime_lp(spec);
      CHECK(eig_of_vector(m).max() == value);
    }
  }
}

TEST_CASE("theta programs carry dual certificates") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}, {9, 4}, {13, 4}, {20, 5}}) {
    for (ThetaKind kind : {ThetaKind::schrijver, ThetaKind::lovasz}) {
      const LinearProgram lp = scheme_theta_program(LSystemSpec::missing_one(SchemeParams(n, k), 1), kind);
      const LPSolution sol = lp_solve(lp);
      REQUIRE(sol.status == LPStatus::optimal);
      CHECK(oracle::dual_certifies(lp, sol));
      if (k <= 4) CHECK(oracle::vertex_enumeration(lp) == sol.value);
    }
  }
}

TEST_CASE("closed_form_theta_gnk1 examples and regime") {
  CHECK(closed_form_theta_gnk1(SchemeParams(7, 3)) == Rational(BigInt(2), BigInt(14)) * Rational(35));
  CHECK(closed_form_theta_gnk1(SchemeParams(7, 3)) == Rational(5));
  CHECK(closed_form_theta_gnk1(SchemeParams(6, 3)) == Rational(5));
  CHECK(closed_form_theta_gnk1(SchemeParams(13, 4)) == Rational(55));
  CHECK(closed_form_theta_gnk1(SchemeParams(13, 4)) == binq(11, 2));
  CHECK_THROWS_WITH_AS(closed_form_theta_gnk1(SchemeParams(14, 4)), doctest::Contains("3k-3 <= n <= k^2-k+1"),
                       RangeError);
  CHECK_THROWS_AS(closed_form_theta_gnk1(SchemeParams(8, 4)), RangeError);
  CHECK_THROWS_AS(closed_form_theta_gnk1(SchemeParams(4, 2)), RangeError);
}

TEST_CASE("separation_report examples") {
  const BoundReport a = separation_report(SchemeParams(6, 3));
  CHECK(a.theta_prime == Rational(4));
  CHECK(a.theta == Rational(5));
  CHECK(a.strict_separation);
  const BoundReport b = separation_report(SchemeParams(7, 3));
  CHECK(b.theta_prime == Rational(5));
  CHECK(b.theta == Rational(5));
  CHECK_FALSE(b.strict_separation);
  const BoundReport c = separation_report(SchemeParams(9, 4));
  CHECK(c.theta_prime == Rational(21));
  CHECK(c.theta == Rational(BigInt(98), BigInt(3)));
  CHECK(c.closed_form_theta == Rational(BigInt(7), BigInt(27)) * Rational(126));
  CHECK(c.strict_separation);
  CHECK_THROWS_AS(separation_report(SchemeParams(8, 3)), RangeError);
}

TEST_CASE("separation regime: LP theta equals the ratio formula, theta' equals C(n-2,k-2)") {
  for (int k = 3; k <= 8; ++k) {
    for (int n = 3 * k - 3; n <= k * k - k + 1; ++n) {
      const SchemeParams p(n, k);
      const LSystemSpec spec = LSystemSpec::missing_one(p, 1);
      const Rational cf = closed_form_theta_gnk1(p);
      CHECK(theta_lp(spec) == cf);
      CHECK(theta_prime_lp(spec) == binq(n - 2, k - 2));
      const BigInt witness = -BigInt(n - k) * BigInt(n - (k * k - k + 1));
      CHECK((cf > binq(n - 2, k - 2)) == (witness > 0));
      if (n < k * k - k + 1) {
        CHECK(witness > 0);
        CHECK(cf > binq(n - 2, k - 2));
      }
    }
  }
}

TEST_CASE("sandwich: alpha <= theta' <= theta on random small specs") {
  std::mt19937 rng(99);
  std::vector<std::pair<int, int>> shapes;
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (oracle::pascal(n, k) <= 300) shapes.emplace_back(n, k);
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [n, k] = shapes[pick(rng)];
    const LSystemSpec spec = random_spec(rng, n, k);
    const AlphaResult a = alpha_bruteforce(spec);
    REQUIRE(a.status == AlphaStatus::exact);
    const Rational tp = theta_prime_lp(spec);
    const Rational th = theta_lp(spec);
    INFO("n=" << n << " k=" << k << " L=" << spec.allowed_str());
    CHECK(Rational(static_cast<long>(a.size)) <= tp);
    CHECK(tp <= th);
  }
}

TEST_CASE("theta' is monotone in L") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 2 + trial % 5;
    const int n = k + 1 + trial % 9;
    const LSystemSpec spec = random_spec(rng, n, k);
    const Rational base = theta_prime_lp(spec);
    for (int s = 0; s < k; ++s) {
      if (spec.allows(s)) continue;
      std::vector<int> bigger = spec.allowed();
      bigger.push_back(s);
      const LSystemSpec larger(spec.params(), bigger);
      CHECK(theta_prime_lp(larger) >= base);
      CHECK(theta_lp(larger) >= theta_lp(spec));
    }
  }
}
