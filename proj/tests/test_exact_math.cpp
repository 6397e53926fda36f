#include <doctest.h>

#include <random>
#include <thread>

#include "gjt/binomial.hpp"
#include "gjt/bounds.hpp"
#include "gjt/lp.hpp"
#include "support/oracles.hpp"

using namespace gjt;

TEST_CASE("rational normalizes and serializes as p/q") {
  CHECK(Rational(BigInt(6), BigInt(-4)).str() == "-3/2");
  CHECK(Rational(35).str() == "35/1");
  CHECK(Rational(BigInt(0), BigInt(7)).str() == "0/1");
  CHECK(Rational::parse("10/4") == Rational(BigInt(5), BigInt(2)));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational string form round-trips") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int i = 0; i < 500; ++i) {
    long den = dist(rng);
    if (den == 0) den = 1;
    const Rational r(BigInt(dist(rng)), BigInt(den));
    CHECK(Rational::parse(r.str()) == r);
    CHECK(r.denominator() > 0);
  }
}

TEST_CASE("binom examples") {
  CHECK(binom(5, 0) == 1);
  CHECK(binom(4, 6) == 0);
  CHECK(binom(7, 3) == oracle::pascal(7, 3));
  CHECK(binom(7, 3) == 35);
  CHECK(binom(-3, 1) == 0);
  CHECK(binom(5, -1) == 0);
}

TEST_CASE("binom agrees with Pascal oracle, symmetry and recurrence") {
  for (long n = 0; n <= 70; ++n) {
    for (long k = -1; k <= n + 1; ++k) {
      REQUIRE(binom(n, k) == oracle::pascal(n, k));
      if (k >= 0 && k <= n) CHECK(binom(n, k) == binom(n, n - k));
      if (n >= 1) CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
    }
  }
  // 64-bit overflow territory and the non-cached path.
  CHECK(binom(68, 34) == oracle::pascal(68, 34));
  CHECK(binom(600, 3) == BigInt(600L * 599 * 598 / 6));
}

TEST_CASE("binom cache is safe to share across threads") {
  std::vector<std::thread> threads;
  std::vector<int> ok(4, 1);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([t, &ok] {
      for (long n = 400; n >= 0; n -= 3 + t) {
        if (binom(n, n / 2) != binom(n, n - n / 2)) ok[t] = 0;
      }
    });
  }
  for (auto& th : threads) th.join();
  CHECK(std::count(ok.begin(), ok.end(), 1) == 4);
}

namespace {

LinearProgram one_var(Sense sense, std::vector<Constraint> rows) {
  LinearProgram lp;
  lp.sense = sense;
  lp.objective = {Rational(1)};
  lp.constraints = std::move(rows);
  return lp;
}

}  // namespace

TEST_CASE("lp_solve small cases") {
  SUBCASE("min x s.t. x >= 3") {
    const auto sol = lp_solve(one_var(Sense::minimize, {{{Rational(1)}, Relation::greater_equal, Rational(3)}}));
    REQUIRE(sol.status == LPStatus::optimal);
    CHECK(sol.value == Rational(3));
  }
  SUBCASE("contradictory constraints") {
    const auto sol = lp_solve(one_var(Sense::minimize, {{{Rational(1)}, Relation::greater_equal, Rational(1)},
                                                        {{Rational(1)}, Relation::less_equal, Rational(0)}}));
    CHECK(sol.status == LPStatus::infeasible);
  }
  SUBCASE("unbounded") {
    const auto sol = lp_solve(one_var(Sense::maximize, {{{Rational(1)}, Relation::greater_equal, Rational(3)}}));
    CHECK(sol.status == LPStatus::unbounded);
  }
  SUBCASE("equalities and redundant rows") {
    LinearProgram lp;
    lp.sense = Sense::maximize;
    lp.objective = {Rational(1), Rational(2)};
    lp.lower_bounds = {Rational(0), Rational(0)};
    lp.constraints = {{{Rational(1), Rational(1)}, Relation::equal, Rational(4)},
                      {{Rational(2), Rational(2)}, Relation::equal, Rational(8)},
                      {{Rational(0), Rational(1)}, Relation::less_equal, Rational(BigInt(5), BigInt(2))}};
    const auto sol = lp_solve(lp);
    REQUIRE(sol.status == LPStatus::optimal);
    CHECK(sol.value == Rational(BigInt(13), BigInt(2)));
    CHECK(is_feasible(lp, sol.point));
    CHECK(oracle::dual_certifies(lp, sol));
  }
  SUBCASE("malformed program rejected") {
    LinearProgram lp = one_var(Sense::minimize, {{{Rational(1), Rational(2)}, Relation::equal, Rational(0)}});
    CHECK_THROWS_AS(lp_solve(lp), std::invalid_argument);
  }
}

TEST_CASE("lp_solve on the theta' program for G(7,3,1)") {
  const LinearProgram lp = scheme_theta_program(LSystemSpec::missing_one(SchemeParams(7, 3), 1), ThetaKind::schrijver);
  const auto sol = lp_solve(lp);
  REQUIRE(sol.status == LPStatus::optimal);
  CHECK(sol.value == Rational(5));
  CHECK(oracle::vertex_enumeration(lp) == Rational(5));
  CHECK(oracle::dual_certifies(lp, sol));
}

TEST_CASE("lp_solve property: random boxed programs match vertex enumeration and dual certificates") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> nv(1, 4);
  std::uniform_int_distribution<int> nrows(1, 4);
  std::uniform_int_distribution<int> rel(0, 2);
  int optimal = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = nv(rng);
    LinearProgram lp;
    lp.sense = trial % 2 ? Sense::maximize : Sense::minimize;
    for (int v = 0; v < n; ++v) lp.objective.emplace_back(coef(rng));
    // Box: half the variables bounded below by -6, all bounded by rows so the
    // polyhedron is a polytope (hence pointed).
    for (int v = 0; v < n; ++v) {
      lp.lower_bounds.push_back(v % 2 == 0 ? std::optional<Rational>(Rational(-6)) : std::nullopt);
      std::vector<Rational> e(n);
      e[v] = 1;
      lp.constraints.push_back({e, Relation::less_equal, Rational(6)});
      if (v % 2 == 1) lp.constraints.push_back({e, Relation::greater_equal, Rational(-6)});
    }
    const int extra = nrows(rng);
    for (int r = 0; r < extra; ++r) {
      std::vector<Rational> row;
      for (int v = 0; v < n; ++v) row.emplace_back(coef(rng));
      lp.constraints.push_back({row, static_cast<Relation>(rel(rng)), Rational(coef(rng))});
    }
    const auto sol = lp_solve(lp);
    const auto expected = oracle::vertex_enumeration(lp);
    if (!expected) {
      CHECK(sol.status == LPStatus::infeasible);
      ++infeasible;
      continue;
    }
    REQUIRE(sol.status == LPStatus::optimal);
    CHECK(sol.value == *expected);
    CHECK(is_feasible(lp, sol.point));
    Rational attained;
    for (int v = 0; v < n; ++v) attained += lp.objective[v] * sol.point[v];
    CHECK(attained == sol.value);
    CHECK(oracle::dual_certifies(lp, sol));
    CHECK(lp_solve(lp).point == sol.point);  // deterministic
    ++optimal;
  }
  CHECK(optimal > 100);
  CHECK(infeasible > 5);
}
