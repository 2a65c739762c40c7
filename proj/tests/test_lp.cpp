#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "treeskel/lp.hpp"

using namespace treeskel;

namespace {

LinearProgram two_var_equality() {
  // x + y = 1, x,y >= 0
  LinearProgram lp(2);
  lp.add_equality({Rational(1), Rational(1)}, Rational(1));
  lp.set_nonnegative();
  return lp;
}

}  // namespace

TEST_CASE("feasibility returns an exact witness", "[lp]") {
  LinearProgram lp = two_var_equality();
  auto res = feasible(lp);
  REQUIRE(res.feasible);
  REQUIRE(res.witness.size() == 2);
  CHECK(oracle::satisfies_all(lp, res.witness));
  CHECK(res.witness[0] + res.witness[1] == 1);

  // Determinism: identical input gives an identical witness.
  auto res2 = feasible(lp);
  CHECK(res.witness == res2.witness);
}

TEST_CASE("infeasible systems are recognized", "[lp]") {
  SECTION("bound conflict") {
    // x >= 0 and x <= -1
    LinearProgram lp(1);
    lp.lower[0] = Rational(0);
    lp.add_inequality({Rational(1)}, Rational(-1));
    CHECK_FALSE(feasible(lp).feasible);
  }
  SECTION("equality conflict") {
    LinearProgram lp(2);
    lp.set_nonnegative();
    lp.add_equality({Rational(1), Rational(1)}, Rational(1));
    lp.add_equality({Rational(1), Rational(1)}, Rational(2));
    CHECK_FALSE(feasible(lp).feasible);
  }
  SECTION("explicit bound crossing") {
    LinearProgram lp(1);
    lp.lower[0] = Rational(3);
    lp.upper[0] = Rational(2);
    CHECK_FALSE(feasible(lp).feasible);
  }
  SECTION("zero-row conflict after substitution of fixed variables") {
    LinearProgram lp(1);
    lp.lower[0] = Rational(2);
    lp.upper[0] = Rational(2);
    lp.add_equality({Rational(1)}, Rational(3));
    CHECK_FALSE(feasible(lp).feasible);
    lp.equalities[0].rhs = Rational(2);
    auto res = feasible(lp);
    REQUIRE(res.feasible);
    CHECK(res.witness[0] == 2);
  }
}

TEST_CASE("optimization on free variables", "[lp]") {
  // minimize x subject to x >= 3, x unbounded below in the variable bounds,
  // so the solver must split x into a difference of nonnegatives.
  LinearProgram lp(1);
  lp.add_ge_inequality({Rational(1)}, Rational(3));
  lp.objective = {Rational(1)};
  auto res = optimize(lp);
  REQUIRE(res.status == OptStatus::Optimal);
  CHECK(res.value == 3);
  CHECK(res.point[0] == 3);
}

TEST_CASE("unboundedness is detected", "[lp]") {
  LinearProgram lp(2);
  lp.set_nonnegative();
  lp.add_inequality({Rational(1), Rational(-1)}, Rational(1));
  lp.objective = {Rational(-1), Rational(0)};  // minimize -x: push x up forever
  CHECK(optimize(lp).status == OptStatus::Unbounded);
}

TEST_CASE("bounded simplex agrees with vertex-enumeration oracle", "[lp]") {
  SECTION("hand-built polytope") {
    // min -2x - 3y st x + y <= 4, x + 3y <= 6, 0 <= x <= 3, 0 <= y <= 5
    LinearProgram lp(2);
    lp.set_nonnegative();
    lp.upper[0] = Rational(3);
    lp.upper[1] = Rational(5);
    lp.add_inequality({Rational(1), Rational(1)}, Rational(4));
    lp.add_inequality({Rational(1), Rational(3)}, Rational(6));
    lp.objective = {Rational(-2), Rational(-3)};
    auto res = optimize(lp);
    REQUIRE(res.status == OptStatus::Optimal);
    auto expect = oracle::brute_force_min(lp);
    REQUIRE(expect.has_value());
    CHECK(res.value == *expect);
    CHECK(oracle::satisfies_all(lp, res.point));
    CHECK(dot(*lp.objective, res.point) == res.value);
  }

  SECTION("randomized cut polytopes, all pivot rules") {
    // Deterministic pseudo-random LPs over a box with extra cuts. Every rule
    // must agree with the oracle and with every other rule on the value.
    std::uint64_t state = 12345;
    auto next = [&state]() {
      state += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = state;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    };
    for (int trial = 0; trial < 12; ++trial) {
      const int nv = 2 + static_cast<int>(next() % 3);  // 2..4 vars
      LinearProgram lp(nv);
      lp.set_nonnegative();
      for (int j = 0; j < nv; ++j) lp.upper[static_cast<std::size_t>(j)] = Rational(5);
      const int cuts = 2 + static_cast<int>(next() % 3);
      for (int c = 0; c < cuts; ++c) {
        RationalVec row;
        for (int j = 0; j < nv; ++j)
          row.push_back(Rational(static_cast<long>(next() % 7) - 3));
        lp.add_inequality(std::move(row), Rational(static_cast<long>(next() % 10) + 1));
      }
      RationalVec obj;
      for (int j = 0; j < nv; ++j)
        obj.push_back(Rational(static_cast<long>(next() % 11) - 5));
      lp.objective = obj;

      auto expect = oracle::brute_force_min(lp);
      REQUIRE(expect.has_value());  // the box is always feasible at 0
      for (PivotRule rule : {PivotRule::Bland, PivotRule::Dantzig, PivotRule::DantzigThenBland}) {
        SimplexOptions opt;
        opt.rule = rule;
        auto res = optimize(lp, opt);
        REQUIRE(res.status == OptStatus::Optimal);
        CHECK(res.value == *expect);
        CHECK(oracle::satisfies_all(lp, res.point));
      }
    }
  }
}

TEST_CASE("degenerate pivoting terminates (Beale-style instance)", "[lp]") {
  // Classic cycling example for pure Dantzig with fixed tie-breaking. The
  // default rule must terminate and match both Bland and the oracle.
  LinearProgram lp(4);
  lp.set_nonnegative();
  lp.add_inequality({Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)}, Rational(0));
  lp.add_inequality({Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)}, Rational(0));
  lp.add_inequality({Rational(0), Rational(0), Rational(1), Rational(0)}, Rational(1));
  lp.objective = {Rational(-3, 4), Rational(150), Rational(-1, 50), Rational(6)};

  auto expect = oracle::brute_force_min(lp);
  REQUIRE(expect.has_value());
  for (PivotRule rule : {PivotRule::Bland, PivotRule::DantzigThenBland}) {
    SimplexOptions opt;
    opt.rule = rule;
    opt.degenerate_switch_after = 4;  // exercise the switch quickly
    auto res = optimize(lp, opt);
    REQUIRE(res.status == OptStatus::Optimal);
    CHECK(res.value == *expect);
  }
}

TEST_CASE("duplicate rows and degenerate corners", "[lp]") {
  LinearProgram lp(2);
  lp.set_nonnegative();
  lp.add_inequality({Rational(1), Rational(1)}, Rational(2));
  lp.add_inequality({Rational(1), Rational(1)}, Rational(2));  // duplicate
  lp.add_equality({Rational(1), Rational(-1)}, Rational(0));
  lp.add_equality({Rational(1), Rational(-1)}, Rational(0));  // duplicate
  lp.objective = {Rational(-1), Rational(-1)};
  auto res = optimize(lp);
  REQUIRE(res.status == OptStatus::Optimal);
  CHECK(res.value == -2);
  CHECK(res.point == RationalVec{Rational(1), Rational(1)});
}

TEST_CASE("mirrored variables (upper bound only)", "[lp]") {
  // minimize x with x <= 7 and x + y >= 6, y <= 2, both unbounded below on
  // one side so the standardization has to mirror them.
  LinearProgram lp(2);
  lp.upper[0] = Rational(7);
  lp.upper[1] = Rational(2);
  lp.add_ge_inequality({Rational(1), Rational(1)}, Rational(6));
  lp.objective = {Rational(1), Rational(0)};
  auto res = optimize(lp);
  REQUIRE(res.status == OptStatus::Optimal);
  CHECK(res.value == 4);  // y at its cap 2, x = 4
  CHECK(oracle::satisfies_all(lp, res.point));
}

TEST_CASE("zero-variable and redundant systems", "[lp]") {
  LinearProgram lp(0);
  CHECK(feasible(lp).feasible);
  lp.add_equality({}, Rational(1));
  CHECK_FALSE(feasible(lp).feasible);

  LinearProgram lp2(3);
  lp2.set_nonnegative();
  // Redundant equality (sum of the first two) keeps a basic artificial at
  // zero; the solver must still finish and extract a valid witness.
  lp2.add_equality({Rational(1), Rational(1), Rational(0)}, Rational(2));
  lp2.add_equality({Rational(0), Rational(1), Rational(1)}, Rational(2));
  lp2.add_equality({Rational(1), Rational(2), Rational(1)}, Rational(4));
  auto res = feasible(lp2);
  REQUIRE(res.feasible);
  CHECK(oracle::satisfies_all(lp2, res.witness));
}

TEST_CASE("optimize requires an objective", "[lp]") {
  LinearProgram lp(1);
  CHECK_THROWS_AS(optimize(lp), std::invalid_argument);
}
