#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "starcover/error.hpp"
#include "starcover/instance_gen.hpp"
#include "starcover/lp_engine.hpp"
#include "starcover/preprocessing.hpp"

using namespace starcover;
using oracle::q;

namespace {

// Feasible fractional input that never touches the LP engine: random y with
// one fully open facility, random splits capped by y, T just large enough.
struct RandomInput {
  MetricInstance instance;
  FractionalSolution sol;
  Rational T;
};

RandomInput random_input(std::size_t nF, std::size_t nC, std::uint64_t seed) {
  MetricInstance inst = gen_random(nF, nC, 2, seed);
  std::mt19937_64 rng(seed * 7919 + 1);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  FractionalSolution sol(nF, nC);
  const std::size_t full = pick(0, static_cast<long>(nF) - 1);
  for (std::size_t i = 0; i < nF; ++i) sol.y[i] = i == full ? q(1) : q(pick(1, 6), 6);
  for (std::size_t j = 0; j < nC; ++j) {
    Rational left = 1;
    for (std::size_t i = 0; i < nF && sgn(left) > 0; ++i) {
      if (i == full) continue;
      Rational take = std::min<Rational>(left, q(pick(0, 6), 6) * sol.y[i]);
      sol.x(i, j) = take;
      left -= take;
    }
    sol.x(full, j) += left;
  }
  Rational T = 0;
  for (std::size_t i = 0; i < nF; ++i) {
    T = std::max<Rational>(T, oracle::fractional_load(inst, sol.x, i) / sol.y[i]);
    for (std::size_t j = 0; j < nC; ++j) {
      if (sgn(sol.x(i, j)) > 0) T = std::max(T, inst.d(i, j));
    }
  }
  return {inst, sol, T};
}

PreprocessOptions checked() {
  PreprocessOptions o;
  o.check_restriction = true;
  return o;
}

ResidualState cycle_state() {
  ResidualState s;
  s.active_facilities = {1, 1};
  s.active_clients = {1, 1};
  s.edges = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  s.remaining_demand = {1, 1};
  s.remaining_load = {10, 10};
  return s;
}

}  // namespace

TEST_CASE("classify picks the first case in priority order") {
  ResidualState s = cycle_state();
  const std::vector<Rational> y{1, 1};
  const std::vector<Rational> half(4, q(1, 2));

  CHECK(classify_vertex(half, s, y, q(1, 3)) ==
        VertexCase{VertexCaseTag::DegreeTwoHeavyPair, 0, std::nullopt});
  CHECK(classify_vertex({q(1, 2), 0, q(1, 2), 1}, s, y, q(1, 3)) ==
        VertexCase{VertexCaseTag::ZeroEdge, 0, 1});

  const std::vector<Rational> y_low{q(1, 2), 1};
  CHECK(classify_vertex(half, s, y_low, q(1, 3)) == VertexCase{VertexCaseTag::EdgeAtY, 0, 0});

  ResidualState partial_demand = s;
  partial_demand.remaining_demand = {q(1, 2), 1};
  CHECK(classify_vertex({q(1, 4), q(1, 2), q(1, 2), q(1, 2)}, partial_demand, y, q(1, 3)) ==
        VertexCase{VertexCaseTag::EdgeAtD, 1, 0});

  ResidualState star = s;
  star.edges = {{0, 0}, {0, 1}, {1, 1}};
  CHECK(classify_vertex({q(1, 2), q(1, 3), q(1, 3)}, star, y, q(1, 3)) ==
        VertexCase{VertexCaseTag::DegreeLeqOne, 1, std::nullopt});

  CHECK_THROWS_AS(classify_vertex(half, s, y, q(3, 2)), Error);
  try {
    classify_vertex(half, s, y, q(3, 2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoCaseApplies);
  }
}

TEST_CASE("residual polytope shape") {
  Matrix<Rational> d(4, 4, Rational(1));
  for (int p = 0; p < 4; ++p) d(p, p) = 0;
  MetricInstance inst(2, 2, d);
  ResidualState s = cycle_state();
  s.active_facilities = {1, 0};
  LinearProgram lp = residual_polytope(inst, s, {q(1, 2), 1});
  CHECK(lp.num_variables() == 4);
  CHECK(lp.num_constraints() == 3);
  CHECK(*lp.variables()[0].upper == q(1, 2));
  CHECK(s.size_measure() == 4 + 1 + 2);
  CHECK(s.degree(0) == 2);
}

TEST_CASE("integral input is reproduced") {
  GapMlkInstance gap = gen_gap_mlk(2, 3);
  FractionalSolution sol(4, gap.instance.n_clients());
  for (std::size_t i = 0; i < 4; ++i) sol.y[i] = 1;
  for (std::size_t j = 0; j < gap.instance.n_clients(); ++j) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (gap.instance.d(i, j) == 0) {
        sol.x(i, j) = 1;
        break;
      }
    }
  }
  PreprocessResult r = preprocess(gap.instance, sol, 1, 1, q(1, 2), checked());
  CHECK(r.sol.x == sol.x);
  CHECK(r.sol.y == sol.y);
}

TEST_CASE("gap-mssc vertex solution") {
  MetricInstance inst = gen_gap_mssc(3, 1);
  MsscLpResult lp = solve_mssc_lp(inst, 1);
  const Rational gamma = q(4, 5);
  PreprocessResult r = preprocess(inst, lp.sol, 1, 1, gamma, checked());
  CHECK(oracle::preprocess_failures(inst, lp.sol.x, lp.sol.y, r.sol.x, r.sol.y, 1, 1, gamma).empty());
  CHECK(r.iterations <= 2 * 3 * 4);
}

TEST_CASE("preconditions are enforced") {
  RandomInput in = random_input(3, 4, 11);
  CHECK_THROWS_AS(preprocess(in.instance, in.sol, in.T, 1, 0), Error);
  CHECK_THROWS_AS(preprocess(in.instance, in.sol, in.T, 1, 1), Error);
  CHECK_THROWS_AS(preprocess(in.instance, in.sol, in.T, q(1, 2), q(1, 2)), Error);
  CHECK_THROWS_AS(preprocess(in.instance, in.sol, in.T / 2, 1, q(1, 2)), Error);

  FractionalSolution missing = in.sol;
  for (std::size_t i = 0; i < 3; ++i) missing.x(i, 2) = 0;
  try {
    preprocess(in.instance, missing, in.T, 1, q(1, 2));
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
    CHECK(std::string(e.what()).find("client 2") != std::string::npos);
  }
}

TEST_CASE("postconditions on 200 random 4x8 inputs") {
  const Rational gammas[] = {q(1, 5), q(1, 2), q(4, 5)};
  const Rational mus[] = {q(1), q(3, 2)};
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    RandomInput in = random_input(4, 8, seed);
    const Rational& gamma = gammas[seed % 3];
    const Rational& mu = mus[seed % 2];
    CAPTURE(seed);
    PreprocessResult r = preprocess(in.instance, in.sol, in.T, mu, gamma, checked());
    CHECK(oracle::preprocess_failures(in.instance, in.sol.x, in.sol.y, r.sol.x, r.sol.y, in.T, mu,
                                      gamma).empty());
    CHECK(r.iterations <= 2 * 4 * 8);
    CHECK(r.iterations == r.trace.size());
    for (const VertexCase& c : r.trace) {
      if (c.tag != VertexCaseTag::DegreeLeqOne) continue;
      CHECK(oracle::fractional_load(in.instance, r.sol.x, c.facility) <=
            (mu + 1) * in.T * in.sol.y[c.facility]);
    }
  }
}

TEST_CASE("postconditions on LP vertices") {
  for (const auto& c : oracle::random_suite(10, 0, 17)) {
    CAPTURE(c.name);
    MlkLpResult lp = solve_mlk_lp(c.instance, c.k);
    const Rational eps = q(1, 2);
    const Rational gamma = eps / (1 + eps);
    const Rational mu = 1 + eps;
    PreprocessResult r = preprocess(c.instance, lp.sol, lp.T_star, mu, gamma, checked());
    CHECK(oracle::preprocess_failures(c.instance, lp.sol.x, lp.sol.y, r.sol.x, r.sol.y,
                                      lp.T_star, mu, gamma).empty());
  }
}

TEST_CASE("preprocessing is deterministic") {
  RandomInput in = random_input(4, 8, 99);
  PreprocessResult a = preprocess(in.instance, in.sol, in.T, 1, q(1, 3));
  PreprocessResult b = preprocess(in.instance, in.sol, in.T, 1, q(1, 3));
  CHECK(a.sol.x == b.sol.x);
  CHECK(a.trace == b.trace);
}
