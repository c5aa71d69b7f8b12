#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "starcover/assignment_rounding.hpp"
#include "starcover/error.hpp"
#include "starcover/instance_gen.hpp"

using namespace starcover;
using oracle::q;

namespace {

MetricInstance uniform(std::size_t nF, std::size_t nC) {
  const std::size_t n = nF + nC;
  Matrix<Rational> d(n, n, Rational(1));
  for (std::size_t p = 0; p < n; ++p) d(p, p) = 0;
  return MetricInstance(nF, nC, d);
}

void check_contract(const MetricInstance& inst, const std::vector<std::size_t>& opened,
                    const Matrix<Rational>& x, const IntegralAssignment& a) {
  REQUIRE(a.size() == inst.n_clients());
  for (std::size_t j = 0; j < inst.n_clients(); ++j) {
    REQUIRE(a[j].has_value());
    CHECK(sgn(x(*a[j], j)) > 0);
  }
  for (std::size_t i : opened) {
    Rational integral = 0, slack = 0;
    for (std::size_t j = 0; j < inst.n_clients(); ++j) {
      if (*a[j] == i) integral += inst.d(i, j);
      if (sgn(x(i, j)) > 0) slack = std::max(slack, inst.d(i, j));
    }
    CHECK(integral <= oracle::fractional_load(inst, x, i) + slack);
  }
}

}  // namespace

TEST_CASE("integral input is kept") {
  MetricInstance inst = uniform(3, 4);
  Matrix<Rational> x(3, 4);
  x(0, 0) = x(2, 1) = x(2, 2) = x(0, 3) = 1;
  IntegralAssignment a = assignment_round(inst, {0, 2}, x);
  CHECK(a == IntegralAssignment{0, 2, 2, 0});
}

TEST_CASE("two by two halves become a perfect matching") {
  MetricInstance inst = uniform(2, 2);
  Matrix<Rational> x(2, 2, q(1, 2));
  IntegralAssignment a = assignment_round(inst, {0, 1}, x);
  REQUIRE(a[0].has_value());
  REQUIRE(a[1].has_value());
  CHECK(*a[0] != *a[1]);
  check_contract(inst, {0, 1}, x, a);
}

TEST_CASE("scoped rounding leaves other clients alone") {
  MetricInstance inst = uniform(2, 3);
  Matrix<Rational> x(2, 3);
  x(0, 0) = 1;
  x(0, 1) = x(1, 1) = q(1, 2);
  IntegralAssignment a = assignment_round(inst, {0, 1}, x, {1});
  CHECK_FALSE(a[0].has_value());
  CHECK(a[1].has_value());
  CHECK_FALSE(a[2].has_value());
}

TEST_CASE("bad inputs raise") {
  MetricInstance inst = uniform(2, 2);
  Matrix<Rational> x(2, 2);
  x(0, 0) = 1;
  x(0, 1) = q(1, 2);
  try {
    assignment_round(inst, {0, 1}, x);
    FAIL("expected UnnormalizedClient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnnormalizedClient);
  }
  x(1, 1) = q(1, 2);
  try {
    assignment_round(inst, {0}, x);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("random fractional assignments meet the rounding contract") {
  oracle::Rng rng(77);
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    oracle::RandomAssignment in = oracle::random_assignment(rng, seed);
    CAPTURE(seed);
    IntegralAssignment a = assignment_round(in.instance, in.opened, in.x);
    check_contract(in.instance, in.opened, in.x, a);
    CHECK(oracle::rounding_failures(in.instance, in.opened, in.x, a).empty());
    CHECK(a == assignment_round(in.instance, in.opened, in.x));
  }
}
