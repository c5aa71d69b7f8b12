#include <doctest.h>

#include "oracles.hpp"
#include "starcover/exact_oracle.hpp"
#include "starcover/instance_gen.hpp"
#include "starcover/lp_engine.hpp"

using namespace starcover;
using oracle::q;

TEST_CASE("load gap family shape") {
  GapMlkInstance g = gen_gap_mlk(2, 3);
  CHECK(g.instance.n_facilities() == 4);
  CHECK(g.instance.n_clients() == 10);
  CHECK(g.k == 3);
  // group 0: M-clients 0..2 on facility 0, R-clients 3..4 on facility 1
  CHECK(g.instance.d(0, 0) == 0);
  CHECK(g.instance.d(0, 3) == 1);
  CHECK(g.instance.d(1, 3) == 0);
  CHECK(g.instance.d(0, 5) == 2);
  CHECK(g.instance.facility_distance(0, 2) == 2);
  CHECK(g.instance.client_distance(0, 1) == 0);
  for (std::size_t R = 1; R <= 4; ++R) {
    for (std::size_t M = 1; M <= 5; ++M) CHECK(validate_metric(gen_gap_mlk(R, M).instance).ok());
  }
}

TEST_CASE("load gap witness") {
  for (std::size_t R : {2, 3}) {
    const std::size_t M = 4;
    GapMlkInstance g = gen_gap_mlk(R, M);
    FractionalSolution w = gap_mlk_witness(R, M);
    Rational opened = 0;
    for (const auto& y : w.y) opened += y;
    CHECK(opened == 2 * R - 1);
    for (std::size_t r = 0; r < R; ++r) CHECK(oracle::fractional_load(g.instance, w.x, 2 * r + 1) == 0);
    const Rational k(static_cast<unsigned long>(2 * R - 1));
    CHECK(oracle::sclp_failures(g.instance, w.x, w.y, 1, k).empty());
    ScLpModel m = build_sclp(g.instance, 1, k);
    std::vector<Rational> v(m.lp.num_variables());
    for (std::size_t i = 0; i < g.instance.n_facilities(); ++i) {
      v[m.y_var(i)] = w.y[i];
      for (std::size_t j = 0; j < g.instance.n_clients(); ++j) {
        if (auto var = m.x_var(i, j)) v[*var] = w.x(i, j);
      }
    }
    CHECK(check_vertex(m.lp, v).feasible);
  }
}

TEST_CASE("load gap has no good integral cover") {
  for (std::size_t M : {2, 3}) {
    GapMlkInstance g = gen_gap_mlk(2, M);
    CHECK(exact_mlk(g.instance, g.k).opt_load >= 2);
  }
}

TEST_CASE("size gap family matches shortest paths over the stated edges") {
  for (std::size_t N = 2; N <= 5; ++N) {
    for (const Rational& T : {q(1), q(3, 7)}) {
      MetricInstance g = gen_gap_mssc(N, T);
      CHECK(g.n_facilities() == N);
      CHECK(g.n_clients() == N + 1);
      CHECK(validate_metric(g).ok());
      const Rational inv(1, static_cast<unsigned long>(N));
      std::vector<std::tuple<std::size_t, std::size_t, Rational>> edges;
      for (std::size_t r = 0; r < N; ++r) {
        edges.emplace_back(r, N + 1 + r, (1 - inv) * T);
        edges.emplace_back(r, N, T);
      }
      Matrix<Rational> sp = oracle::shortest_paths(2 * N + 1, edges);
      CHECK(g.dist() == sp);
      CHECK(g.facility_distance(0, 1) == 2 * T);
      CHECK(g.d(0, 2) == (3 - inv) * T);
      CHECK(g.client_distance(0, 1) == (2 - inv) * T);
      CHECK(g.client_distance(1, 2) == (4 - 2 * inv) * T);
    }
  }
  MetricInstance two = gen_gap_mssc(2, 1);
  CHECK(two.d(0, 1) == q(1, 2));
  CHECK(two.d(0, 0) == 1);
  CHECK(two.d(0, 2) == q(5, 2));
}

TEST_CASE("size gap witness") {
  for (std::size_t N = 2; N <= 5; ++N) {
    const Rational T = q(2, 3);
    MetricInstance g = gen_gap_mssc(N, T);
    FractionalSolution w = gap_mssc_witness(N, T);
    for (std::size_t i = 0; i < N; ++i) CHECK(oracle::fractional_load(g, w.x, i) == T);
    Rational opened = 0;
    for (const auto& y : w.y) opened += y;
    CHECK(opened == N);
    CHECK(oracle::sclp_failures(g, w.x, w.y, T, Rational(static_cast<unsigned long>(N))).empty());
  }
}

TEST_CASE("bad generator arguments") {
  CHECK_THROWS(gen_gap_mlk(0, 1));
  CHECK_THROWS(gen_gap_mlk(1, 0));
  CHECK_THROWS(gen_gap_mssc(1, 1));
  CHECK_THROWS(gen_gap_mssc(2, 0));
  CHECK_THROWS(gen_random(0, 1, 1, 1));
}

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("random instances") {
  MetricInstance a = gen_random(4, 8, 3, 123);
  CHECK(a.dist().rows() == 12);
  CHECK(a.dist() == gen_random(4, 8, 3, 123).dist());
  CHECK_FALSE(a.dist() == gen_random(4, 8, 3, 124).dist());
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    CAPTURE(seed);
    MetricInstance inst = gen_random(1 + seed % 5, 2 + seed % 9, 1 + seed % 3, seed);
    CHECK(validate_metric(inst).ok());
  }
}

TEST_CASE("random distances sit within one grid step of the Euclidean ones") {
  const std::size_t nF = 3, nC = 4, dim = 2, n = nF + nC;
  MetricInstance inst = gen_random(nF, nC, dim, 9);
  SplitMix64 rng(9);
  std::vector<std::vector<long long>> pts(n, std::vector<long long>(dim));
  for (auto& p : pts) {
    for (auto& c : p) c = static_cast<long long>(rng.next() >> (64 - kRandomGridBits));
  }
  const Rational unit = q(1, 1L << kRandomGridBits);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      long long sq = 0;
      for (std::size_t t = 0; t < dim; ++t) sq += (pts[a][t] - pts[b][t]) * (pts[a][t] - pts[b][t]);
      const Rational d = inst.dist()(a, b) / unit;  // in grid steps
      CHECK(d * d <= Rational(static_cast<long>(sq)) + 2 * d + 1);
      CHECK(d * d >= Rational(static_cast<long>(sq)));
    }
  }
}
