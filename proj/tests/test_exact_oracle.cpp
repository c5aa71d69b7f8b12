#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "starcover/error.hpp"
#include "starcover/exact_oracle.hpp"
#include "starcover/instance_gen.hpp"

using namespace starcover;
using oracle::q;

namespace {

MetricInstance on_line(std::size_t nF, const std::vector<long>& pos) {
  const std::size_t n = pos.size();
  Matrix<Rational> d(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) d(a, b) = std::labs(pos[a] - pos[b]);
  }
  return MetricInstance(nF, n - nF, d);
}

std::vector<std::size_t> as_map(std::size_t nC, const StarCover& cover) {
  std::vector<std::size_t> m(nC);
  for (const Star& s : cover.stars) {
    for (std::size_t j : s.clients) m[j] = s.facility;
  }
  return m;
}

// Lexicographically smallest client map reaching `value` under `fits`.
template <class Fits>
std::vector<std::size_t> first_map(const MetricInstance& inst, Fits fits) {
  const std::size_t nF = inst.n_facilities(), nC = inst.n_clients();
  std::vector<std::size_t> m(nC, 0);
  while (true) {
    if (fits(m)) return m;
    std::size_t p = nC;
    while (p > 0 && m[p - 1] == nF - 1) m[--p] = 0;
    if (p == 0) return {};
    ++m[p - 1];
  }
}

Rational map_load(const MetricInstance& inst, const std::vector<std::size_t>& m) {
  std::vector<Rational> load(inst.n_facilities());
  for (std::size_t j = 0; j < m.size(); ++j) load[m[j]] += inst.d(m[j], j);
  return *std::max_element(load.begin(), load.end());
}

std::size_t map_size(const std::vector<std::size_t>& m) {
  std::vector<std::size_t> s = m;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

}  // namespace

TEST_CASE("forced single facility") {
  MetricInstance inst = on_line(1, {0, 1, 2, 3});
  ExactMlkResult r = exact_mlk(inst, 1);
  CHECK(r.opt_load == 6);
  CHECK(r.cover.size() == 1);
}

TEST_CASE("load gap family") {
  GapMlkInstance gap = gen_gap_mlk(2, 3);
  CHECK(exact_mlk(gap.instance, 3).opt_load == 2);
  CHECK(exact_mlk(gap.instance, static_cast<std::size_t>(floor(q(5, 4) * 3).get_ui())).opt_load == 2);
  CHECK(exact_mlk(gap.instance, 4).opt_load < 2);
}

TEST_CASE("size gap family") {
  MetricInstance gap = gen_gap_mssc(2, 1);
  CHECK_FALSE(exact_mssc(gap, 1).has_value());
  auto r = exact_mssc(gap, q(3, 2));
  REQUIRE(r.has_value());
  CHECK(r->opt_size == 2);

  MetricInstance sites = on_line(3, {0, 10, 20, 0, 10, 20});
  auto z = exact_mssc(sites, 0);
  REQUIRE(z.has_value());
  CHECK(z->opt_size == 3);
}

TEST_CASE("guard and arguments") {
  CHECK(exact_search_allowed(10, 7));
  CHECK_FALSE(exact_search_allowed(10, 8));
  CHECK_FALSE(exact_search_allowed(0, 1));
  MetricInstance big = gen_random(4, 12, 2, 1);
  try {
    exact_mlk(big, 2);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK_THROWS_AS(exact_mssc(big, 1), Error);
  CHECK_THROWS_AS(exact_mlk(on_line(1, {0, 1}), 0), Error);
}

TEST_CASE("exact values agree with plain enumeration, ties included") {
  for (const auto& sc : oracle::random_suite(40, 0, 41)) {
    const MetricInstance& inst = sc.instance;
    if (!exact_search_allowed(inst.n_facilities(), inst.n_clients()) ||
        std::pow(double(inst.n_facilities()), double(inst.n_clients())) > 2e5) {
      continue;
    }
    CAPTURE(sc.name);
    ExactMlkResult r = exact_mlk(inst, sc.k);
    const Rational opt = oracle::brute_min_load(inst, sc.k);
    CHECK(r.opt_load == opt);
    CHECK(validate_cover(inst, r.cover, sc.k, opt).ok());
    CHECK(as_map(inst.n_clients(), r.cover) == first_map(inst, [&](const auto& m) {
            return map_size(m) <= sc.k && map_load(inst, m) == opt;
          }));

    for (const Rational& T : std::vector<Rational>{opt, opt * q(3, 2), opt / 2}) {
      auto s = exact_mssc(inst, T);
      auto brute = oracle::brute_min_size(inst, T);
      REQUIRE(s.has_value() == brute.has_value());
      if (!s) continue;
      CHECK(s->opt_size == *brute);
      CHECK(validate_cover(inst, s->cover, *brute, T).ok());
      CHECK(as_map(inst.n_clients(), s->cover) == first_map(inst, [&](const auto& m) {
              return map_size(m) <= *brute && map_load(inst, m) <= T;
            }));
    }
  }
}

TEST_CASE("monotone in k and T") {
  for (const auto& sc : oracle::random_suite(6, 0, 42)) {
    const MetricInstance& inst = sc.instance;
    CAPTURE(sc.name);
    Rational prev = exact_mlk(inst, 1).opt_load;
    for (std::size_t k = 2; k <= inst.n_facilities(); ++k) {
      Rational now = exact_mlk(inst, k).opt_load;
      CHECK(now <= prev);
      prev = now;
    }
    std::optional<std::size_t> prev_size;
    for (long t = 1; t <= 8; ++t) {
      auto r = exact_mssc(inst, prev * t / 2);
      if (prev_size) {
        REQUIRE(r.has_value());
        CHECK(r->opt_size <= *prev_size);
      }
      if (r) prev_size = r->opt_size;
    }
  }
}

TEST_CASE("full-size instances finish") {
  for (const auto& sc : oracle::random_suite(0, 2, 43)) {
    ExactMlkResult r = exact_mlk(sc.instance, sc.k);
    CHECK(validate_cover(sc.instance, r.cover, sc.k, r.opt_load).ok());
    auto s = exact_mssc(sc.instance, r.opt_load);
    REQUIRE(s.has_value());
    CHECK(s->opt_size <= sc.k);
  }
}
