#include "generators.hpp"

#include <algorithm>
#include <string>

#include "oracles.hpp"
#include "starcover/instance_gen.hpp"

namespace oracle {

namespace {

long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

starcover::LinearProgram random_lp(Rng& rng) {
  using starcover::Relation;
  starcover::LinearProgram lp;
  const std::size_t n = pick(rng, 1, 3);
  for (std::size_t v = 0; v < n; ++v) {
    const long lo = pick(rng, -2, 1);
    lp.add_variable("v", lo, Rational(lo + pick(rng, 0, 4)));
  }
  const std::size_t m = pick(rng, 0, 4);
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<Rational> row(n);
    for (auto& a : row) a = q(pick(rng, -3, 3), pick(rng, 1, 2));
    const auto rel = static_cast<Relation>(pick(rng, 0, 2));
    lp.add_constraint(row, rel, q(pick(rng, -4, 6), pick(rng, 1, 3)));
  }
  if (pick(rng, 0, 3) != 0) {
    std::vector<Rational> c(n);
    for (auto& a : c) a = pick(rng, -3, 3);
    lp.set_objective(c, pick(rng, 0, 1) ? starcover::Sense::Minimize : starcover::Sense::Maximize);
  }
  return lp;
}

RandomAssignment random_assignment(Rng& rng, std::uint64_t seed) {
  const std::size_t nF = pick(rng, 1, 5), nC = pick(rng, 1, 9);
  RandomAssignment out{starcover::gen_random(nF, nC, 2, seed), {}, Matrix<Rational>(nF, nC)};
  for (std::size_t i = 0; i < nF; ++i) {
    if (pick(rng, 0, 3) != 0) out.opened.push_back(i);
  }
  if (out.opened.empty()) out.opened.push_back(nF - 1);
  for (std::size_t j = 0; j < nC; ++j) {
    std::vector<long> w(out.opened.size());
    long total = 0;
    for (auto& v : w) total += (v = pick(rng, 0, 4));
    if (total == 0) w[pick(rng, 0, static_cast<long>(w.size()) - 1)] = total = 1;
    for (std::size_t t = 0; t < out.opened.size(); ++t) out.x(out.opened[t], j) = q(w[t], total);
  }
  return out;
}

std::vector<std::string> rounding_failures(const MetricInstance& inst,
                                           const std::vector<std::size_t>& opened,
                                           const Matrix<Rational>& x,
                                           const std::vector<std::optional<std::size_t>>& a) {
  std::vector<std::string> out;
  if (a.size() != inst.n_clients()) return {"assignment size mismatch"};
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!a[j]) {
      out.push_back("client " + std::to_string(j) + " unassigned");
    } else if (!(sgn(x(*a[j], j)) > 0)) {
      out.push_back("client " + std::to_string(j) + " left its support");
    }
  }
  if (!out.empty()) return out;
  for (std::size_t i : opened) {
    Rational integral = 0, slack = 0;
    for (std::size_t j = 0; j < inst.n_clients(); ++j) {
      if (*a[j] == i) integral += inst.d(i, j);
      if (sgn(x(i, j)) > 0) slack = std::max(slack, inst.d(i, j));
    }
    if (integral > oracle::fractional_load(inst, x, i) + slack) {
      out.push_back("facility " + std::to_string(i) + " over its rounding budget");
    }
  }
  return out;
}

}  // namespace oracle
