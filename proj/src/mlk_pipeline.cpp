#include "starcover/mlk_pipeline.hpp"

#include <algorithm>
#include <string>

#include "starcover/error.hpp"
#include "starcover/pipeline_util.hpp"

namespace starcover {

FractionalSolution lin_vitter_filter(const MetricInstance& instance, const FractionalSolution& sol,
                                     const Rational& epsilon) {
  const std::size_t nF = instance.n_facilities();
  const std::size_t nC = instance.n_clients();
  const Rational rho = (1 + epsilon) / epsilon;
  const std::vector<Rational> D = compute_avg_distances(instance, sol.x);

  FractionalSolution out(nF, nC);
  for (std::size_t j = 0; j < nC; ++j) {
    const Rational radius = rho * D[j];
    Rational kept = 0;
    for (std::size_t i = 0; i < nF; ++i) {
      if (instance.d(i, j) <= radius) kept += sol.x(i, j);
    }
    if (sgn(kept) == 0) {
      throw Error(ErrorCode::Internal, "filter removed all mass of client " + std::to_string(j));
    }
    for (std::size_t i = 0; i < nF; ++i) {
      if (instance.d(i, j) <= radius && sgn(sol.x(i, j)) > 0) out.x(i, j) = sol.x(i, j) / kept;
    }
  }
  for (std::size_t i = 0; i < nF; ++i) out.y[i] = std::min(Rational(1), Rational((1 + epsilon) * sol.y[i]));
  return out;
}

Matrix<Rational> rescale_demands(const Matrix<Rational>& x_dot) {
  Matrix<Rational> out = x_dot;
  for (std::size_t j = 0; j < out.cols(); ++j) {
    const Rational mass = client_mass(out, j);
    if (sgn(mass) == 0) {
      throw Error(ErrorCode::ZeroDemandClient, "client " + std::to_string(j) + " has no assignment");
    }
    if (mass == 1) continue;
    for (std::size_t i = 0; i < out.rows(); ++i) {
      if (sgn(out(i, j)) != 0) out(i, j) /= mass;
    }
  }
  return out;
}

StarCover cover_from_assignment(std::size_t n_facilities, const IntegralAssignment& assignment) {
  std::vector<std::vector<std::size_t>> served(n_facilities);
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    if (assignment[j]) served.at(*assignment[j]).push_back(j);
  }
  StarCover cover;
  for (std::size_t i = 0; i < n_facilities; ++i) {
    if (!served[i].empty()) cover.stars.push_back({i, std::move(served[i])});
  }
  return cover;
}

Integer mlk_size_bound(const Rational& epsilon, std::size_t k) {
  return floor((1 + 4 * epsilon) * Rational(static_cast<unsigned long>(k)));
}

Rational mlk_load_bound(const Rational& epsilon, const Rational& T) {
  return 48 * (1 + (1 + epsilon) / (epsilon * epsilon)) * T;
}

MlkTrace run_mlk_rounding(const MetricInstance& instance, std::size_t k, const Rational& epsilon,
                          MlkLpResult lp, const PreprocessOptions& options) {
  if (k < 1 || k > instance.n_facilities()) {
    throw Error(ErrorCode::InvalidArgument, "k must lie in [1, |F|]");
  }
  MlkTrace t;
  t.params = PipelineParams::for_mlk(epsilon);
  t.k = k;
  t.lp = std::move(lp);
  const Rational& T = t.lp.T_star;
  const PipelineParams& p = t.params;

  t.D = compute_avg_distances(instance, t.lp.sol.x);
  t.filtered = lin_vitter_filter(instance, t.lp.sol, epsilon);
  t.preprocessed = preprocess(instance, t.filtered, T, p.mu, p.gamma, options);
  const FractionalSolution& xp = t.preprocessed.sol;

  t.partial = open_heavy(instance, xp, t.D, p.lambda, T);
  t.idle_closed = close_idle_facilities(xp.x, t.partial);
  t.clustering = cluster(instance, xp.x, t.partial, t.D, p.rho);
  t.rerouted = reroute(instance, xp.x, xp.y, t.clustering, t.D, epsilon, t.partial);
  t.rescaled = rescale_demands(t.rerouted.x_dot);

  for (std::size_t i = 0; i < instance.n_facilities(); ++i) {
    if (t.rerouted.y_dot[i] == Decision::Open) t.opened.push_back(i);
  }
  const std::vector<std::size_t> rest = t.partial.remaining_clients();
  t.assignment = assignment_round(instance, t.opened, t.rescaled, rest);
  for (const HeavyStar& h : t.partial.heavy) {
    for (std::size_t j : h.clients) t.assignment[j] = h.facility;
  }
  t.cover = cover_from_assignment(instance.n_facilities(), t.assignment);

  std::vector<std::size_t> rerouted_open;
  for (const auto& K : t.rerouted.opened) rerouted_open.insert(rerouted_open.end(), K.begin(), K.end());
  Rational heavy_max = 0;
  for (const HeavyStar& h : t.partial.heavy) {
    heavy_max = std::max(heavy_max, star_load(instance, {h.facility, h.clients}));
  }

  StageReport& r = t.report;
  r.set("epsilon", to_string(epsilon));
  r.set("k", std::to_string(k));
  r.set("T_star", to_string(T));
  r.set("lp_solves", std::to_string(t.lp.lp_solves));
  r.set("preprocess_iterations", std::to_string(t.preprocessed.iterations));
  r.set("heavy_count", std::to_string(t.partial.heavy.size()));
  r.set("heavy_max_load", to_string(heavy_max));
  r.set("idle_closed", std::to_string(t.idle_closed.size()));
  r.set("cluster_count", std::to_string(t.clustering.centers.size()));
  r.set("reroute_open_count", std::to_string(rerouted_open.size()));
  r.set("reroute_max_load", to_string(max_fractional_load(instance, t.rerouted.x_dot, rerouted_open)));
  r.set("rescaled_max_load", to_string(max_fractional_load(instance, t.rescaled, rerouted_open)));
  r.set("size", std::to_string(t.cover.size()));
  r.set("load", to_string(cover_load(instance, t.cover)));
  r.set("size_bound", mlk_size_bound(epsilon, k).get_str());
  r.set("load_bound", to_string(mlk_load_bound(epsilon, T)));
  return t;
}

MlkTrace run_mlk_pipeline(const MetricInstance& instance, std::size_t k, const Rational& epsilon,
                          const Rational& rel_gap, const PreprocessOptions& options) {
  if (k < 1 || k > instance.n_facilities()) {
    throw Error(ErrorCode::InvalidArgument, "k must lie in [1, |F|]");
  }
  PipelineParams::for_mlk(epsilon);
  return run_mlk_rounding(instance, k, epsilon, solve_mlk_lp(instance, k, rel_gap), options);
}

RoundingOutcome round_mlk(const MetricInstance& instance, std::size_t k, const Rational& epsilon,
                          const Rational& rel_gap) {
  MlkTrace t = run_mlk_pipeline(instance, k, epsilon, rel_gap);
  return {std::move(t.cover), std::move(t.report)};
}

}  // namespace starcover
