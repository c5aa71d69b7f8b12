#include "starcover/mssc_pipeline.hpp"

#include <algorithm>
#include <string>

#include "starcover/error.hpp"
#include "starcover/pipeline_util.hpp"

namespace starcover {

FractionalSolution mssc_filter(const MetricInstance& instance, const FractionalSolution& sol_prime,
                               const PartialRounding& partial, const std::vector<Rational>& D,
                               const Rational& epsilon) {
  const std::size_t nF = instance.n_facilities();
  const std::size_t nC = instance.n_clients();
  const PipelineParams p = PipelineParams::for_mssc(epsilon);
  FractionalSolution out(nF, nC);
  for (std::size_t j : partial.remaining_clients()) {
    const Rational radius = p.rho * D[j];
    Rational kept = 0;
    for (std::size_t i : partial.remaining_facilities()) {
      if (instance.d(i, j) <= radius) kept += sol_prime.x(i, j);
    }
    if (sgn(kept) == 0) {
      throw Error(ErrorCode::Internal, "filter removed all mass of client " + std::to_string(j));
    }
    for (std::size_t i : partial.remaining_facilities()) {
      if (instance.d(i, j) <= radius && sgn(sol_prime.x(i, j)) > 0) {
        out.x(i, j) = sol_prime.x(i, j) / kept;
      }
    }
  }
  for (std::size_t i : partial.remaining_facilities()) {
    out.y[i] = std::min(Rational(1), Rational(p.rho * epsilon * sol_prime.y[i]));
  }
  return out;
}

Integer mssc_size_bound(const Rational& epsilon, const Rational& k_star) {
  const PipelineParams p = PipelineParams::for_mssc(epsilon);
  return ceil(p.nu / p.lambda * k_star) + floor((1 + epsilon) * p.rho * epsilon * k_star);
}

Rational mssc_load_bound(const Rational& epsilon, const Rational& T) {
  return (2 + 6 * epsilon) * T;
}

MsscTrace run_mssc_rounding(const MetricInstance& instance, const Rational& T,
                            const Rational& epsilon, MsscLpResult lp,
                            const PreprocessOptions& options) {
  MsscTrace t;
  t.params = PipelineParams::for_mssc(epsilon);
  t.T = T;
  t.lp = std::move(lp);
  const PipelineParams& p = t.params;

  t.preprocessed = preprocess(instance, t.lp.sol, T, p.mu, p.gamma, options);
  const FractionalSolution& xp = t.preprocessed.sol;
  t.D = compute_avg_distances(instance, xp.x);

  t.partial = open_heavy(instance, xp, t.D, p.lambda, T);
  t.filtered = mssc_filter(instance, xp, t.partial, t.D, epsilon);
  const Matrix<Rational>& xh = t.filtered.x;
  t.idle_closed = close_idle_facilities(xh, t.partial);
  t.clustering = cluster(instance, xh, t.partial, t.D, p.rho);
  t.rerouted = reroute(instance, xh, t.filtered.y, t.clustering, t.D, epsilon, t.partial);

  for (std::size_t i = 0; i < instance.n_facilities(); ++i) {
    if (t.rerouted.y_dot[i] == Decision::Open) t.opened.push_back(i);
  }
  t.assignment = assignment_round(instance, t.opened, t.rerouted.x_dot,
                                  t.partial.remaining_clients());
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
  r.set("T", to_string(T));
  r.set("k_star", to_string(t.lp.k_star));
  r.set("preprocess_iterations", std::to_string(t.preprocessed.iterations));
  r.set("heavy_count", std::to_string(t.partial.heavy.size()));
  r.set("heavy_max_load", to_string(heavy_max));
  r.set("idle_closed", std::to_string(t.idle_closed.size()));
  r.set("cluster_count", std::to_string(t.clustering.centers.size()));
  r.set("reroute_open_count", std::to_string(rerouted_open.size()));
  r.set("reroute_max_load", to_string(max_fractional_load(instance, t.rerouted.x_dot, rerouted_open)));
  r.set("size", std::to_string(t.cover.size()));
  r.set("load", to_string(cover_load(instance, t.cover)));
  r.set("size_bound", mssc_size_bound(epsilon, t.lp.k_star).get_str());
  r.set("load_bound", to_string(mssc_load_bound(epsilon, T)));
  return t;
}

MsscTrace run_mssc_pipeline(const MetricInstance& instance, const Rational& T,
                            const Rational& epsilon, const PreprocessOptions& options) {
  PipelineParams::for_mssc(epsilon);
  return run_mssc_rounding(instance, T, epsilon, solve_mssc_lp(instance, T), options);
}

RoundingOutcome round_mssc(const MetricInstance& instance, const Rational& T,
                           const Rational& epsilon) {
  MsscTrace t = run_mssc_pipeline(instance, T, epsilon);
  return {std::move(t.cover), std::move(t.report)};
}

}  // namespace starcover
