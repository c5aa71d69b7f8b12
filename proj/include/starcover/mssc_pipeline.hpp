#pragma once

#include <cstddef>
#include <vector>

#include "starcover/assignment_rounding.hpp"
#include "starcover/core_model.hpp"
#include "starcover/lp_engine.hpp"
#include "starcover/mlk_pipeline.hpp"
#include "starcover/preprocessing.hpp"
#include "starcover/report.hpp"
#include "starcover/rounding_stages.hpp"

namespace starcover {

/// For every j in C' keeps x'_ij on F'_j = { i in F' : d(i, j) <= rho D(j) }
/// and normalizes the column to 1; y_hat_i = min(1, rho eps y'_i) on F' and 0
/// elsewhere. Columns outside C' are zero.
FractionalSolution mssc_filter(const MetricInstance& instance, const FractionalSolution& sol_prime,
                               const PartialRounding& partial, const std::vector<Rational>& D,
                               const Rational& epsilon);

struct MsscTrace {
  PipelineParams params;
  Rational T;
  MsscLpResult lp;
  PreprocessResult preprocessed;
  std::vector<Rational> D;  // from the preprocessed assignment
  PartialRounding partial;
  FractionalSolution filtered;
  std::vector<std::size_t> idle_closed;
  Clustering clustering;
  RerouteResult rerouted;
  std::vector<std::size_t> opened;
  IntegralAssignment assignment;
  StarCover cover;
  StageReport report;
};

MsscTrace run_mssc_rounding(const MetricInstance& instance, const Rational& T,
                            const Rational& epsilon, MsscLpResult lp,
                            const PreprocessOptions& options = {});

/// solve_mssc_lp followed by run_mssc_rounding.
MsscTrace run_mssc_pipeline(const MetricInstance& instance, const Rational& T,
                            const Rational& epsilon, const PreprocessOptions& options = {});

/// Cover of load <= (2 + 6 eps) T and size <= mssc_size_bound(eps, k_star).
RoundingOutcome round_mssc(const MetricInstance& instance, const Rational& T,
                           const Rational& epsilon);

/// ceil((nu / lambda) k_star) + floor((1 + eps) rho eps k_star).
Integer mssc_size_bound(const Rational& epsilon, const Rational& k_star);
Rational mssc_load_bound(const Rational& epsilon, const Rational& T);

}  // namespace starcover
