#pragma once

#include <cstddef>
#include <vector>

#include "starcover/assignment_rounding.hpp"
#include "starcover/core_model.hpp"
#include "starcover/lp_engine.hpp"
#include "starcover/preprocessing.hpp"
#include "starcover/report.hpp"
#include "starcover/rounding_stages.hpp"

namespace starcover {

/// Zeroes x_ij with d(i, j) > rho D(j) (D taken from sol.x), rescales each
/// client's surviving mass to 1 and sets y_hat = min(1, (1 + epsilon) y).
FractionalSolution lin_vitter_filter(const MetricInstance& instance, const FractionalSolution& sol,
                                     const Rational& epsilon);

/// Divides every column by its sum. Throws Error(ZeroDemandClient) on an
/// all-zero column.
Matrix<Rational> rescale_demands(const Matrix<Rational>& x_dot);

/// Every intermediate value of one MLkSC rounding run.
struct MlkTrace {
  PipelineParams params;
  std::size_t k = 0;
  MlkLpResult lp;
  std::vector<Rational> D;
  FractionalSolution filtered;
  PreprocessResult preprocessed;
  PartialRounding partial;
  std::vector<std::size_t> idle_closed;
  Clustering clustering;
  RerouteResult rerouted;
  Matrix<Rational> rescaled;
  std::vector<std::size_t> opened;  // heavy and rerouting openings, ascending
  IntegralAssignment assignment;
  StarCover cover;
  StageReport report;
};

/// Rounds an already solved SC-LP(T_star, k) vertex.
MlkTrace run_mlk_rounding(const MetricInstance& instance, std::size_t k, const Rational& epsilon,
                          MlkLpResult lp, const PreprocessOptions& options = {});

/// solve_mlk_lp followed by run_mlk_rounding.
MlkTrace run_mlk_pipeline(const MetricInstance& instance, std::size_t k, const Rational& epsilon,
                          const Rational& rel_gap = kDefaultLpGap,
                          const PreprocessOptions& options = {});

struct RoundingOutcome {
  StarCover cover;
  StageReport report;
};

/// Cover of size <= floor((1 + 4 eps) k) and load <= 48 (1 + (1 + eps)/eps^2) T_star.
/// Throws Error(InvalidArgument) unless 1 <= k <= |F| and 0 < epsilon < 1.
RoundingOutcome round_mlk(const MetricInstance& instance, std::size_t k, const Rational& epsilon,
                          const Rational& rel_gap = kDefaultLpGap);

/// Stars of an integral assignment, by ascending facility; empty stars dropped.
StarCover cover_from_assignment(std::size_t n_facilities, const IntegralAssignment& assignment);

/// size bound floor((1 + 4 eps) k) and load bound 48 (1 + (1 + eps)/eps^2) T.
Integer mlk_size_bound(const Rational& epsilon, std::size_t k);
Rational mlk_load_bound(const Rational& epsilon, const Rational& T);

}  // namespace starcover
