#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "starcover/core_model.hpp"
#include "starcover/rational.hpp"

namespace starcover {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };

struct LpVariable {
  std::string name;
  Rational lower = 0;
  std::optional<Rational> upper;  // nullopt is +infinity
};

struct LpConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs = 0;
  std::string name;
};

struct LpObjective {
  std::vector<Rational> coeffs;
  Sense sense = Sense::Minimize;
};

/// Bounded-variable linear program with dense coefficient rows.
class LinearProgram {
 public:
  std::size_t add_variable(std::string name, Rational lower, std::optional<Rational> upper);
  /// Row length must equal the current variable count.
  std::size_t add_constraint(std::vector<Rational> coeffs, Relation relation, Rational rhs,
                             std::string name = {});
  void set_objective(std::vector<Rational> coeffs, Sense sense);

  std::size_t num_variables() const noexcept { return variables_.size(); }
  std::size_t num_constraints() const noexcept { return constraints_.size(); }
  const std::vector<LpVariable>& variables() const noexcept { return variables_; }
  const std::vector<LpConstraint>& constraints() const noexcept { return constraints_; }
  const std::optional<LpObjective>& objective() const noexcept { return objective_; }

  /// Throws Error(InvalidArgument) on ragged rows or lower > upper.
  void validate() const;

 private:
  std::vector<LpVariable> variables_;
  std::vector<LpConstraint> constraints_;
  std::optional<LpObjective> objective_;
};

enum class LpStatus { VertexFeasible, Infeasible };

struct BoundRef {
  std::size_t variable = 0;
  bool upper = false;
  bool operator==(const BoundRef&) const = default;
};

/// Constraints and bounds holding with equality at the returned point.
struct TightSet {
  std::vector<std::size_t> rows;
  std::vector<BoundRef> bounds;
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> values;
  TightSet tight;
  std::size_t pivots = 0;

  bool feasible() const noexcept { return status == LpStatus::VertexFeasible; }
};

/// Exact two-phase simplex (Dantzig pricing, Bland's rule after degenerate
/// steps) returning a basic feasible solution,
/// i.e. a vertex of the feasible polytope; optimal when an objective is set.
/// Throws Error(UnboundedObjective) if the objective is unbounded.
LpOutcome solve_vertex(const LinearProgram& lp);

/// Recomputes the tight set of `values` from the LP data alone.
TightSet compute_tight_set(const LinearProgram& lp, const std::vector<Rational>& values);

struct VertexCheck {
  bool feasible = false;
  std::size_t tight_rank = 0;
  bool is_vertex = false;  // feasible and tight rank equals variable count
  std::string failure;
};

/// Independent certificate: exact constraint recheck plus rank of the tight rows.
VertexCheck check_vertex(const LinearProgram& lp, const std::vector<Rational>& values);

/// Rank of a set of rational rows (Gaussian elimination).
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// Called after every solve_vertex on the registering thread while alive.
class ScopedSolveObserver {
 public:
  using Callback = std::function<void(const LinearProgram&, const LpOutcome&)>;
  explicit ScopedSolveObserver(Callback callback);
  ~ScopedSolveObserver();
  ScopedSolveObserver(const ScopedSolveObserver&) = delete;
  ScopedSolveObserver& operator=(const ScopedSolveObserver&) = delete;

 private:
  Callback previous_;
};

/// SC-LP(T, k) with its variable layout. Variables are y_0..y_{nF-1} followed by
/// x_ij for every pair with d(i, j) <= T in row-major order; pairs with
/// d(i, j) > T are eliminated.
struct ScLpModel {
  LinearProgram lp;
  std::size_t n_facilities = 0;
  std::size_t n_clients = 0;
  std::vector<std::optional<std::size_t>> x_index;  // nF * nC, row-major

  std::size_t y_var(std::size_t facility) const { return facility; }
  const std::optional<std::size_t>& x_var(std::size_t facility, std::size_t client) const {
    return x_index[facility * n_clients + client];
  }
  FractionalSolution extract(const std::vector<Rational>& values) const;
};

/// Builds constraints (1), (3), (4) and (if `k` is given) (2); bounds carry (5)
/// and (6); (7) is applied by elimination.
ScLpModel build_sclp(const MetricInstance& instance, const Rational& T,
                     const std::optional<Rational>& k);

struct MlkLpResult {
  Rational T_star;
  FractionalSolution sol;
  std::size_t lp_solves = 0;
};

inline const Rational kDefaultLpGap = Rational(1, 1000);

/// Binary search for the least T making SC-LP(T, k) feasible, within factor
/// (1 + rel_gap). Returns a feasible vertex at T_star.
MlkLpResult solve_mlk_lp(const MetricInstance& instance, std::size_t k,
                         const Rational& rel_gap = kDefaultLpGap);

struct MsscLpResult {
  Rational k_star;
  FractionalSolution sol;
};

/// Minimises sum y subject to SC-LP(T, .) without the cardinality row.
/// Throws Error(NoCoverWithinT) when some client has no facility within T and
/// Error(Infeasible) when the load rows cannot be met fractionally.
MsscLpResult solve_mssc_lp(const MetricInstance& instance, const Rational& T);

/// Exact recheck of every SC-LP(T, k) constraint for (x, y).
std::vector<std::string> sclp_violations(const MetricInstance& instance,
                                         const FractionalSolution& sol, const Rational& T,
                                         const std::optional<Rational>& k);

}  // namespace starcover
