#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "starcover/core_model.hpp"
#include "starcover/lp_engine.hpp"

namespace starcover {

struct Edge {
  std::size_t facility = 0;
  std::size_t client = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Shrinking state of the preprocessing loop. Edges of a facility removed from
/// the active set stay in `edges`; every edge's client is active.
struct ResidualState {
  std::vector<char> active_facilities;
  std::vector<char> active_clients;
  std::vector<Edge> edges;  // ascending (facility, client)
  std::vector<Rational> remaining_demand;
  std::vector<Rational> remaining_load;

  std::size_t degree(std::size_t facility) const;
  std::size_t size_measure() const;  // |E| + |active F| + |active C|
};

enum class VertexCaseTag {
  ZeroEdge,             // w_ij = 0
  EdgeAtY,              // w_ij = y_i
  EdgeAtD,              // w_ij = d_j
  DegreeLeqOne,         // active i with at most one edge
  DegreeTwoHeavyPair,   // active i with two edges carrying >= gamma * y_i
};

struct VertexCase {
  VertexCaseTag tag = VertexCaseTag::ZeroEdge;
  std::size_t facility = 0;
  std::optional<std::size_t> client;  // set for edge cases

  bool operator==(const VertexCase&) const = default;
};

/// Initial state: all facilities and clients active, edges = support of x,
/// demands 1, loads mu * T * y_i.
ResidualState initial_residual_state(const MetricInstance& instance,
                                     const FractionalSolution& sol, const Rational& T,
                                     const Rational& mu);

/// P(F~, C~, E, d, L) with one variable per edge, in `state.edges` order.
LinearProgram residual_polytope(const MetricInstance& instance, const ResidualState& state,
                                const std::vector<Rational>& y);

/// First applicable case under priority a, b, c, d, e; ties go to the smallest
/// (facility, client). `w` is aligned with `state.edges`.
/// Throws Error(NoCaseApplies) when none holds, which means `w` is not a vertex.
VertexCase classify_vertex(const std::vector<Rational>& w, const ResidualState& state,
                           const std::vector<Rational>& y, const Rational& gamma);

/// True when `w` (aligned with `previous_edges`) restricted to `state.edges`
/// is feasible for the polytope of `state`.
bool restriction_feasible(const MetricInstance& instance, const ResidualState& state,
                          const std::vector<Rational>& y, const std::vector<Edge>& previous_edges,
                          const std::vector<Rational>& w);

struct PreprocessOptions {
#ifdef NDEBUG
  bool check_restriction = false;
#else
  bool check_restriction = true;
#endif
};

struct PreprocessResult {
  FractionalSolution sol;
  std::size_t iterations = 0;
  std::vector<VertexCase> trace;
};

/// Rewrites (x, y) so that every positive x'_ij >= gamma * y_i while each
/// client keeps at least 1 - gamma demand and every load stays within
/// (mu + 2 - gamma) T y_i. y is returned unchanged.
/// Throws Error(PreconditionViolated) naming the offending facility/client.
PreprocessResult preprocess(const MetricInstance& instance, const FractionalSolution& sol,
                            const Rational& T, const Rational& mu, const Rational& gamma,
                            const PreprocessOptions& options = {});

}  // namespace starcover
