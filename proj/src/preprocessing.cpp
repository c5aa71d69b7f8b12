#include "starcover/preprocessing.hpp"

#include <algorithm>
#include <string>

#include "starcover/error.hpp"

namespace starcover {

namespace {

[[noreturn]] void precondition(const std::string& what) {
  throw Error(ErrorCode::PreconditionViolated, what);
}

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_preconditions(const MetricInstance& instance, const FractionalSolution& sol,
                         const Rational& T, const Rational& mu, const Rational& gamma) {
  const std::size_t nF = instance.n_facilities();
  const std::size_t nC = instance.n_clients();
  if (sol.n_facilities() != nF || sol.x.rows() != nF || sol.x.cols() != nC) {
    precondition("solution shape does not match instance");
  }
  if (gamma <= 0 || gamma >= 1) precondition("gamma must lie in (0,1)");
  if (mu < 1) precondition("mu must be at least 1");
  if (T < 0) precondition("T must be non-negative");
  for (std::size_t i = 0; i < nF; ++i) {
    if (sol.y[i] < 0 || sol.y[i] > 1) precondition("y out of [0,1] at facility " + std::to_string(i));
    if (fractional_load(instance, sol.x, i) > mu * T * sol.y[i]) {
      precondition("load exceeds mu*T*y at facility " + std::to_string(i));
    }
    for (std::size_t j = 0; j < nC; ++j) {
      const Rational& x = sol.x(i, j);
      if (x < 0 || x > 1) precondition("x out of [0,1] at " + pair_str(i, j));
      if (x > sol.y[i]) precondition("x exceeds y at " + pair_str(i, j));
      if (sgn(x) != 0 && instance.d(i, j) > T) precondition("positive x beyond T at " + pair_str(i, j));
    }
  }
  for (std::size_t j = 0; j < nC; ++j) {
    if (client_mass(sol.x, j) != 1) precondition("client " + std::to_string(j) + " not fully assigned");
  }
}

}  // namespace

std::size_t ResidualState::degree(std::size_t facility) const {
  auto lo = std::lower_bound(edges.begin(), edges.end(), Edge{facility, 0});
  auto hi = std::lower_bound(edges.begin(), edges.end(), Edge{facility + 1, 0});
  return static_cast<std::size_t>(hi - lo);
}

std::size_t ResidualState::size_measure() const {
  return edges.size() +
         static_cast<std::size_t>(std::count(active_facilities.begin(), active_facilities.end(), 1)) +
         static_cast<std::size_t>(std::count(active_clients.begin(), active_clients.end(), 1));
}

ResidualState initial_residual_state(const MetricInstance& instance,
                                     const FractionalSolution& sol, const Rational& T,
                                     const Rational& mu) {
  ResidualState state;
  const std::size_t nF = instance.n_facilities();
  const std::size_t nC = instance.n_clients();
  state.active_facilities.assign(nF, 1);
  state.active_clients.assign(nC, 1);
  state.remaining_demand.assign(nC, Rational(1));
  state.remaining_load.resize(nF);
  for (std::size_t i = 0; i < nF; ++i) {
    state.remaining_load[i] = mu * T * sol.y[i];
    for (std::size_t j = 0; j < nC; ++j) {
      if (sgn(sol.x(i, j)) > 0) state.edges.push_back({i, j});
    }
  }
  return state;
}

LinearProgram residual_polytope(const MetricInstance& instance, const ResidualState& state,
                                const std::vector<Rational>& y) {
  LinearProgram lp;
  for (const Edge& e : state.edges) {
    const Rational& cap = std::min(y[e.facility], state.remaining_demand[e.client]);
    lp.add_variable("w" + pair_str(e.facility, e.client), 0, cap);
  }
  const std::size_t n = lp.num_variables();
  for (std::size_t j = 0; j < state.active_clients.size(); ++j) {
    if (!state.active_clients[j]) continue;
    std::vector<Rational> row(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (state.edges[v].client == j) row[v] = 1;
    }
    lp.add_constraint(std::move(row), Relation::Equal, state.remaining_demand[j],
                      "demand[" + std::to_string(j) + "]");
  }
  for (std::size_t i = 0; i < state.active_facilities.size(); ++i) {
    if (!state.active_facilities[i] || state.degree(i) == 0) continue;
    std::vector<Rational> row(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (state.edges[v].facility == i) row[v] = instance.d(i, state.edges[v].client);
    }
    lp.add_constraint(std::move(row), Relation::LessEqual, state.remaining_load[i],
                      "load[" + std::to_string(i) + "]");
  }
  return lp;
}

VertexCase classify_vertex(const std::vector<Rational>& w, const ResidualState& state,
                           const std::vector<Rational>& y, const Rational& gamma) {
  const auto& E = state.edges;
  for (std::size_t v = 0; v < E.size(); ++v) {
    if (sgn(w[v]) == 0) return {VertexCaseTag::ZeroEdge, E[v].facility, E[v].client};
  }
  for (std::size_t v = 0; v < E.size(); ++v) {
    if (w[v] == y[E[v].facility]) return {VertexCaseTag::EdgeAtY, E[v].facility, E[v].client};
  }
  for (std::size_t v = 0; v < E.size(); ++v) {
    if (w[v] == state.remaining_demand[E[v].client]) {
      return {VertexCaseTag::EdgeAtD, E[v].facility, E[v].client};
    }
  }
  for (std::size_t i = 0; i < state.active_facilities.size(); ++i) {
    if (state.active_facilities[i] && state.degree(i) <= 1) {
      return {VertexCaseTag::DegreeLeqOne, i, std::nullopt};
    }
  }
  for (std::size_t i = 0; i < state.active_facilities.size(); ++i) {
    if (!state.active_facilities[i] || state.degree(i) != 2) continue;
    Rational carried = 0;
    for (std::size_t v = 0; v < E.size(); ++v) {
      if (E[v].facility == i) carried += w[v];
    }
    if (carried >= gamma * y[i]) return {VertexCaseTag::DegreeTwoHeavyPair, i, std::nullopt};
  }
  throw Error(ErrorCode::NoCaseApplies, "no vertex case applies; input is not an extreme point");
}

bool restriction_feasible(const MetricInstance& instance, const ResidualState& state,
                          const std::vector<Rational>& y, const std::vector<Edge>& previous_edges,
                          const std::vector<Rational>& w) {
  std::vector<Rational> restricted;
  restricted.reserve(state.edges.size());
  for (const Edge& e : state.edges) {
    auto it = std::lower_bound(previous_edges.begin(), previous_edges.end(), e);
    if (it == previous_edges.end() || *it != e) return false;
    restricted.push_back(w[static_cast<std::size_t>(it - previous_edges.begin())]);
  }
  LinearProgram lp = residual_polytope(instance, state, y);
  return check_vertex(lp, restricted).feasible;
}

PreprocessResult preprocess(const MetricInstance& instance, const FractionalSolution& sol,
                            const Rational& T, const Rational& mu, const Rational& gamma,
                            const PreprocessOptions& options) {
  check_preconditions(instance, sol, T, mu, gamma);

  PreprocessResult result;
  result.sol = FractionalSolution(instance.n_facilities(), instance.n_clients());
  result.sol.y = sol.y;
  auto& xp = result.sol.x;
  const auto& y = sol.y;

  ResidualState state = initial_residual_state(instance, sol, T, mu);
  while (!state.edges.empty()) {
    LinearProgram lp = residual_polytope(instance, state, y);
    LpOutcome vertex = solve_vertex(lp);
    if (!vertex.feasible()) throw Error(ErrorCode::Internal, "residual polytope became empty");
    const std::vector<Rational>& w = vertex.values;

    const std::size_t before = state.size_measure();
    const std::vector<Edge> previous_edges = state.edges;
    VertexCase c = classify_vertex(w, state, y, gamma);
    result.trace.push_back(c);

    auto erase_edge = [&](std::size_t i, std::size_t j) -> Rational {
      auto it = std::lower_bound(state.edges.begin(), state.edges.end(), Edge{i, j});
      Rational value = w[static_cast<std::size_t>(it - state.edges.begin())];
      state.edges.erase(it);
      return value;
    };

    switch (c.tag) {
      case VertexCaseTag::ZeroEdge: {
        xp(c.facility, *c.client) = 0;
        erase_edge(c.facility, *c.client);
        break;
      }
      case VertexCaseTag::EdgeAtY: {
        const std::size_t i = c.facility;
        const std::size_t j = *c.client;
        Rational wij = erase_edge(i, j);
        xp(i, j) = y[i];
        state.remaining_demand[j] -= y[i];
        state.remaining_load[i] -= instance.d(i, j) * wij;
        break;
      }
      case VertexCaseTag::EdgeAtD: {
        const std::size_t i = c.facility;
        const std::size_t j = *c.client;
        Rational wij = erase_edge(i, j);
        xp(i, j) = state.remaining_demand[j];
        state.remaining_demand[j] = 0;
        state.remaining_load[i] -= instance.d(i, j) * wij;
        break;
      }
      case VertexCaseTag::DegreeLeqOne:
      case VertexCaseTag::DegreeTwoHeavyPair:
        state.active_facilities[c.facility] = 0;
        break;
    }

    for (std::size_t j = 0; j < state.active_clients.size(); ++j) {
      if (!state.active_clients[j] || state.remaining_demand[j] >= gamma) continue;
      state.active_clients[j] = 0;
      std::erase_if(state.edges, [&](const Edge& e) {
        if (e.client != j) return false;
        xp(e.facility, j) = 0;
        return true;
      });
    }

    ++result.iterations;
    if (state.size_measure() >= before) {
      throw Error(ErrorCode::Internal, "preprocessing made no progress");
    }
    if (options.check_restriction && !state.edges.empty() &&
        !restriction_feasible(instance, state, y, previous_edges, w)) {
      throw Error(ErrorCode::Internal, "restricted vertex infeasible for next polytope");
    }
  }
  return result;
}

}  // namespace starcover
