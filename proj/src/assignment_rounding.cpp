#include "starcover/assignment_rounding.hpp"

#include <numeric>
#include <string>

#include "starcover/error.hpp"
#include "starcover/lp_engine.hpp"

namespace starcover {

namespace {

// Kuhn's augmenting-path matching of fractional clients to facilities.
class Matcher {
 public:
  Matcher(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t n_facilities)
      : adjacency_(adjacency), owner_(n_facilities) {}

  bool assign(std::size_t client) {
    seen_.assign(owner_.size(), 0);
    return augment(client);
  }

  const std::vector<std::optional<std::size_t>>& owners() const { return owner_; }

 private:
  bool augment(std::size_t client) {
    for (std::size_t i : adjacency_[client]) {
      if (seen_[i]) continue;
      seen_[i] = 1;
      if (!owner_[i] || augment(*owner_[i])) {
        owner_[i] = client;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adjacency_;
  std::vector<std::optional<std::size_t>> owner_;
  std::vector<char> seen_;
};

}  // namespace

IntegralAssignment assignment_round(const MetricInstance& instance,
                                    const std::vector<std::size_t>& opened,
                                    const Matrix<Rational>& x,
                                    const std::vector<std::size_t>& clients) {
  const std::size_t nF = instance.n_facilities();
  const std::size_t nC = instance.n_clients();
  if (x.rows() != nF || x.cols() != nC) {
    throw Error(ErrorCode::InvalidArgument, "assignment matrix shape mismatch");
  }
  std::vector<char> is_open(nF, 0);
  for (std::size_t i : opened) {
    if (i >= nF || is_open[i]) {
      throw Error(ErrorCode::InvalidArgument, "bad opened facility " + std::to_string(i));
    }
    is_open[i] = 1;
  }
  std::vector<char> in_scope(nC, 0);
  for (std::size_t j : clients) {
    if (j >= nC || in_scope[j]) {
      throw Error(ErrorCode::InvalidArgument, "bad client " + std::to_string(j));
    }
    in_scope[j] = 1;
    Rational mass = 0;
    for (std::size_t i = 0; i < nF; ++i) {
      if (sgn(x(i, j)) == 0) continue;
      if (!is_open[i]) {
        throw Error(ErrorCode::InvalidArgument, "client " + std::to_string(j) +
                                                    " has mass on unopened facility " +
                                                    std::to_string(i));
      }
      mass += x(i, j);
    }
    if (mass != 1) {
      throw Error(ErrorCode::UnnormalizedClient,
                  "client " + std::to_string(j) + " sums to " + to_string(mass));
    }
  }

  struct Var {
    std::size_t facility;
    std::size_t client;
  };
  std::vector<Var> vars;
  LinearProgram lp;
  for (std::size_t i : opened) {
    for (std::size_t j : clients) {
      if (sgn(x(i, j)) > 0) {
        vars.push_back({i, j});
        lp.add_variable("z", 0, Rational(1));
      }
    }
  }
  for (std::size_t j : clients) {
    std::vector<Rational> row(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (vars[v].client == j) row[v] = 1;
    }
    lp.add_constraint(std::move(row), Relation::Equal, 1, "client[" + std::to_string(j) + "]");
  }
  for (std::size_t i : opened) {
    std::vector<Rational> row(vars.size());
    Rational load = 0;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (vars[v].facility != i) continue;
      row[v] = instance.d(i, vars[v].client);
      load += instance.d(i, vars[v].client) * x(i, vars[v].client);
    }
    lp.add_constraint(std::move(row), Relation::LessEqual, load,
                      "facility[" + std::to_string(i) + "]");
  }
  LpOutcome vertex = solve_vertex(lp);
  if (!vertex.feasible()) throw Error(ErrorCode::Internal, "transportation polytope is empty");

  IntegralAssignment result(nC);
  std::vector<std::vector<std::size_t>> fractional(nC);
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const Rational& z = vertex.values[v];
    if (z == 1) {
      result[vars[v].client] = vars[v].facility;
    } else if (sgn(z) > 0) {
      fractional[vars[v].client].push_back(vars[v].facility);
    }
  }
  Matcher matcher(fractional, nF);
  for (std::size_t j : clients) {
    if (result[j]) continue;
    if (!matcher.assign(j)) {
      throw Error(ErrorCode::Internal,
                  "fractional client " + std::to_string(j) + " cannot be matched");
    }
  }
  for (std::size_t i = 0; i < nF; ++i) {
    if (const auto& j = matcher.owners()[i]) result[*j] = i;
  }
  return result;
}

IntegralAssignment assignment_round(const MetricInstance& instance,
                                    const std::vector<std::size_t>& opened,
                                    const Matrix<Rational>& x) {
  std::vector<std::size_t> clients(instance.n_clients());
  std::iota(clients.begin(), clients.end(), std::size_t{0});
  return assignment_round(instance, opened, x, clients);
}

}  // namespace starcover
