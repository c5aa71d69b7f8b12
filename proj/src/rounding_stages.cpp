#include "starcover/rounding_stages.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "starcover/error.hpp"

namespace starcover {

namespace {

std::vector<std::size_t> marked(const std::vector<char>& flags) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < flags.size(); ++v) {
    if (flags[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> PartialRounding::remaining_facilities() const {
  return marked(in_facilities);
}

std::vector<std::size_t> PartialRounding::remaining_clients() const { return marked(in_clients); }

std::vector<std::size_t> facility_neighbors(const Matrix<Rational>& x,
                                            const PartialRounding& partial, std::size_t facility) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    if (partial.in_clients[j] && sgn(x(facility, j)) > 0) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> client_neighbors(const Matrix<Rational>& x,
                                          const PartialRounding& partial, std::size_t client) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    if (partial.in_facilities[i] && sgn(x(i, client)) > 0) out.push_back(i);
  }
  return out;
}

std::optional<Rational> min_neighbor_distance(const Matrix<Rational>& x,
                                              const PartialRounding& partial,
                                              const std::vector<Rational>& D,
                                              std::size_t facility) {
  std::optional<Rational> best;
  for (std::size_t j : facility_neighbors(x, partial, facility)) {
    if (!best || D[j] < *best) best = D[j];
  }
  return best;
}

PartialRounding open_heavy(const MetricInstance& instance, const FractionalSolution& sol,
                           const std::vector<Rational>& D, const Rational& lambda,
                           const Rational& T) {
  const std::size_t nF = instance.n_facilities();
  const std::size_t nC = instance.n_clients();
  if (sol.n_facilities() != nF || sol.n_clients() != nC || D.size() != nC) {
    throw Error(ErrorCode::InvalidArgument, "open_heavy: shape mismatch");
  }
  PartialRounding partial;
  partial.x_dot = sol.x;
  partial.y_dot.assign(nF, Decision::Pending);
  partial.in_facilities.assign(nF, 1);
  partial.in_clients.assign(nC, 1);

  const Rational threshold = lambda * T;
  for (std::size_t i = 0; i < nF; ++i) {
    std::vector<std::size_t> served = facility_neighbors(sol.x, partial, i);
    Rational mass = 0;
    for (std::size_t j : served) mass += D[j];
    if (mass <= threshold) continue;

    partial.in_facilities[i] = 0;
    partial.y_dot[i] = Decision::Open;
    for (std::size_t j : served) {
      partial.in_clients[j] = 0;
      for (std::size_t h = 0; h < nF; ++h) partial.x_dot(h, j) = 0;
      partial.x_dot(i, j) = 1;
    }
    partial.heavy.push_back({i, std::move(served)});
  }
  return partial;
}

std::vector<std::size_t> close_idle_facilities(const Matrix<Rational>& x,
                                               PartialRounding& partial) {
  std::vector<std::size_t> closed;
  for (std::size_t i = 0; i < partial.in_facilities.size(); ++i) {
    if (!partial.in_facilities[i] || !facility_neighbors(x, partial, i).empty()) continue;
    partial.in_facilities[i] = 0;
    partial.y_dot[i] = Decision::Closed;
    for (std::size_t j = 0; j < partial.x_dot.cols(); ++j) {
      if (partial.in_clients[j]) partial.x_dot(i, j) = 0;
    }
    closed.push_back(i);
  }
  return closed;
}

std::size_t Clustering::center_position(std::size_t center) const {
  auto it = std::find(centers.begin(), centers.end(), center);
  if (it == centers.end()) {
    throw Error(ErrorCode::InvalidArgument, "client " + std::to_string(center) + " is not a center");
  }
  return static_cast<std::size_t>(it - centers.begin());
}

Clustering cluster(const MetricInstance& instance, const Matrix<Rational>& x,
                   const PartialRounding& partial, const std::vector<Rational>& D,
                   const Rational& rho) {
  Clustering out;
  std::vector<std::size_t> order = partial.remaining_clients();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return D[a] < D[b]; });
  for (std::size_t j : order) {
    const Rational radius = 2 * rho * D[j];
    bool blocked = std::any_of(out.centers.begin(), out.centers.end(), [&](std::size_t s) {
      return instance.client_distance(s, j) <= radius;
    });
    if (!blocked) out.centers.push_back(j);
  }

  out.cluster_of.assign(instance.n_facilities(), std::nullopt);
  out.members.assign(out.centers.size(), {});
  for (std::size_t i : partial.remaining_facilities()) {
    std::optional<std::size_t> pos;
    for (std::size_t p = 0; p < out.centers.size(); ++p) {
      if (sgn(x(i, out.centers[p])) > 0) {
        pos = p;
        break;
      }
    }
    if (!pos) {
      std::vector<std::size_t> served = facility_neighbors(x, partial, i);
      if (served.empty()) {
        throw Error(ErrorCode::OrphanFacility,
                    "facility " + std::to_string(i) + " serves no remaining client");
      }
      std::size_t j = served.front();
      for (std::size_t r : served) {
        if (D[r] < D[j]) j = r;
      }
      for (std::size_t p = 0; p < out.centers.size(); ++p) {
        const std::size_t s = out.centers[p];
        if (D[s] <= D[j] && instance.client_distance(s, j) <= 2 * rho * D[j]) {
          pos = p;
          break;
        }
      }
      if (!pos) {
        throw Error(ErrorCode::Internal, "no center blocks client " + std::to_string(j));
      }
    }
    out.cluster_of[i] = out.centers[*pos];
    out.members[*pos].push_back(i);
  }
  return out;
}

RerouteResult reroute(const MetricInstance& instance, const Matrix<Rational>& x,
                      const std::vector<Rational>& y, const Clustering& clustering,
                      const std::vector<Rational>& D, const Rational& epsilon,
                      const PartialRounding& partial) {
  const std::size_t nF = instance.n_facilities();
  RerouteResult out;
  out.x_dot = partial.x_dot;
  out.y_dot = partial.y_dot;
  const std::vector<std::size_t> clients = partial.remaining_clients();
  for (std::size_t j : clients) {
    for (std::size_t i = 0; i < nF; ++i) out.x_dot(i, j) = 0;
  }

  out.opened.resize(clustering.centers.size());
  for (std::size_t p = 0; p < clustering.centers.size(); ++p) {
    const std::vector<std::size_t>& members = clustering.members[p];
    Rational mass = 0;
    for (std::size_t u : members) mass += y[u];
    const Integer budget = floor((1 + epsilon) * mass);
    if (sgn(budget) <= 0) {
      throw Error(ErrorCode::EmptyClusterOpening,
                  "cluster of client " + std::to_string(clustering.centers[p]) + " opens nothing");
    }

    std::vector<std::pair<Rational, std::size_t>> ranked;
    for (std::size_t i : members) {
      std::optional<Rational> key = min_neighbor_distance(x, partial, D, i);
      if (!key) {
        throw Error(ErrorCode::OrphanFacility,
                    "facility " + std::to_string(i) + " serves no remaining client");
      }
      ranked.emplace_back(std::move(*key), i);
    }
    std::sort(ranked.begin(), ranked.end());

    std::vector<std::size_t>& K = out.opened[p];
    std::vector<std::size_t> closed;
    for (const auto& [key, i] : ranked) {
      if (sgn(y[i]) == 0) {
        out.y_dot[i] = Decision::Closed;
      } else if (K.size() + 1 <= budget) {
        K.push_back(i);
        out.y_dot[i] = Decision::Open;
      } else {
        out.y_dot[i] = Decision::Closed;
        closed.push_back(i);
      }
    }
    for (std::size_t h : K) {
      for (std::size_t j : clients) out.x_dot(h, j) += x(h, j);
    }
    const Rational share(1, static_cast<unsigned long>(K.size()));
    for (std::size_t i : closed) {
      for (std::size_t j : clients) {
        if (sgn(x(i, j)) == 0) continue;
        const Rational part = x(i, j) * share;
        for (std::size_t h : K) out.x_dot(h, j) += part;
      }
    }
  }
  return out;
}

}  // namespace starcover
