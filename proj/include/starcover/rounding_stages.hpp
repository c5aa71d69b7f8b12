#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "starcover/core_model.hpp"

namespace starcover {

enum class Decision { Pending, Open, Closed };

struct HeavyStar {
  std::size_t facility = 0;
  std::vector<std::size_t> clients;
};

/// State shared by the heavy, clustering and rerouting stages.
/// `in_facilities` / `in_clients` mark F' and C'.
struct PartialRounding {
  Matrix<Rational> x_dot;
  std::vector<Decision> y_dot;
  std::vector<char> in_facilities;
  std::vector<char> in_clients;
  std::vector<HeavyStar> heavy;  // in opening order

  std::vector<std::size_t> remaining_facilities() const;
  std::vector<std::size_t> remaining_clients() const;
};

/// N'(i) = { j in C' : x_ij > 0 }.
std::vector<std::size_t> facility_neighbors(const Matrix<Rational>& x,
                                            const PartialRounding& partial, std::size_t facility);
/// N'(j) = { i in F' : x_ij > 0 }.
std::vector<std::size_t> client_neighbors(const Matrix<Rational>& x,
                                          const PartialRounding& partial, std::size_t client);

/// min over N'(i) of D; nullopt when N'(i) is empty.
std::optional<Rational> min_neighbor_distance(const Matrix<Rational>& x,
                                              const PartialRounding& partial,
                                              const std::vector<Rational>& D,
                                              std::size_t facility);

/// Scans facilities in ascending index and opens each one whose current
/// N'(i) has D-sum above lambda * T, assigning N'(i) to it integrally.
/// x_dot starts as sol.x and heavy clients' columns become unit vectors.
PartialRounding open_heavy(const MetricInstance& instance, const FractionalSolution& sol,
                           const std::vector<Rational>& D, const Rational& lambda,
                           const Rational& T);

/// Closes every i in F' with N'(i) empty (y_dot = 0) and drops it from F'.
/// Returns the closed facilities.
std::vector<std::size_t> close_idle_facilities(const Matrix<Rational>& x,
                                               PartialRounding& partial);

struct Clustering {
  std::vector<std::size_t> centers;                     // in creation order
  std::vector<std::optional<std::size_t>> cluster_of;   // facility -> center client
  std::vector<std::vector<std::size_t>> members;        // aligned with centers, ascending

  /// Position of `center` in `centers`.
  std::size_t center_position(std::size_t center) const;
};

/// Centers: clients of C' by ascending (D, index), kept when every earlier
/// center s has d(s, j) > 2 rho D(j). Facilities join the earliest center
/// they serve, otherwise the earliest center that blocked argmin_{N'(i)} D.
/// Throws Error(OrphanFacility) when some i in F' has N'(i) empty.
Clustering cluster(const MetricInstance& instance, const Matrix<Rational>& x,
                   const PartialRounding& partial, const std::vector<Rational>& D,
                   const Rational& rho);

struct RerouteResult {
  Matrix<Rational> x_dot;
  std::vector<Decision> y_dot;
  std::vector<std::vector<std::size_t>> opened;  // K_s aligned with clustering.centers
};

/// Opens floor((1 + epsilon) * sum_{F'(s)} y) facilities per cluster by
/// ascending (min_{N'(i)} D, i) among y_i > 0 and splits each closed
/// facility's C'-assignment equally over K_s. Columns of C' in x_dot are
/// rebuilt from `x`; other columns are copied from `partial`.
/// Throws Error(EmptyClusterOpening) when a cluster's budget is 0.
RerouteResult reroute(const MetricInstance& instance, const Matrix<Rational>& x,
                      const std::vector<Rational>& y, const Clustering& clustering,
                      const std::vector<Rational>& D, const Rational& epsilon,
                      const PartialRounding& partial);

}  // namespace starcover
