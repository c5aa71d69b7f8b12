#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "starcover/matrix.hpp"
#include "starcover/rational.hpp"

namespace starcover {

/// Finite metric over facilities and clients. Points 0..n_facilities-1 are
/// facilities, the remaining n_clients points are clients.
class MetricInstance {
 public:
  MetricInstance() = default;
  /// Throws Error(InvalidArgument) when `dist` is not square of dimension
  /// n_facilities + n_clients. Metric axioms are not checked here; see
  /// validate_metric.
  MetricInstance(std::size_t n_facilities, std::size_t n_clients, Matrix<Rational> dist);

  std::size_t n_facilities() const noexcept { return n_facilities_; }
  std::size_t n_clients() const noexcept { return n_clients_; }
  std::size_t n_points() const noexcept { return n_facilities_ + n_clients_; }

  std::size_t client_point(std::size_t client) const noexcept { return n_facilities_ + client; }

  /// Distance between facility `i` and client `j`.
  const Rational& d(std::size_t facility, std::size_t client) const {
    return dist_(facility, n_facilities_ + client);
  }
  const Rational& facility_distance(std::size_t a, std::size_t b) const { return dist_(a, b); }
  const Rational& client_distance(std::size_t a, std::size_t b) const {
    return dist_(n_facilities_ + a, n_facilities_ + b);
  }
  const Rational& point_distance(std::size_t a, std::size_t b) const { return dist_(a, b); }

  const Matrix<Rational>& dist() const noexcept { return dist_; }

  bool operator==(const MetricInstance&) const = default;

 private:
  std::size_t n_facilities_ = 0;
  std::size_t n_clients_ = 0;
  Matrix<Rational> dist_;
};

struct Star {
  std::size_t facility = 0;
  std::vector<std::size_t> clients;

  bool operator==(const Star&) const = default;
};

struct StarCover {
  std::vector<Star> stars;

  std::size_t size() const noexcept { return stars.size(); }
  bool operator==(const StarCover&) const = default;
};

/// Assignment matrix x (facility x client) and opening vector y.
struct FractionalSolution {
  Matrix<Rational> x;
  std::vector<Rational> y;

  FractionalSolution() = default;
  FractionalSolution(std::size_t n_facilities, std::size_t n_clients)
      : x(n_facilities, n_clients), y(n_facilities) {}

  std::size_t n_facilities() const noexcept { return y.size(); }
  std::size_t n_clients() const noexcept { return x.cols(); }

  bool operator==(const FractionalSolution&) const = default;
};

enum class Regime { MLK, MSSC };

/// epsilon together with every constant derived from it for one regime.
struct PipelineParams {
  Rational epsilon;
  Regime regime = Regime::MLK;
  Rational rho;
  Rational gamma;
  Rational mu;
  Rational lambda;
  Rational nu;
  std::optional<Rational> nu_hat;  // MSSC only

  /// Throws Error(InvalidArgument) unless 0 < epsilon < 1.
  static PipelineParams for_mlk(const Rational& epsilon);
  static PipelineParams for_mssc(const Rational& epsilon);

  /// Load constant used by the rerouting stage: nu for MLK, nu_hat for MSSC.
  const Rational& reroute_nu() const { return nu_hat ? *nu_hat : nu; }
};

struct Violation {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool failed(std::string_view check) const;
  void add(std::string check, std::string detail) {
    violations.push_back({std::move(check), std::move(detail)});
  }
};

Rational star_load(const MetricInstance& instance, const Star& star);
Rational cover_load(const MetricInstance& instance, const StarCover& cover);

/// Checks shape, zero diagonal, symmetry, non-negativity and every triangle.
/// Violations are listed with check names "shape", "diagonal", "symmetry",
/// "negative" and "triangle".
ValidationReport validate_metric(const MetricInstance& instance);

/// Independent checks "indices", "disjoint", "coverage", "size" and "load".
ValidationReport validate_cover(const MetricInstance& instance, const StarCover& cover,
                                std::size_t k, const Rational& T);

/// L(i, x) = sum_j d(i, j) x_ij.
Rational fractional_load(const MetricInstance& instance, const Matrix<Rational>& x,
                         std::size_t facility);
inline Rational fractional_load(const MetricInstance& instance, const FractionalSolution& sol,
                                std::size_t facility) {
  return fractional_load(instance, sol.x, facility);
}

/// D(j) = sum_i d(i, j) x_ij for every client.
std::vector<Rational> compute_avg_distances(const MetricInstance& instance,
                                            const Matrix<Rational>& x);

/// Sum of column `client` of x.
Rational client_mass(const Matrix<Rational>& x, std::size_t client);

}  // namespace starcover
