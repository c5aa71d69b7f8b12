#include "starcover/core_model.hpp"

#include <algorithm>
#include <sstream>

#include "starcover/error.hpp"

namespace starcover {

MetricInstance::MetricInstance(std::size_t n_facilities, std::size_t n_clients,
                               Matrix<Rational> dist)
    : n_facilities_(n_facilities), n_clients_(n_clients), dist_(std::move(dist)) {
  const std::size_t n = n_facilities_ + n_clients_;
  if (dist_.rows() != n || dist_.cols() != n) {
    std::ostringstream msg;
    msg << "distance matrix is " << dist_.rows() << "x" << dist_.cols() << ", expected " << n
        << "x" << n;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

PipelineParams PipelineParams::for_mlk(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0,1), got " + to_string(epsilon));
  }
  PipelineParams p;
  p.epsilon = epsilon;
  p.regime = Regime::MLK;
  p.rho = (1 + epsilon) / epsilon;
  p.mu = 1 + epsilon;
  p.gamma = epsilon / (1 + epsilon);
  p.lambda = 1 / epsilon;
  p.nu = p.mu + 2 - p.gamma;
  return p;
}

PipelineParams PipelineParams::for_mssc(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0,1), got " + to_string(epsilon));
  }
  PipelineParams p;
  p.epsilon = epsilon;
  p.regime = Regime::MSSC;
  p.mu = 1;
  p.gamma = 1 / (1 + epsilon);
  p.lambda = epsilon * epsilon / 15;
  p.rho = (1 + epsilon) * (1 + epsilon) / (epsilon * epsilon);
  p.nu = p.mu + 2 - p.gamma;
  p.nu_hat = Rational((1 + epsilon) * (1 + epsilon) / 15);
  return p;
}

bool ValidationReport::failed(std::string_view check) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.check == check; });
}

Rational star_load(const MetricInstance& instance, const Star& star) {
  if (star.facility >= instance.n_facilities()) {
    throw Error(ErrorCode::InvalidStar, "facility " + std::to_string(star.facility) + " out of range");
  }
  std::vector<std::size_t> seen = star.clients;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorCode::InvalidStar, "duplicate client in star of facility " +
                                            std::to_string(star.facility));
  }
  Rational load = 0;
  for (std::size_t j : star.clients) {
    if (j >= instance.n_clients()) {
      throw Error(ErrorCode::InvalidStar, "client " + std::to_string(j) + " out of range");
    }
    load += instance.d(star.facility, j);
  }
  return load;
}

Rational cover_load(const MetricInstance& instance, const StarCover& cover) {
  auto report = validate_cover(instance, cover, cover.size(), Rational(0));
  for (const auto& v : report.violations) {
    if (v.check != "load") throw Error(ErrorCode::InvalidCover, v.detail);
  }
  Rational best = 0;
  for (const auto& star : cover.stars) best = std::max(best, star_load(instance, star));
  return best;
}

ValidationReport validate_metric(const MetricInstance& instance) {
  ValidationReport report;
  const auto& d = instance.dist();
  const std::size_t n = instance.n_points();
  if (d.rows() != n || d.cols() != n) {
    report.add("shape", "matrix does not match point count");
    return report;
  }
  auto pair_str = [](std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (d(a, a) != 0) report.add("diagonal", "d" + pair_str(a, a) + " = " + to_string(d(a, a)));
    for (std::size_t b = 0; b < n; ++b) {
      if (d(a, b) < 0) report.add("negative", "d" + pair_str(a, b) + " = " + to_string(d(a, b)));
      if (a < b && d(a, b) != d(b, a)) {
        report.add("symmetry", "d" + pair_str(a, b) + " != d" + pair_str(b, a));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t b = 0; b < n; ++b) {
        if (d(a, c) > d(a, b) + d(b, c)) {
          report.add("triangle", "d" + pair_str(a, c) + " > d" + pair_str(a, b) + " + d" +
                                     pair_str(b, c) + " via " + std::to_string(b));
        }
      }
    }
  }
  return report;
}

ValidationReport validate_cover(const MetricInstance& instance, const StarCover& cover,
                                std::size_t k, const Rational& T) {
  ValidationReport report;
  std::vector<int> facility_uses(instance.n_facilities(), 0);
  std::vector<int> client_uses(instance.n_clients(), 0);
  bool indices_ok = true;
  for (const auto& star : cover.stars) {
    if (star.facility >= instance.n_facilities()) {
      report.add("indices", "facility " + std::to_string(star.facility) + " out of range");
      indices_ok = false;
      continue;
    }
    ++facility_uses[star.facility];
    for (std::size_t j : star.clients) {
      if (j >= instance.n_clients()) {
        report.add("indices", "client " + std::to_string(j) + " out of range");
        indices_ok = false;
        continue;
      }
      ++client_uses[j];
    }
  }
  for (std::size_t i = 0; i < facility_uses.size(); ++i) {
    if (facility_uses[i] > 1) report.add("disjoint", "facility " + std::to_string(i) + " used twice");
  }
  for (std::size_t j = 0; j < client_uses.size(); ++j) {
    if (client_uses[j] > 1) report.add("disjoint", "client " + std::to_string(j) + " covered twice");
    if (client_uses[j] == 0) report.add("coverage", "client " + std::to_string(j) + " uncovered");
  }
  if (cover.size() > k) {
    report.add("size", std::to_string(cover.size()) + " stars exceed k=" + std::to_string(k));
  }
  if (indices_ok) {
    for (const auto& star : cover.stars) {
      Rational load = 0;
      for (std::size_t j : star.clients) load += instance.d(star.facility, j);
      if (load > T) {
        report.add("load", "facility " + std::to_string(star.facility) + " load " +
                               to_string(load) + " > T=" + to_string(T));
      }
    }
  }
  return report;
}

Rational fractional_load(const MetricInstance& instance, const Matrix<Rational>& x,
                         std::size_t facility) {
  if (facility >= instance.n_facilities()) {
    throw Error(ErrorCode::InvalidArgument, "facility index out of range");
  }
  Rational load = 0;
  for (std::size_t j = 0; j < instance.n_clients(); ++j) {
    if (sgn(x(facility, j)) != 0) load += instance.d(facility, j) * x(facility, j);
  }
  return load;
}

std::vector<Rational> compute_avg_distances(const MetricInstance& instance,
                                            const Matrix<Rational>& x) {
  std::vector<Rational> D(instance.n_clients(), Rational(0));
  for (std::size_t i = 0; i < instance.n_facilities(); ++i) {
    for (std::size_t j = 0; j < instance.n_clients(); ++j) {
      if (sgn(x(i, j)) != 0) D[j] += instance.d(i, j) * x(i, j);
    }
  }
  return D;
}

Rational client_mass(const Matrix<Rational>& x, std::size_t client) {
  Rational sum = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) sum += x(i, client);
  return sum;
}

}  // namespace starcover
