#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "starcover/instance_gen.hpp"

namespace oracle {

std::vector<SuiteCase> random_suite(std::size_t count, std::size_t full, std::uint64_t salt) {
  std::vector<SuiteCase> out;
  for (std::size_t s = 0; s < count + full; ++s) {
    const std::uint64_t seed = 1000 * salt + s + 1;
    std::size_t nF = 5, nC = 10;
    if (s < count) {
      nF = 2 + (seed * 2654435761u >> 7) % 4;
      nC = 3 + (seed * 40503u >> 3) % 8;
    }
    const std::size_t k = 1 + seed % nF;
    out.push_back({"random-" + std::to_string(nF) + "x" + std::to_string(nC) + "-s" + std::to_string(seed),
                   starcover::gen_random(nF, nC, 2, seed), k});
  }
  return out;
}

Rational load(const MetricInstance& inst, std::size_t facility, const std::vector<std::size_t>& clients) {
  Rational total = 0;
  for (std::size_t j : clients) total += inst.dist()(facility, inst.n_facilities() + j);
  return total;
}

Rational fractional_load(const MetricInstance& inst, const Matrix<Rational>& x, std::size_t facility) {
  Rational total = 0;
  for (std::size_t j = 0; j < x.cols(); ++j) total += inst.dist()(facility, inst.n_facilities() + j) * x(facility, j);
  return total;
}

std::vector<Rational> avg_distance(const MetricInstance& inst, const Matrix<Rational>& x) {
  std::vector<Rational> D(x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    for (std::size_t i = 0; i < x.rows(); ++i) D[j] += inst.dist()(i, inst.n_facilities() + j) * x(i, j);
  }
  return D;
}

std::vector<std::string> sclp_failures(const MetricInstance& inst, const Matrix<Rational>& x,
                                       const std::vector<Rational>& y, const Rational& T,
                                       const std::optional<Rational>& k) {
  std::vector<std::string> out;
  const std::size_t nF = inst.n_facilities(), nC = inst.n_clients();
  Rational opened = 0;
  for (std::size_t i = 0; i < nF; ++i) {
    opened += y[i];
    if (y[i] < 0 || y[i] > 1) out.push_back("y range " + std::to_string(i));
    if (oracle::fractional_load(inst, x, i) > T * y[i]) out.push_back("load " + std::to_string(i));
    for (std::size_t j = 0; j < nC; ++j) {
      if (x(i, j) < 0 || x(i, j) > 1) out.push_back("x range");
      if (x(i, j) > y[i]) out.push_back("x > y");
      if (x(i, j) != 0 && inst.dist()(i, nF + j) > T) out.push_back("far pair");
    }
  }
  for (std::size_t j = 0; j < nC; ++j) {
    Rational mass = 0;
    for (std::size_t i = 0; i < nF; ++i) mass += x(i, j);
    if (mass != 1) out.push_back("demand " + std::to_string(j));
  }
  if (k && opened > *k) out.push_back("cardinality");
  return out;
}

std::vector<std::string> preprocess_failures(const MetricInstance& inst,
                                             const Matrix<Rational>& x_in,
                                             const std::vector<Rational>& y_in,
                                             const Matrix<Rational>& x_out,
                                             const std::vector<Rational>& y_out,
                                             const Rational& T, const Rational& mu,
                                             const Rational& gamma) {
  std::vector<std::string> out;
  const std::size_t nF = inst.n_facilities(), nC = inst.n_clients();
  if (y_out != y_in) out.push_back("P1: y changed");
  for (std::size_t i = 0; i < nF; ++i) {
    for (std::size_t j = 0; j < nC; ++j) {
      const Rational& v = x_out(i, j);
      const std::string at = " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (v != 0 && x_in(i, j) == 0) out.push_back("P1: support grew" + at);
      if (v < 0) out.push_back("P2: negative" + at);
      if (v > y_out[i]) out.push_back("P2: x' > y'" + at);
      if (v > 0 && v < gamma * y_out[i]) out.push_back("P2: light positive entry" + at);
    }
    if (oracle::fractional_load(inst, x_out, i) > (mu + 2 - gamma) * T * y_out[i]) {
      out.push_back("P4: load of facility " + std::to_string(i));
    }
  }
  for (std::size_t j = 0; j < nC; ++j) {
    Rational mass = 0;
    for (std::size_t i = 0; i < nF; ++i) mass += x_out(i, j);
    if (mass > 1 || mass < 1 - gamma) out.push_back("P3: demand of client " + std::to_string(j));
  }
  return out;
}

namespace {

template <class Visit>
void for_each_map(std::size_t nF, std::size_t nC, Visit visit) {
  std::vector<std::size_t> map(nC, 0);
  while (true) {
    visit(map);
    std::size_t p = 0;
    while (p < nC && ++map[p] == nF) map[p++] = 0;
    if (p == nC) return;
  }
}

std::map<std::size_t, std::vector<std::size_t>> stars_of(const std::vector<std::size_t>& map) {
  std::map<std::size_t, std::vector<std::size_t>> stars;
  for (std::size_t j = 0; j < map.size(); ++j) stars[map[j]].push_back(j);
  return stars;
}

}  // namespace

Rational brute_min_load(const MetricInstance& inst, std::size_t k) {
  std::optional<Rational> best;
  for_each_map(inst.n_facilities(), inst.n_clients(), [&](const std::vector<std::size_t>& map) {
    auto stars = stars_of(map);
    if (stars.size() > k) return;
    Rational worst = 0;
    for (const auto& [f, cs] : stars) worst = std::max(worst, load(inst, f, cs));
    if (!best || worst < *best) best = worst;
  });
  return *best;
}

std::optional<std::size_t> brute_min_size(const MetricInstance& inst, const Rational& T) {
  std::optional<std::size_t> best;
  for_each_map(inst.n_facilities(), inst.n_clients(), [&](const std::vector<std::size_t>& map) {
    auto stars = stars_of(map);
    for (const auto& [f, cs] : stars) {
      if (load(inst, f, cs) > T) return;
    }
    if (!best || stars.size() < *best) best = stars.size();
  });
  return best;
}

std::optional<Rational> cover_load_if_partition(const MetricInstance& inst,
                                                const starcover::StarCover& cover) {
  std::vector<int> seen(inst.n_clients(), 0);
  std::set<std::size_t> facilities;
  Rational worst = 0;
  for (const auto& star : cover.stars) {
    if (star.facility >= inst.n_facilities() || !facilities.insert(star.facility).second) return std::nullopt;
    for (std::size_t j : star.clients) {
      if (j >= inst.n_clients() || seen[j]++) return std::nullopt;
    }
    worst = std::max(worst, load(inst, star.facility, star.clients));
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(seen.size())) return std::nullopt;
  return worst;
}

Matrix<Rational> shortest_paths(std::size_t n,
                                const std::vector<std::tuple<std::size_t, std::size_t, Rational>>& edges) {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> adj(n);
  for (const auto& [a, b, w] : edges) {
    adj[a].emplace_back(b, w);
    adj[b].emplace_back(a, w);
  }
  Matrix<Rational> dist(n, n);
  for (std::size_t src = 0; src < n; ++src) {
    std::vector<std::optional<Rational>> best(n);
    std::vector<char> done(n, 0);
    best[src] = Rational(0);
    for (std::size_t round = 0; round < n; ++round) {
      std::optional<std::size_t> u;
      for (std::size_t v = 0; v < n; ++v) {
        if (!done[v] && best[v] && (!u || *best[v] < *best[*u])) u = v;
      }
      if (!u) break;
      done[*u] = 1;
      for (const auto& [v, w] : adj[*u]) {
        Rational via = *best[*u] + w;
        if (!best[v] || via < *best[v]) best[v] = via;
      }
    }
    for (std::size_t v = 0; v < n; ++v) dist(src, v) = best[v].value_or(Rational(-1));
  }
  return dist;
}

}  // namespace oracle
