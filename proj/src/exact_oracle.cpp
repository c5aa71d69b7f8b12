#include "starcover/exact_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "starcover/error.hpp"

namespace starcover {

namespace {

template <class V>
struct Table {
  std::vector<std::vector<V>> d;  // [facility][client]
  V bound{};                      // T for the size search
};

// Common-denominator int64 copy of the facility-client distances (and T),
// when every sum along a search path fits.
std::optional<Table<std::int64_t>> scaled_table(const MetricInstance& instance,
                                                const std::optional<Rational>& T) {
  const std::size_t nF = instance.n_facilities();
  const std::size_t nC = instance.n_clients();
  Integer den = 1;
  auto absorb = [&](const Rational& v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  };
  for (std::size_t i = 0; i < nF; ++i) {
    for (std::size_t j = 0; j < nC; ++j) absorb(instance.d(i, j));
  }
  if (T) absorb(*T);
  const Integer cap = Integer(std::numeric_limits<std::int64_t>::max() / 4) /
                      static_cast<unsigned long>(nC + 1);
  auto scale = [&](const Rational& v) -> std::optional<std::int64_t> {
    Integer s = v.get_num() * (den / v.get_den());
    if (s > cap || s < -cap) return std::nullopt;
    return s.get_si();
  };
  Table<std::int64_t> table;
  table.d.assign(nF, std::vector<std::int64_t>(nC));
  for (std::size_t i = 0; i < nF; ++i) {
    for (std::size_t j = 0; j < nC; ++j) {
      auto s = scale(instance.d(i, j));
      if (!s) return std::nullopt;
      table.d[i][j] = *s;
    }
  }
  if (T) {
    auto s = scale(*T);
    if (!s) return std::nullopt;
    table.bound = *s;
  }
  return table;
}

Table<Rational> exact_table(const MetricInstance& instance, const std::optional<Rational>& T) {
  Table<Rational> table;
  table.d.assign(instance.n_facilities(), std::vector<Rational>(instance.n_clients()));
  for (std::size_t i = 0; i < instance.n_facilities(); ++i) {
    for (std::size_t j = 0; j < instance.n_clients(); ++j) table.d[i][j] = instance.d(i, j);
  }
  if (T) table.bound = *T;
  return table;
}

// Clients with the largest nearest-facility distance first.
template <class V>
std::vector<std::size_t> search_order(const Table<V>& t, std::size_t nC) {
  std::vector<V> nearest(nC);
  for (std::size_t j = 0; j < nC; ++j) {
    nearest[j] = t.d[0][j];
    for (const auto& row : t.d) nearest[j] = std::min(nearest[j], row[j]);
  }
  std::vector<std::size_t> order(nC);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return nearest[a] > nearest[b]; });
  return order;
}

template <class V>
class LoadSearch {
 public:
  LoadSearch(const Table<V>& t, std::size_t k)
      : t_(t), nF_(t.d.size()), nC_(nF_ ? t.d[0].size() : 0), k_(k),
        order_(search_order(t, nC_)), load_(nF_), count_(nF_), assign_(nC_) {}

  void run() { dfs(0, V{}); }

  const std::vector<std::size_t>& best_assignment() const { return best_assign_; }

 private:
  bool hopeless(std::size_t pos) const {
    for (std::size_t p = pos; p < nC_; ++p) {
      const std::size_t j = order_[p];
      bool fits = false;
      for (std::size_t f = 0; f < nF_ && !fits; ++f) {
        if (count_[f] == 0 && opened_ == k_) continue;
        fits = load_[f] + t_.d[f][j] < *best_;
      }
      if (!fits) return true;
    }
    return false;
  }

  void dfs(std::size_t pos, V current) {
    if (pos == nC_) {
      best_ = current;
      best_assign_ = assign_;
      return;
    }
    const std::size_t j = order_[pos];
    for (std::size_t f = 0; f < nF_; ++f) {
      const bool fresh = count_[f] == 0;
      if (fresh && opened_ == k_) continue;
      V next = load_[f] + t_.d[f][j];
      if (best_ && next >= *best_) continue;
      load_[f] = next;
      ++count_[f];
      opened_ += fresh;
      assign_[j] = f;
      if (!best_ || !hopeless(pos + 1)) dfs(pos + 1, std::max(current, next));
      opened_ -= fresh;
      --count_[f];
      load_[f] -= t_.d[f][j];
    }
  }

  const Table<V>& t_;
  std::size_t nF_;
  std::size_t nC_;
  std::size_t k_;
  std::vector<std::size_t> order_;
  std::vector<V> load_;
  std::vector<std::size_t> count_;
  std::size_t opened_ = 0;
  std::vector<std::size_t> assign_;
  std::optional<V> best_;
  std::vector<std::size_t> best_assign_;
};

template <class V>
class SizeSearch {
 public:
  explicit SizeSearch(const Table<V>& t)
      : t_(t), nF_(t.d.size()), nC_(nF_ ? t.d[0].size() : 0),
        order_(search_order(t, nC_)), load_(nF_), count_(nF_), assign_(nC_),
        best_(nF_ + 1) {}

  void run() { dfs(0); }

  bool found() const { return best_ <= nF_; }
  const std::vector<std::size_t>& best_assignment() const { return best_assign_; }

 private:
  bool hopeless(std::size_t pos) const {
    const bool may_open = opened_ + 1 < best_;
    for (std::size_t p = pos; p < nC_; ++p) {
      const std::size_t j = order_[p];
      bool fits = false;
      for (std::size_t f = 0; f < nF_ && !fits; ++f) {
        if (count_[f] == 0 && !may_open) continue;
        fits = load_[f] + t_.d[f][j] <= t_.bound;
      }
      if (!fits) return true;
    }
    return false;
  }

  void place(std::size_t pos, std::size_t f) {
    const std::size_t j = order_[pos];
    const bool fresh = count_[f] == 0;
    load_[f] += t_.d[f][j];
    ++count_[f];
    opened_ += fresh;
    assign_[j] = f;
    if (!hopeless(pos + 1)) dfs(pos + 1);
    opened_ -= fresh;
    --count_[f];
    load_[f] -= t_.d[f][j];
  }

  void dfs(std::size_t pos) {
    if (opened_ >= best_) return;
    if (pos == nC_) {
      best_ = opened_;
      best_assign_ = assign_;
      return;
    }
    const std::size_t j = order_[pos];
    for (std::size_t f = 0; f < nF_; ++f) {
      if (count_[f] > 0 && load_[f] + t_.d[f][j] <= t_.bound) place(pos, f);
    }
    if (opened_ + 1 >= best_) return;
    for (std::size_t f = 0; f < nF_; ++f) {
      if (count_[f] == 0 && t_.d[f][j] <= t_.bound) place(pos, f);
    }
  }

  const Table<V>& t_;
  std::size_t nF_;
  std::size_t nC_;
  std::vector<std::size_t> order_;
  std::vector<V> load_;
  std::vector<std::size_t> count_;
  std::size_t opened_ = 0;
  std::vector<std::size_t> assign_;
  std::size_t best_;
  std::vector<std::size_t> best_assign_;
};

// First assignment in lexicographic order (client 0 first, facilities
// ascending) with every load <= limit and at most max_open stars.
template <class V>
class FirstWithin {
 public:
  FirstWithin(const Table<V>& t, V limit, std::size_t max_open)
      : t_(t), nF_(t.d.size()), nC_(nF_ ? t.d[0].size() : 0), limit_(std::move(limit)),
        max_open_(max_open), load_(nF_), count_(nF_), assign_(nC_) {}

  std::optional<std::vector<std::size_t>> run() {
    if (dfs(0)) return assign_;
    return std::nullopt;
  }

 private:
  bool hopeless(std::size_t from) const {
    for (std::size_t j = from; j < nC_; ++j) {
      bool fits = false;
      for (std::size_t f = 0; f < nF_ && !fits; ++f) {
        if (count_[f] == 0 && opened_ == max_open_) continue;
        fits = load_[f] + t_.d[f][j] <= limit_;
      }
      if (!fits) return true;
    }
    return false;
  }

  bool dfs(std::size_t j) {
    if (j == nC_) return true;
    for (std::size_t f = 0; f < nF_; ++f) {
      const bool fresh = count_[f] == 0;
      if (fresh && opened_ == max_open_) continue;
      if (load_[f] + t_.d[f][j] > limit_) continue;
      load_[f] += t_.d[f][j];
      ++count_[f];
      opened_ += fresh;
      assign_[j] = f;
      if (!hopeless(j + 1) && dfs(j + 1)) return true;
      opened_ -= fresh;
      --count_[f];
      load_[f] -= t_.d[f][j];
    }
    return false;
  }

  const Table<V>& t_;
  std::size_t nF_;
  std::size_t nC_;
  V limit_;
  std::size_t max_open_;
  std::vector<V> load_;
  std::vector<std::size_t> count_;
  std::size_t opened_ = 0;
  std::vector<std::size_t> assign_;
};

template <class V>
V max_load(const Table<V>& t, const std::vector<std::size_t>& assign) {
  std::vector<V> load(t.d.size());
  for (std::size_t j = 0; j < assign.size(); ++j) load[assign[j]] += t.d[assign[j]][j];
  return *std::max_element(load.begin(), load.end());
}

template <class V>
std::vector<std::size_t> smallest_min_load(const Table<V>& t, std::size_t k) {
  LoadSearch<V> search(t, k);
  search.run();
  return *FirstWithin<V>(t, max_load(t, search.best_assignment()), k).run();
}

template <class V>
std::optional<std::vector<std::size_t>> smallest_min_size(const Table<V>& t) {
  SizeSearch<V> search(t);
  search.run();
  if (!search.found()) return std::nullopt;
  std::size_t used = 0;
  std::vector<char> seen(t.d.size());
  for (std::size_t f : search.best_assignment()) used += !seen[f]++;
  return FirstWithin<V>(t, t.bound, used).run();
}

StarCover to_cover(std::size_t nF, const std::vector<std::size_t>& assign) {
  std::vector<std::vector<std::size_t>> served(nF);
  for (std::size_t j = 0; j < assign.size(); ++j) served[assign[j]].push_back(j);
  StarCover cover;
  for (std::size_t i = 0; i < nF; ++i) {
    if (!served[i].empty()) cover.stars.push_back({i, std::move(served[i])});
  }
  return cover;
}

void check_guard(const MetricInstance& instance) {
  if (!exact_search_allowed(instance.n_facilities(), instance.n_clients())) {
    throw Error(ErrorCode::TooLarge, "|F|^|C| exceeds the exact search limit");
  }
}

}  // namespace

bool exact_search_allowed(std::size_t n_facilities, std::size_t n_clients) {
  std::uint64_t space = 1;
  for (std::size_t j = 0; j < n_clients; ++j) {
    if (n_facilities == 0) return false;
    if (space > kExactSearchLimit / n_facilities) return false;
    space *= n_facilities;
  }
  return space <= kExactSearchLimit;
}

ExactMlkResult exact_mlk(const MetricInstance& instance, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  check_guard(instance);
  const std::size_t nF = instance.n_facilities();
  std::vector<std::size_t> assign;
  if (auto scaled = scaled_table(instance, std::nullopt)) {
    assign = smallest_min_load(*scaled, k);
  } else {
    assign = smallest_min_load(exact_table(instance, std::nullopt), k);
  }
  ExactMlkResult result;
  result.cover = to_cover(nF, assign);
  result.opt_load = cover_load(instance, result.cover);
  return result;
}

std::optional<ExactMsscResult> exact_mssc(const MetricInstance& instance, const Rational& T) {
  check_guard(instance);
  const std::size_t nF = instance.n_facilities();
  std::optional<std::vector<std::size_t>> assign;
  if (auto scaled = scaled_table(instance, T)) {
    assign = smallest_min_size(*scaled);
  } else {
    assign = smallest_min_size(exact_table(instance, T));
  }
  if (!assign) return std::nullopt;
  ExactMsscResult result;
  result.cover = to_cover(nF, *assign);
  result.opt_size = result.cover.size();
  return result;
}

}  // namespace starcover
