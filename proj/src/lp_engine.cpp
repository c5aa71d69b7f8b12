#include "starcover/lp_engine.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "starcover/error.hpp"

namespace starcover {

namespace {

thread_local ScopedSolveObserver::Callback g_solve_observer;

constexpr std::size_t kMaxPivots = 200000;

// Dense tableau simplex over shifted variables x' = x - lower, each boxed in
// [0, upper - lower]. Nonbasic variables sit at one of their bounds.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const LinearProgram& lp) : lp_(lp) { build(); }

  LpOutcome run() {
    LpOutcome out;
    set_phase_one_costs();
    iterate();
    for (std::size_t r = 0; r < m_; ++r) {
      if (is_artificial(basis_[r]) && sgn(beta_[r]) > 0) {
        out.status = LpStatus::Infeasible;
        out.pivots = pivots_;
        return out;
      }
    }
    drive_out_artificials();
    if (lp_.objective()) {
      set_phase_two_costs();
      iterate();
    }
    out.status = LpStatus::VertexFeasible;
    out.values = primal_values();
    out.tight = compute_tight_set(lp_, out.values);
    out.pivots = pivots_;
    return out;
  }

 private:
  bool is_artificial(std::size_t col) const { return col >= first_artificial_; }

  void build() {
    n_ = lp_.num_variables();
    m_ = lp_.num_constraints();

    std::size_t n_slack = 0;
    for (const auto& c : lp_.constraints()) {
      if (c.relation != Relation::Equal) ++n_slack;
    }

    // Decide per row whether a slack can start basic or an artificial is needed.
    struct RowPlan {
      std::vector<Rational> coeffs;
      Rational rhs;
      std::optional<std::size_t> slack;
      Rational slack_coeff;
      bool needs_artificial = false;
    };
    std::vector<RowPlan> plans(m_);
    std::size_t next_slack = n_;
    std::size_t n_art = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      const auto& c = lp_.constraints()[r];
      RowPlan& plan = plans[r];
      plan.coeffs = c.coeffs;
      plan.rhs = c.rhs;
      for (std::size_t v = 0; v < n_; ++v) {
        const auto& lower = lp_.variables()[v].lower;
        if (sgn(c.coeffs[v]) != 0 && sgn(lower) != 0) plan.rhs -= c.coeffs[v] * lower;
      }
      if (c.relation != Relation::Equal) {
        plan.slack = next_slack++;
        plan.slack_coeff = c.relation == Relation::LessEqual ? 1 : -1;
      }
      if (sgn(plan.rhs) < 0) {
        for (auto& a : plan.coeffs) a = -a;
        plan.rhs = -plan.rhs;
        plan.slack_coeff = -plan.slack_coeff;
      }
      plan.needs_artificial = !(plan.slack && plan.slack_coeff == 1);
      if (plan.needs_artificial) ++n_art;
    }

    first_artificial_ = n_ + n_slack;
    N_ = first_artificial_ + n_art;
    tableau_.assign(m_, std::vector<Rational>(N_));
    beta_.assign(m_, Rational(0));
    basis_.assign(m_, 0);
    is_basic_.assign(N_, 0);
    at_upper_.assign(N_, 0);
    blocked_.assign(N_, 0);
    upper_.assign(N_, std::nullopt);
    for (std::size_t v = 0; v < n_; ++v) {
      const auto& var = lp_.variables()[v];
      if (var.upper) upper_[v] = Rational(*var.upper - var.lower);
    }

    std::size_t next_art = first_artificial_;
    for (std::size_t r = 0; r < m_; ++r) {
      auto& row = tableau_[r];
      RowPlan& plan = plans[r];
      for (std::size_t v = 0; v < n_; ++v) row[v] = std::move(plan.coeffs[v]);
      if (plan.slack) row[*plan.slack] = plan.slack_coeff;
      std::size_t basic = plan.slack.value_or(0);
      if (plan.needs_artificial) {
        basic = next_art++;
        row[basic] = 1;
      }
      basis_[r] = basic;
      is_basic_[basic] = 1;
      beta_[r] = plan.rhs;
    }
  }

  void set_phase_one_costs() {
    cost_.assign(N_, Rational(0));
    for (std::size_t j = first_artificial_; j < N_; ++j) cost_[j] = 1;
    for (std::size_t r = 0; r < m_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      const auto& row = tableau_[r];
      for (std::size_t j = 0; j < N_; ++j) {
        if (sgn(row[j]) != 0) cost_[j] -= row[j];
      }
    }
  }

  void set_phase_two_costs() {
    const auto& obj = *lp_.objective();
    cost_.assign(N_, Rational(0));
    std::vector<Rational> c(N_);
    for (std::size_t v = 0; v < n_; ++v) {
      c[v] = obj.sense == Sense::Minimize ? obj.coeffs[v] : Rational(-obj.coeffs[v]);
    }
    cost_ = c;
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = c[basis_[r]];
      if (sgn(cb) == 0) continue;
      const auto& row = tableau_[r];
      for (std::size_t j = 0; j < N_; ++j) {
        if (sgn(row[j]) != 0) cost_[j] -= cb * row[j];
      }
    }
  }

  // Largest reduced cost enters; after a degenerate step Bland's rule
  // (smallest improving index) takes over until the point moves again.
  void iterate() {
    bool bland = false;
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < N_; ++j) {
        if (is_basic_[j] || blocked_[j]) continue;
        int s = sgn(cost_[j]);
        if ((s < 0 && !at_upper_[j]) || (s > 0 && at_upper_[j])) {
          if (!entering || abs(cost_[j]) > abs(cost_[*entering])) entering = j;
          if (bland) break;
        }
      }
      if (!entering) return;
      bland = !step(*entering);
      if (++pivots_ > kMaxPivots) {
        throw Error(ErrorCode::Internal, "simplex pivot limit exceeded");
      }
    }
  }

  // Returns false when the step length is zero.
  bool step(std::size_t j) {
    const int dir = at_upper_[j] ? -1 : 1;

    std::optional<Rational> best;
    std::size_t best_var = 0;
    std::optional<std::size_t> best_row;
    bool leave_at_upper = false;

    auto consider = [&](const Rational& t, std::size_t var, std::optional<std::size_t> row,
                        bool to_upper) {
      if (!best || t < *best || (t == *best && var < best_var)) {
        best = t;
        best_var = var;
        best_row = row;
        leave_at_upper = to_upper;
      }
    };

    if (upper_[j]) consider(*upper_[j], j, std::nullopt, false);
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& a = tableau_[r][j];
      int s = sgn(a) * dir;
      if (s == 0) continue;
      std::size_t var = basis_[r];
      if (s > 0) {
        consider(beta_[r] / (dir * a), var, r, false);
      } else if (upper_[var]) {
        consider((*upper_[var] - beta_[r]) / (-dir * a), var, r, true);
      }
    }
    if (!best) throw Error(ErrorCode::UnboundedObjective, "objective is unbounded");

    const Rational t = *best;
    if (sgn(t) != 0) {
      for (std::size_t r = 0; r < m_; ++r) {
        const Rational& a = tableau_[r][j];
        if (sgn(a) == 0) continue;
        if (dir > 0) {
          beta_[r] -= t * a;
        } else {
          beta_[r] += t * a;
        }
      }
    }

    if (!best_row) {
      at_upper_[j] = !at_upper_[j];
      return true;
    }

    const std::size_t r = *best_row;
    const std::size_t leaving = basis_[r];
    Rational entering_value = at_upper_[j] ? *upper_[j] : Rational(0);
    if (dir > 0) {
      entering_value += t;
    } else {
      entering_value -= t;
    }
    is_basic_[leaving] = 0;
    at_upper_[leaving] = leave_at_upper ? 1 : 0;
    beta_[r] = entering_value;
    pivot(r, j);
    basis_[r] = j;
    is_basic_[j] = 1;
    at_upper_[j] = 0;
    return sgn(t) != 0;
  }

  void pivot(std::size_t r, std::size_t j) {
    auto& prow = tableau_[r];
    if (prow[j] != 1) {
      const Rational inv = 1 / prow[j];
      for (auto& a : prow) {
        if (sgn(a) != 0) a *= inv;
      }
    }
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < N_; ++k) {
      if (sgn(prow[k]) != 0) nz.push_back(k);
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      auto& row = tableau_[i];
      if (sgn(row[j]) == 0) continue;
      const Rational f = row[j];
      for (std::size_t k : nz) row[k] -= f * prow[k];
    }
    if (sgn(cost_[j]) != 0) {
      const Rational f = cost_[j];
      for (std::size_t k : nz) cost_[k] -= f * prow[k];
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (is_basic_[j] || sgn(tableau_[r][j]) == 0) continue;
        // Degenerate exchange: the point does not move.
        const std::size_t leaving = basis_[r];
        beta_[r] = at_upper_[j] ? *upper_[j] : Rational(0);
        is_basic_[leaving] = 0;
        at_upper_[leaving] = 0;
        pivot(r, j);
        basis_[r] = j;
        is_basic_[j] = 1;
        at_upper_[j] = 0;
        ++pivots_;
        break;
      }
      // Otherwise the row is redundant; its artificial stays basic at zero.
    }
    for (std::size_t j = first_artificial_; j < N_; ++j) blocked_[j] = 1;
  }

  std::vector<Rational> primal_values() const {
    std::vector<Rational> shifted(N_, Rational(0));
    for (std::size_t j = 0; j < N_; ++j) {
      if (!is_basic_[j] && at_upper_[j]) shifted[j] = *upper_[j];
    }
    for (std::size_t r = 0; r < m_; ++r) shifted[basis_[r]] = beta_[r];
    std::vector<Rational> values(n_);
    for (std::size_t v = 0; v < n_; ++v) values[v] = lp_.variables()[v].lower + shifted[v];
    return values;
  }

  const LinearProgram& lp_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t N_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> beta_;
  std::vector<std::size_t> basis_;
  std::vector<char> is_basic_;
  std::vector<char> at_upper_;
  std::vector<char> blocked_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<Rational> cost_;
  std::size_t pivots_ = 0;
};

Rational row_activity(const LpConstraint& c, const std::vector<Rational>& values) {
  Rational sum = 0;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (sgn(c.coeffs[v]) != 0) sum += c.coeffs[v] * values[v];
  }
  return sum;
}

}  // namespace

std::size_t LinearProgram::add_variable(std::string name, Rational lower,
                                        std::optional<Rational> upper) {
  variables_.push_back({std::move(name), std::move(lower), std::move(upper)});
  for (auto& c : constraints_) c.coeffs.emplace_back(0);
  if (objective_) objective_->coeffs.emplace_back(0);
  return variables_.size() - 1;
}

std::size_t LinearProgram::add_constraint(std::vector<Rational> coeffs, Relation relation,
                                          Rational rhs, std::string name) {
  if (coeffs.size() != variables_.size()) {
    throw Error(ErrorCode::InvalidArgument, "constraint row length differs from variable count");
  }
  constraints_.push_back({std::move(coeffs), relation, std::move(rhs), std::move(name)});
  return constraints_.size() - 1;
}

void LinearProgram::set_objective(std::vector<Rational> coeffs, Sense sense) {
  if (coeffs.size() != variables_.size()) {
    throw Error(ErrorCode::InvalidArgument, "objective length differs from variable count");
  }
  objective_ = LpObjective{std::move(coeffs), sense};
}

void LinearProgram::validate() const {
  for (const auto& v : variables_) {
    if (v.upper && *v.upper < v.lower) {
      throw Error(ErrorCode::InvalidArgument, "variable " + v.name + " has lower > upper");
    }
  }
  for (const auto& c : constraints_) {
    if (c.coeffs.size() != variables_.size()) {
      throw Error(ErrorCode::InvalidArgument, "ragged constraint row " + c.name);
    }
  }
  if (objective_ && objective_->coeffs.size() != variables_.size()) {
    throw Error(ErrorCode::InvalidArgument, "ragged objective row");
  }
}

LpOutcome solve_vertex(const LinearProgram& lp) {
  lp.validate();
  LpOutcome outcome = BoundedSimplex(lp).run();
  if (g_solve_observer) g_solve_observer(lp, outcome);
  return outcome;
}

TightSet compute_tight_set(const LinearProgram& lp, const std::vector<Rational>& values) {
  TightSet tight;
  for (std::size_t r = 0; r < lp.num_constraints(); ++r) {
    if (row_activity(lp.constraints()[r], values) == lp.constraints()[r].rhs) {
      tight.rows.push_back(r);
    }
  }
  for (std::size_t v = 0; v < lp.num_variables(); ++v) {
    const auto& var = lp.variables()[v];
    if (values[v] == var.lower) tight.bounds.push_back({v, false});
    if (var.upper && values[v] == *var.upper) tight.bounds.push_back({v, true});
  }
  return tight;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(rows[rank][k]) != 0) rows[r][k] -= f * rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

VertexCheck check_vertex(const LinearProgram& lp, const std::vector<Rational>& values) {
  VertexCheck check;
  const std::size_t n = lp.num_variables();
  if (values.size() != n) {
    check.failure = "value vector has wrong length";
    return check;
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto& var = lp.variables()[v];
    if (values[v] < var.lower || (var.upper && values[v] > *var.upper)) {
      check.failure = "bound violated for " + var.name;
      return check;
    }
  }
  for (const auto& c : lp.constraints()) {
    Rational act = row_activity(c, values);
    bool ok = c.relation == Relation::LessEqual    ? act <= c.rhs
              : c.relation == Relation::GreaterEqual ? act >= c.rhs
                                                     : act == c.rhs;
    if (!ok) {
      check.failure = "constraint violated: " + c.name;
      return check;
    }
  }
  check.feasible = true;

  TightSet tight = compute_tight_set(lp, values);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r : tight.rows) rows.push_back(lp.constraints()[r].coeffs);
  for (const auto& b : tight.bounds) {
    std::vector<Rational> unit(n, Rational(0));
    unit[b.variable] = 1;
    rows.push_back(std::move(unit));
  }
  check.tight_rank = n == 0 ? 0 : rational_rank(std::move(rows));
  check.is_vertex = check.tight_rank == n;
  if (!check.is_vertex) {
    check.failure = "tight rank " + std::to_string(check.tight_rank) + " < " + std::to_string(n);
  }
  return check;
}

ScopedSolveObserver::ScopedSolveObserver(Callback callback)
    : previous_(std::exchange(g_solve_observer, std::move(callback))) {}

ScopedSolveObserver::~ScopedSolveObserver() { g_solve_observer = std::move(previous_); }

FractionalSolution ScLpModel::extract(const std::vector<Rational>& values) const {
  FractionalSolution sol(n_facilities, n_clients);
  for (std::size_t i = 0; i < n_facilities; ++i) {
    sol.y[i] = values[y_var(i)];
    for (std::size_t j = 0; j < n_clients; ++j) {
      if (const auto& idx = x_var(i, j)) sol.x(i, j) = values[*idx];
    }
  }
  return sol;
}

ScLpModel build_sclp(const MetricInstance& instance, const Rational& T,
                     const std::optional<Rational>& k) {
  if (T < 0) throw Error(ErrorCode::InvalidArgument, "T must be non-negative");
  if (k && *k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
  const std::size_t nF = instance.n_facilities();
  const std::size_t nC = instance.n_clients();

  ScLpModel model;
  model.n_facilities = nF;
  model.n_clients = nC;
  model.x_index.assign(nF * nC, std::nullopt);

  auto& lp = model.lp;
  for (std::size_t i = 0; i < nF; ++i) {
    lp.add_variable("y[" + std::to_string(i) + "]", 0, Rational(1));
  }
  for (std::size_t i = 0; i < nF; ++i) {
    for (std::size_t j = 0; j < nC; ++j) {
      if (instance.d(i, j) > T) continue;  // (7)
      model.x_index[i * nC + j] = lp.add_variable(
          "x[" + std::to_string(i) + "," + std::to_string(j) + "]", 0, Rational(1));
    }
  }
  const std::size_t n = lp.num_variables();

  for (std::size_t i = 0; i < nF; ++i) {  // (1)
    std::vector<Rational> row(n);
    row[model.y_var(i)] = -T;
    for (std::size_t j = 0; j < nC; ++j) {
      if (const auto& idx = model.x_var(i, j)) row[*idx] = instance.d(i, j);
    }
    lp.add_constraint(std::move(row), Relation::LessEqual, 0, "load[" + std::to_string(i) + "]");
  }
  if (k) {  // (2)
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < nF; ++i) row[model.y_var(i)] = 1;
    lp.add_constraint(std::move(row), Relation::LessEqual, *k, "card");
  }
  for (std::size_t j = 0; j < nC; ++j) {  // (3)
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < nF; ++i) {
      if (const auto& idx = model.x_var(i, j)) row[*idx] = 1;
    }
    lp.add_constraint(std::move(row), Relation::Equal, 1, "demand[" + std::to_string(j) + "]");
  }
  for (std::size_t i = 0; i < nF; ++i) {  // (4)
    for (std::size_t j = 0; j < nC; ++j) {
      const auto& idx = model.x_var(i, j);
      if (!idx) continue;
      std::vector<Rational> row(n);
      row[*idx] = 1;
      row[model.y_var(i)] = -1;
      lp.add_constraint(std::move(row), Relation::LessEqual, 0,
                        "couple[" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  }
  return model;
}

MlkLpResult solve_mlk_lp(const MetricInstance& instance, std::size_t k, const Rational& rel_gap) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (rel_gap <= 0) throw Error(ErrorCode::InvalidArgument, "rel_gap must be positive");
  if (instance.n_facilities() == 0) throw Error(ErrorCode::InvalidArgument, "no facilities");

  MlkLpResult result;
  const Rational kk(static_cast<unsigned long>(k));
  auto attempt = [&](const Rational& T) -> std::optional<FractionalSolution> {
    ++result.lp_solves;
    ScLpModel model = build_sclp(instance, T, kk);
    LpOutcome out = solve_vertex(model.lp);
    if (!out.feasible()) return std::nullopt;
    return model.extract(out.values);
  };

  if (auto sol = attempt(Rational(0))) {
    result.T_star = 0;
    result.sol = std::move(*sol);
    return result;
  }

  Rational hi;
  for (std::size_t f = 0; f < instance.n_facilities(); ++f) {
    Rational total = 0;
    for (std::size_t j = 0; j < instance.n_clients(); ++j) total += instance.d(f, j);
    if (f == 0 || total < hi) hi = total;
  }
  auto hi_sol = attempt(hi);
  if (!hi_sol) throw Error(ErrorCode::Internal, "upper bracket infeasible");
  bool hi_solved_at_hi = true;

  // A feasible (x, y) stays feasible at the largest load ratio or support
  // distance it actually uses, which tightens hi beyond the midpoint.
  auto used_T = [&](const FractionalSolution& sol) {
    Rational used = 0;
    for (std::size_t i = 0; i < instance.n_facilities(); ++i) {
      Rational load = 0;
      for (std::size_t j = 0; j < instance.n_clients(); ++j) {
        if (sgn(sol.x(i, j)) == 0) continue;
        load += instance.d(i, j) * sol.x(i, j);
        if (instance.d(i, j) > used) used = instance.d(i, j);
      }
      if (sgn(sol.y[i]) > 0 && load / sol.y[i] > used) used = load / sol.y[i];
    }
    return used;
  };
  auto tighten = [&] {
    Rational used = used_T(*hi_sol);
    if (used < hi) {
      hi = used;
      hi_solved_at_hi = false;
    }
  };
  tighten();

  // Every client needs a facility within T.
  Rational lo = 0;
  for (std::size_t j = 0; j < instance.n_clients(); ++j) {
    Rational nearest = instance.d(0, j);
    for (std::size_t i = 1; i < instance.n_facilities(); ++i) nearest = std::min(nearest, instance.d(i, j));
    lo = std::max(lo, nearest);
  }
  Rational tiny;
  mpq_div_2exp(tiny.get_mpq_t(), Rational(1).get_mpq_t(), 64);
  while (!(hi <= (1 + rel_gap) * lo) && !(hi - lo < tiny * hi)) {
    Rational mid = (lo + hi) / 2;
    if (auto sol = attempt(mid)) {
      hi = mid;
      hi_sol = std::move(sol);
      hi_solved_at_hi = true;
      tighten();
    } else {
      lo = mid;
    }
  }
  if (!hi_solved_at_hi) {
    hi_sol = attempt(hi);
    if (!hi_sol) throw Error(ErrorCode::Internal, "tightened bracket infeasible");
  }
  result.T_star = hi;
  result.sol = std::move(*hi_sol);
  return result;
}

MsscLpResult solve_mssc_lp(const MetricInstance& instance, const Rational& T) {
  if (T < 0) throw Error(ErrorCode::InvalidArgument, "T must be non-negative");
  for (std::size_t j = 0; j < instance.n_clients(); ++j) {
    bool reachable = false;
    for (std::size_t i = 0; i < instance.n_facilities() && !reachable; ++i) {
      reachable = instance.d(i, j) <= T;
    }
    if (!reachable) {
      throw Error(ErrorCode::NoCoverWithinT,
                  "client " + std::to_string(j) + " has no facility within T=" + to_string(T));
    }
  }
  ScLpModel model = build_sclp(instance, T, std::nullopt);
  std::vector<Rational> obj(model.lp.num_variables());
  for (std::size_t i = 0; i < instance.n_facilities(); ++i) obj[model.y_var(i)] = 1;
  model.lp.set_objective(std::move(obj), Sense::Minimize);
  LpOutcome out = solve_vertex(model.lp);
  if (!out.feasible()) {
    throw Error(ErrorCode::Infeasible, "SC-LP(T, .) has no fractional solution at T=" + to_string(T));
  }
  MsscLpResult result;
  result.sol = model.extract(out.values);
  result.k_star = 0;
  for (const auto& y : result.sol.y) result.k_star += y;
  return result;
}

std::vector<std::string> sclp_violations(const MetricInstance& instance,
                                         const FractionalSolution& sol, const Rational& T,
                                         const std::optional<Rational>& k) {
  std::vector<std::string> out;
  const std::size_t nF = instance.n_facilities();
  const std::size_t nC = instance.n_clients();
  auto tag = [](const char* what, std::size_t a, std::size_t b = SIZE_MAX) {
    std::ostringstream s;
    s << what << "[" << a;
    if (b != SIZE_MAX) s << "," << b;
    s << "]";
    return s.str();
  };
  Rational opening = 0;
  for (std::size_t i = 0; i < nF; ++i) {
    opening += sol.y[i];
    if (sol.y[i] < 0 || sol.y[i] > 1) out.push_back(tag("bound-y", i));
    if (fractional_load(instance, sol.x, i) > T * sol.y[i]) out.push_back(tag("load", i));
    for (std::size_t j = 0; j < nC; ++j) {
      const Rational& x = sol.x(i, j);
      if (x < 0 || x > 1) out.push_back(tag("bound-x", i, j));
      if (x > sol.y[i]) out.push_back(tag("couple", i, j));
      if (sgn(x) != 0 && instance.d(i, j) > T) out.push_back(tag("far", i, j));
    }
  }
  if (k && opening > *k) out.push_back("card");
  for (std::size_t j = 0; j < nC; ++j) {
    if (client_mass(sol.x, j) != 1) out.push_back(tag("demand", j));
  }
  return out;
}

}  // namespace starcover
