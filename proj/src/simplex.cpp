#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "signcert/lp_solve.hpp"

#include "revised_simplex.hpp"

namespace signcert {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration_limit";
    case LpStatus::kTimeLimit: return "time_limit";
  }
  return "unknown";
}

namespace {

template <typename T>
struct Num;

template <>
struct Num<Rational> {
  static Rational from(const Rational& r) { return r; }
  static Rational to_rational(const Rational& v) { return v; }
  static bool positive(const Rational& v) { return sgn(v) > 0; }
  static bool negative(const Rational& v) { return sgn(v) < 0; }
  static bool negligible(const Rational& v) { return sgn(v) == 0; }
  static Rational magnitude(const Rational& v) { return abs(v); }
};

template <typename T>
class Tableau {
  using N = Num<T>;
  using Row = std::vector<std::pair<int, T>>;

 public:
  Tableau(const LpModel& model, const SolveOptions& opt) : model_(model), opt_(opt) {
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(opt.time_limit_s));
    setup();
  }

  LpSolution run() {
    LpSolution sol;
    if (has_artificials_) {
      phase1_objective();
      LpStatus st = iterate();
      sol.pivots = pivots_;
      if (st == LpStatus::kIterationLimit || st == LpStatus::kTimeLimit) {
        sol.status = st;
        return sol;
      }
      if (N::negative(obj_val_)) {
        sol.status = LpStatus::kInfeasible;
        return sol;
      }
      drive_out_artificials();
    }
    phase2_objective();
    LpStatus st = iterate();
    sol.status = st;
    sol.pivots = pivots_;
    if (st != LpStatus::kOptimal) return sol;

    std::vector<T> x(ncols_, T(0));
    for (int i = 0; i < m_; ++i) {
      if (alive_[i]) x[basis_[i]] = b_[i];
    }
    sol.values.assign(model_.num_vars(), Rational(0));
    for (std::size_t j = 0; j < model_.num_vars(); ++j) {
      T v = x[pos_col_[j]];
      if (neg_col_[j] >= 0) v -= x[neg_col_[j]];
      sol.values[j] = N::to_rational(v);
    }
    sol.objective = model_.objective().evaluate(sol.values);
    return sol;
  }

 private:
  void setup() {
    const auto& vars = model_.vars();
    int col = 0;
    pos_col_.resize(vars.size());
    neg_col_.assign(vars.size(), -1);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      pos_col_[j] = col++;
      if (vars[j].free) neg_col_[j] = col++;
    }
    const auto& cons = model_.constraints();
    m_ = static_cast<int>(cons.size());
    rows_.resize(m_);
    b_.resize(m_);
    basis_.assign(m_, -1);
    alive_.assign(m_, 1);

    std::vector<Sense> sense(m_);
    for (int i = 0; i < m_; ++i) {
      const auto& c = cons[i];
      T rhs = N::from(c.rhs);
      bool flip = sgn(c.rhs) < 0;
      Row row;
      for (const auto& [v, coef] : c.row) {
        T a = N::from(coef);
        if (flip) a = -a;
        row.emplace_back(pos_col_[v], a);
        if (neg_col_[v] >= 0) row.emplace_back(neg_col_[v], -a);
      }
      std::sort(row.begin(), row.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      rows_[i] = std::move(row);
      b_[i] = flip ? -rhs : rhs;
      sense[i] = c.sense;
      if (flip && c.sense != Sense::kEq) sense[i] = c.sense == Sense::kLe ? Sense::kGe : Sense::kLe;
    }
    structural_ = col;
    for (int i = 0; i < m_; ++i) {
      if (sense[i] == Sense::kLe) {
        rows_[i].emplace_back(col, T(1));
        basis_[i] = col++;
      } else if (sense[i] == Sense::kGe) {
        rows_[i].emplace_back(col++, T(-1));
      }
    }
    first_artificial_ = col;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < 0) {
        rows_[i].emplace_back(col, T(1));
        basis_[i] = col++;
        has_artificials_ = true;
      }
    }
    ncols_ = col;
    col_rows_.assign(ncols_, {});
    for (int i = 0; i < m_; ++i) {
      for (const auto& [c, v] : rows_[i]) col_rows_[c].push_back(i);
    }
    allowed_.assign(ncols_, 1);
    mark_.assign(m_, -1);
  }

  bool is_artificial(int c) const { return c >= first_artificial_; }

  void phase1_objective() {
    d_.assign(ncols_, T(0));
    obj_val_ = T(0);
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      obj_val_ -= b_[i];
      for (const auto& [c, v] : rows_[i]) {
        if (!is_artificial(c)) d_[c] += v;
      }
    }
  }

  void phase2_objective() {
    std::vector<T> cost(ncols_, T(0));
    for (const auto& [v, coef] : model_.objective().terms()) {
      cost[pos_col_[v]] = N::from(coef);
      if (neg_col_[v] >= 0) cost[neg_col_[v]] = -N::from(coef);
    }
    d_ = cost;
    obj_val_ = T(0);
    for (int i = 0; i < m_; ++i) {
      if (!alive_[i]) continue;
      const T& cb = cost[basis_[i]];
      if (N::negligible(cb)) continue;
      obj_val_ += cb * b_[i];
      for (const auto& [c, v] : rows_[i]) d_[c] -= cb * v;
    }
    for (int c = first_artificial_; c < ncols_; ++c) allowed_[c] = 0;
    for (int i = 0; i < m_; ++i) {
      if (alive_[i]) d_[basis_[i]] = T(0);
    }
  }

  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (!alive_[r] || !is_artificial(basis_[r])) continue;
      int best = -1;
      T best_mag = T(0);
      for (const auto& [c, v] : rows_[r]) {
        if (is_artificial(c) || N::negligible(v)) continue;
        T mag = N::magnitude(v);
        if (best < 0 || mag > best_mag) {
          best = c;
          best_mag = mag;
        }
        break;
      }
      if (best < 0) {
        alive_[r] = 0;
      } else {
        b_[r] = T(0);
        pivot(r, best);
      }
    }
  }

  const T* entry(int i, int c) const {
    const Row& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& p, int k) { return p.first < k; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  }

  // Drops dead, duplicate and zero occurrences from a column list.
  std::vector<int>& column(int c) {
    auto& list = col_rows_[c];
    ++stamp_;
    std::size_t w = 0;
    for (int i : list) {
      if (!alive_[i] || mark_[i] == stamp_) continue;
      const T* a = entry(i, c);
      if (!a) continue;
      mark_[i] = stamp_;
      list[w++] = i;
    }
    list.resize(w);
    return list;
  }

  int choose_entering(bool bland) const {
    int best = -1;
    for (int c = 0; c < ncols_; ++c) {
      if (!allowed_[c] || !N::positive(d_[c])) continue;
      if (bland) return c;
      if (best < 0 || d_[c] > d_[best]) best = c;
    }
    return best;
  }

  // Minimum ratio, ties to the lowest basic index (as Bland's rule requires).
  int choose_leaving(int q) {
    int best = -1;
    T best_ratio = T(0);
    for (int i : column(q)) {
      const T a = *entry(i, q);
      if (!N::positive(a)) continue;
      T ratio = b_[i] / a;
      if (best < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(int r, int q) {
    ++pivots_;
    Row& pr = rows_[r];
    const T piv = *entry(r, q);
    for (auto& [c, v] : pr) v /= piv;
    b_[r] /= piv;

    std::vector<int> touched = column(q);
    Row merged;
    for (int i : touched) {
      if (i == r) continue;
      const T factor = *entry(i, q);
      const Row& ri = rows_[i];
      merged.clear();
      merged.reserve(ri.size() + pr.size());
      std::size_t a = 0, k = 0;
      while (a < ri.size() || k < pr.size()) {
        if (k == pr.size() || (a < ri.size() && ri[a].first < pr[k].first)) {
          merged.push_back(ri[a++]);
        } else if (a == ri.size() || pr[k].first < ri[a].first) {
          T v = -factor * pr[k].second;
          if (!N::negligible(v)) {
            merged.emplace_back(pr[k].first, v);
            col_rows_[pr[k].first].push_back(i);
          }
          ++k;
        } else {
          T v = ri[a].second - factor * pr[k].second;
          if (!N::negligible(v) && pr[k].first != q) merged.emplace_back(ri[a].first, v);
          ++a;
          ++k;
        }
      }
      rows_[i].swap(merged);
      b_[i] -= factor * b_[r];
    }
    col_rows_[q].assign(1, r);

    const T dq = d_[q];
    if (!N::negligible(dq)) {
      obj_val_ += dq * b_[r];
      for (const auto& [c, v] : pr) d_[c] -= dq * v;
    }
    d_[q] = T(0);
    basis_[r] = q;
  }

  LpStatus iterate() {
    int degenerate_run = 0;
    while (true) {
      if (opt_.max_pivots > 0 && pivots_ >= opt_.max_pivots) return LpStatus::kIterationLimit;
      if (opt_.time_limit_s > 0 && pivots_ % 32 == 0 && std::chrono::steady_clock::now() > deadline_) {
        return LpStatus::kTimeLimit;
      }
      const bool bland = degenerate_run >= opt_.degenerate_limit;
      const int q = choose_entering(bland);
      if (q < 0) return LpStatus::kOptimal;
      const int r = choose_leaving(q);
      if (r < 0) return LpStatus::kUnbounded;
      const bool degenerate = N::negligible(b_[r]) || !N::positive(b_[r]);
      pivot(r, q);
      degenerate_run = degenerate ? degenerate_run + 1 : 0;
    }
  }

  const LpModel& model_;
  SolveOptions opt_;
  std::chrono::steady_clock::time_point deadline_;
  int m_ = 0;
  int ncols_ = 0;
  int structural_ = 0;
  int first_artificial_ = 0;
  bool has_artificials_ = false;
  std::vector<int> pos_col_, neg_col_;
  std::vector<Row> rows_;
  std::vector<T> b_;
  std::vector<int> basis_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<std::uint8_t> allowed_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<T> d_;
  T obj_val_ = T(0);
  long pivots_ = 0;
};

}  // namespace

LpSolution solve(const LpModel& model, const SolveOptions& opt) {
  if (opt.arithmetic == Arithmetic::kFloat) return detail::solve_revised(model, opt);
  return Tableau<Rational>(model, opt).run();
}

}  // namespace signcert
