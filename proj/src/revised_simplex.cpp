#include "revised_simplex.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace signcert::detail {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPrimalTol = 1e-9;
constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kDrop = 1e-13;
constexpr int kMaxUpdates = 100;
constexpr double kDevexReset = 1e6;

constexpr double kZero = 1e-12;
// Largest Markowitz product (row length - 1) * (column count - 1) accepted
// when substituting a column out of an equality row.
constexpr int kMaxFill = 12;

// Maximization LP in doubles after substitution. Eliminated columns keep
// their index but have no entries and zero cost.
struct Reduced {
  int n = 0;
  std::vector<std::uint8_t> free;
  std::vector<double> cost;
  std::vector<std::map<int, double>> rows;
  std::vector<Sense> sense;
  std::vector<double> rhs;
  // x_col = (rhs - sum row * x) / pivot, replayed in reverse order.
  struct Elimination {
    int col;
    double pivot;
    double rhs;
    std::vector<std::pair<int, double>> row;
  };
  std::vector<Elimination> eliminated;

  void recover(std::vector<double>& x) const {
    for (auto it = eliminated.rbegin(); it != eliminated.rend(); ++it) {
      double v = it->rhs;
      for (const auto& [l, a] : it->row) v -= a * x[l];
      x[it->col] = v / it->pivot;
    }
  }
};

// Substitutes out columns that are free, or implied nonnegative, in an
// equality row, as long as the fill stays small. Drops the row and column.
Reduced presolve(const LpModel& model) {
  Reduced red;
  red.n = static_cast<int>(model.num_vars());
  red.free.resize(red.n);
  for (int j = 0; j < red.n; ++j) red.free[j] = model.vars()[j].free;
  red.cost.assign(red.n, 0.0);
  for (const auto& [v, c] : model.objective().terms()) red.cost[v] = c.get_d();
  const auto& cons = model.constraints();
  const int m = static_cast<int>(cons.size());
  std::vector<std::map<int, double>> rows(m);
  std::vector<std::vector<int>> col_rows(red.n);
  std::vector<double> rhs(m);
  for (int i = 0; i < m; ++i) {
    for (const auto& [v, coef] : cons[i].row) {
      if (sgn(coef) == 0) continue;
      rows[i][v] = coef.get_d();
      col_rows[v].push_back(i);
    }
    rhs[i] = cons[i].rhs.get_d();
  }
  std::vector<std::uint8_t> alive(m, 1);

  auto live_count = [&](int k) {
    auto& rs = col_rows[k];
    rs.erase(std::remove_if(rs.begin(), rs.end(), [&](int r) { return !alive[r] || !rows[r].count(k); }), rs.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    return static_cast<int>(rs.size());
  };
  auto implied_free = [&](int i, int k) {
    const double a = rows[i].at(k);
    for (const auto& [l, al] : rows[i]) {
      if (l == k) continue;
      if (red.free[l] || al * a > 0) return false;
    }
    return rhs[i] / a >= -kZero;
  };

  for (int i = 0; i < m; ++i) {
    if (cons[i].sense != Sense::kEq || rows[i].size() < 2) continue;
    const int len = static_cast<int>(rows[i].size());
    int best = -1;
    int best_fill = kMaxFill + 1;
    for (const auto& [k, a] : rows[i]) {
      if (!red.free[k] && !implied_free(i, k)) continue;
      const int fill = (len - 1) * (live_count(k) - 1);
      if (fill < best_fill) {
        best = k;
        best_fill = fill;
      }
    }
    if (best < 0) continue;

    const double a = rows[i].at(best);
    for (int r : col_rows[best]) {
      if (r == i) continue;
      const double f = rows[r].at(best) / a;
      for (const auto& [l, al] : rows[i]) {
        auto [it, inserted] = rows[r].emplace(l, 0.0);
        it->second -= f * al;
        if (inserted) col_rows[l].push_back(r);
        if (l == best || std::fabs(it->second) < kZero) rows[r].erase(it);
      }
      rhs[r] -= f * rhs[i];
    }
    const double fc = red.cost[best] / a;
    if (fc != 0.0) {
      for (const auto& [l, al] : rows[i]) red.cost[l] -= fc * al;
    }
    red.cost[best] = 0.0;
    Reduced::Elimination e{best, a, rhs[i], {}};
    for (const auto& [l, al] : rows[i]) {
      if (l != best) e.row.emplace_back(l, al);
    }
    red.eliminated.push_back(std::move(e));
    alive[i] = 0;
    col_rows[best].clear();
  }

  for (int i = 0; i < m; ++i) {
    if (!alive[i]) continue;
    red.rows.push_back(std::move(rows[i]));
    red.sense.push_back(cons[i].sense);
    red.rhs.push_back(rhs[i]);
  }
  return red;
}

// Standard form: A x + slacks + artificials = b with every nonbasic column at
// value 0. Free structurals have lo = -inf. Artificials have up = 0 outside
// phase one, so a basic artificial can only leave.
class Revised {
 public:
  Revised(const LpModel& model, const SolveOptions& opt) : model_(model), opt_(opt), red_(presolve(model)) {
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(opt.time_limit_s));
    setup();
    // Degenerate runs of a few thousand pivots are routine on block models,
    // and Bland's rule crawls through them.
    degenerate_limit_ = std::max(opt.degenerate_limit, 4 * m_);
  }

  LpSolution run() {
    LpSolution sol;
    bool need_phase1 = false;
    for (int p = 0; p < m_; ++p) need_phase1 = need_phase1 || head_[p] >= first_art_;
    if (need_phase1) {
      cost_.assign(n_, 0.0);
      for (int j = first_art_; j < n_; ++j) cost_[j] = -1.0;
      LpStatus st = iterate(true);
      sol.pivots = pivots_;
      if (st == LpStatus::kIterationLimit || st == LpStatus::kTimeLimit) {
        sol.status = st;
        return sol;
      }
      double infeas = 0;
      for (int p = 0; p < m_; ++p) {
        if (head_[p] >= first_art_) infeas += std::fabs(xb_[p]);
      }
      if (infeas > 1e-7 * (1.0 + bmax_)) {
        sol.status = LpStatus::kInfeasible;
        return sol;
      }
    }
    for (int j = first_art_; j < n_; ++j) up_[j] = 0.0;
    cost_.assign(n_, 0.0);
    std::copy(red_.cost.begin(), red_.cost.end(), cost_.begin());
    LpStatus st = iterate(false);
    sol.status = st;
    sol.pivots = pivots_;
    if (st != LpStatus::kOptimal) return sol;

    reinvert();
    std::vector<double> x(n_struct_, 0.0);
    for (int p = 0; p < m_; ++p) {
      if (head_[p] < n_struct_) x[head_[p]] = xb_[p];
    }
    red_.recover(x);
    sol.values.assign(model_.num_vars(), Rational(0));
    for (int j = 0; j < n_struct_; ++j) {
      double v = x[j];
      if (!red_.free[j] && v < 0.0 && v > -kPrimalTol) v = 0.0;
      sol.values[j] = from_double(v);
    }
    sol.objective = model_.objective().evaluate(sol.values);
    return sol;
  }

 private:
  void setup() {
    m_ = static_cast<int>(red_.rows.size());
    n_struct_ = red_.n;
    std::vector<std::vector<std::pair<int, double>>> cols(n_struct_);
    b_ = red_.rhs;
    for (int i = 0; i < m_; ++i) {
      for (const auto& [v, a] : red_.rows[i]) cols[v].emplace_back(i, a);
      bmax_ = std::max(bmax_, std::fabs(b_[i]));
    }
    for (int j = 0; j < n_struct_; ++j) {
      lo_.push_back(red_.free[j] ? -kInf : 0.0);
      up_.push_back(kInf);
    }
    head_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      if (red_.sense[i] == Sense::kEq) continue;
      const double s = red_.sense[i] == Sense::kLe ? 1.0 : -1.0;
      if (b_[i] * s >= 0) head_[i] = static_cast<int>(cols.size());
      cols.push_back({{i, s}});
      lo_.push_back(0.0);
      up_.push_back(kInf);
    }
    first_art_ = static_cast<int>(cols.size());
    for (int i = 0; i < m_; ++i) {
      cols.push_back({{i, b_[i] >= 0 ? 1.0 : -1.0}});
      lo_.push_back(0.0);
      up_.push_back(kInf);
      if (head_[i] < 0) head_[i] = first_art_ + i;
    }
    n_ = static_cast<int>(cols.size());

    start_.assign(n_ + 1, 0);
    for (int j = 0; j < n_; ++j) start_[j + 1] = start_[j] + static_cast<int>(cols[j].size());
    for (const auto& c : cols) {
      for (const auto& [i, a] : c) {
        idx_.push_back(i);
        val_.push_back(a);
      }
    }
    // Row-wise copy of the entering candidates, for the pivot row.
    rstart_.assign(m_ + 1, 0);
    for (int j = 0; j < first_art_; ++j) {
      for (int s = start_[j]; s < start_[j + 1]; ++s) ++rstart_[idx_[s] + 1];
    }
    for (int i = 0; i < m_; ++i) rstart_[i + 1] += rstart_[i];
    rcol_.resize(rstart_[m_]);
    rval_.resize(rstart_[m_]);
    std::vector<int> fill(rstart_.begin(), rstart_.end() - 1);
    for (int j = 0; j < first_art_; ++j) {
      for (int s = start_[j]; s < start_[j + 1]; ++s) {
        const int at = fill[idx_[s]]++;
        rcol_[at] = j;
        rval_[at] = val_[s];
      }
    }

    pos_.assign(n_, -1);
    for (int p = 0; p < m_; ++p) pos_[head_[p]] = p;
    work_.assign(m_, 0.0);
    d_.assign(n_, 0.0);
    w_.assign(n_, 1.0);
    arow_.assign(first_art_, 0.0);
    reinvert();
  }

  void ftran(std::vector<double>& v) const {
    const int k = static_cast<int>(eta_p_.size());
    for (int e = 0; e < k; ++e) {
      const int p = eta_p_[e];
      if (v[p] == 0.0) continue;
      const double t = v[p] / eta_piv_[e];
      v[p] = t;
      for (int s = eta_start_[e]; s < eta_start_[e + 1]; ++s) v[eta_idx_[s]] -= eta_val_[s] * t;
    }
  }

  void btran(std::vector<double>& y) const {
    for (int e = static_cast<int>(eta_p_.size()) - 1; e >= 0; --e) {
      double acc = y[eta_p_[e]];
      for (int s = eta_start_[e]; s < eta_start_[e + 1]; ++s) acc -= y[eta_idx_[s]] * eta_val_[s];
      y[eta_p_[e]] = acc / eta_piv_[e];
    }
  }

  void push_eta(int p, const std::vector<double>& v) {
    eta_p_.push_back(p);
    eta_piv_.push_back(v[p]);
    for (int i = 0; i < m_; ++i) {
      if (i != p && std::fabs(v[i]) > kDrop) {
        eta_idx_.push_back(i);
        eta_val_.push_back(v[i]);
      }
    }
    eta_start_.push_back(static_cast<int>(eta_idx_.size()));
  }

  void scatter(int j, std::vector<double>& v) const {
    std::fill(v.begin(), v.end(), 0.0);
    for (int s = start_[j]; s < start_[j + 1]; ++s) v[idx_[s]] = val_[s];
  }

  // Product-form inverse rebuilt column by column for the current basic set.
  // Positions are reassigned; dependent columns are replaced by artificials.
  // Work is proportional to the nonzeros touched, not to m per column.
  // Recomputes the basic values.
  void reinvert() {
    eta_p_.clear();
    eta_piv_.clear();
    eta_idx_.clear();
    eta_val_.clear();
    eta_start_.assign(1, 0);
    std::vector<int> cols(head_.begin(), head_.end());
    std::stable_sort(cols.begin(), cols.end(),
                     [&](int a, int b) { return start_[a + 1] - start_[a] < start_[b + 1] - start_[b]; });
    std::vector<std::uint8_t> taken(m_, 0);
    std::vector<std::uint8_t> mark(m_, 0);
    std::vector<int> nz, heap;
    std::vector<int> eta_of_row(m_, -1);
    std::vector<int> new_head(m_, -1);
    auto load = [&](int j) {
      for (int i : nz) {
        work_[i] = 0.0;
        mark[i] = 0;
      }
      nz.clear();
      for (int s = start_[j]; s < start_[j + 1]; ++s) {
        work_[idx_[s]] = val_[s];
        mark[idx_[s]] = 1;
        nz.push_back(idx_[s]);
      }
      // Each eta pivots on its own row, so only etas whose row is nonzero
      // apply, in creation order.
      heap.clear();
      for (int i : nz) {
        if (eta_of_row[i] >= 0) heap.push_back(eta_of_row[i]);
      }
      std::make_heap(heap.begin(), heap.end(), std::greater<>());
      while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), std::greater<>());
        const int e = heap.back();
        heap.pop_back();
        const int p = eta_p_[e];
        if (work_[p] == 0.0) continue;
        const double t = work_[p] / eta_piv_[e];
        work_[p] = t;
        for (int s = eta_start_[e]; s < eta_start_[e + 1]; ++s) {
          const int i = eta_idx_[s];
          if (!mark[i]) {
            mark[i] = 1;
            nz.push_back(i);
            if (eta_of_row[i] > e) {
              heap.push_back(eta_of_row[i]);
              std::push_heap(heap.begin(), heap.end(), std::greater<>());
            }
          }
          work_[i] -= eta_val_[s] * t;
        }
      }
    };
    auto push = [&](int p) {
      eta_of_row[p] = static_cast<int>(eta_p_.size());
      eta_p_.push_back(p);
      eta_piv_.push_back(work_[p]);
      for (int i : nz) {
        if (i != p && std::fabs(work_[i]) > kDrop) {
          eta_idx_.push_back(i);
          eta_val_.push_back(work_[i]);
        }
      }
      eta_start_.push_back(static_cast<int>(eta_idx_.size()));
    };
    for (int j : cols) {
      load(j);
      int best = -1;
      double best_mag = kPivotTol;
      for (int i : nz) {
        if (!taken[i] && std::fabs(work_[i]) > best_mag) {
          best = i;
          best_mag = std::fabs(work_[i]);
        }
      }
      if (best < 0) {
        pos_[j] = -1;
        continue;
      }
      taken[best] = 1;
      new_head[best] = j;
      if (!(work_[best] == 1.0 && start_[j + 1] - start_[j] == 1)) push(best);
    }
    for (int i = 0; i < m_; ++i) {
      if (taken[i]) continue;
      new_head[i] = first_art_ + i;
      load(first_art_ + i);
      push(i);
    }
    for (int i : nz) work_[i] = 0.0;
    head_ = std::move(new_head);
    for (int p = 0; p < m_; ++p) pos_[head_[p]] = p;
    base_etas_ = static_cast<int>(eta_p_.size());
    xb_ = b_;
    ftran(xb_);
  }

  void price_all() {
    std::vector<double> y(m_);
    for (int p = 0; p < m_; ++p) y[p] = cost_[head_[p]];
    btran(y);
    for (int j = 0; j < first_art_; ++j) {
      if (pos_[j] >= 0) {
        d_[j] = 0.0;
        continue;
      }
      double d = cost_[j];
      for (int s = start_[j]; s < start_[j + 1]; ++s) d -= y[idx_[s]] * val_[s];
      d_[j] = d;
    }
  }

  // +1 to increase x_j, -1 to decrease a free x_j, 0 if j cannot improve.
  int direction(int j) const {
    if (d_[j] > kDualTol) return 1;
    if (d_[j] < -kDualTol && lo_[j] == -kInf) return -1;
    return 0;
  }

  // Devex pricing, or the lowest eligible index under Bland's rule.
  int choose_entering(bool bland) const {
    int q = -1;
    double best = 0.0;
    for (int j = 0; j < first_art_; ++j) {
      if (pos_[j] >= 0 || direction(j) == 0) continue;
      if (bland) return j;
      const double score = d_[j] * d_[j] / w_[j];
      if (score > best) {
        best = score;
        q = j;
      }
    }
    return q;
  }

  // Harris two-pass ratio test; x_B moves by -dir * alpha * t. Returns the
  // leaving position, -1 if unbounded.
  int choose_leaving(const std::vector<double>& alpha, double dir, bool bland, double& t) const {
    double tmax = kInf;
    for (int p = 0; p < m_; ++p) {
      if (std::fabs(alpha[p]) <= kPivotTol) continue;
      const double rate = -dir * alpha[p];
      const int j = head_[p];
      if (rate < 0 && lo_[j] > -kInf) tmax = std::min(tmax, (xb_[p] - lo_[j] + kPrimalTol) / -rate);
      else if (rate > 0 && up_[j] < kInf) tmax = std::min(tmax, (up_[j] - xb_[p] + kPrimalTol) / rate);
    }
    if (tmax == kInf) return -1;
    int r = -1;
    double r_ratio = 0.0;
    double r_mag = 0.0;
    for (int p = 0; p < m_; ++p) {
      if (std::fabs(alpha[p]) <= kPivotTol) continue;
      const double rate = -dir * alpha[p];
      const int j = head_[p];
      double ratio;
      if (rate < 0 && lo_[j] > -kInf) ratio = (xb_[p] - lo_[j]) / -rate;
      else if (rate > 0 && up_[j] < kInf) ratio = (up_[j] - xb_[p]) / rate;
      else continue;
      if (ratio > tmax) continue;
      const bool better = bland ? (r < 0 || ratio < r_ratio || (ratio == r_ratio && j < head_[r]))
                                : std::fabs(alpha[p]) > r_mag;
      if (better) {
        r = p;
        r_ratio = ratio;
        r_mag = std::fabs(alpha[p]);
      }
    }
    t = std::max(0.0, r_ratio);
    return r;
  }

  // Reduced costs and Devex weights from the pivot row e_r^T B^-1 A.
  void update_duals(int r, int q, double alpha_rq) {
    std::vector<double>& rho = work_;
    std::fill(rho.begin(), rho.end(), 0.0);
    rho[r] = 1.0;
    btran(rho);
    touched_.clear();
    for (int i = 0; i < m_; ++i) {
      if (rho[i] == 0.0) continue;
      for (int s = rstart_[i]; s < rstart_[i + 1]; ++s) {
        const int j = rcol_[s];
        if (pos_[j] >= 0) continue;
        if (arow_[j] == 0.0) touched_.push_back(j);
        arow_[j] += rho[i] * rval_[s];
        // Keep the touched marker when entries cancel.
        if (arow_[j] == 0.0) arow_[j] = 1e-300;
      }
    }
    const double theta = d_[q] / alpha_rq;
    const double wq = w_[q];
    bool reset = false;
    for (int j : touched_) {
      const double a = arow_[j];
      arow_[j] = 0.0;
      if (j == q) continue;
      d_[j] -= theta * a;
      const double ratio = a / alpha_rq;
      w_[j] = std::max(w_[j], ratio * ratio * wq);
      reset = reset || w_[j] > kDevexReset;
    }
    const int leaving = head_[r];
    if (leaving < first_art_) {
      d_[leaving] = -theta;
      w_[leaving] = std::max(wq / (alpha_rq * alpha_rq), 1.0);
    }
    d_[q] = 0.0;
    if (reset) std::fill(w_.begin(), w_.end(), 1.0);
  }

  LpStatus iterate(bool phase1) {
    int degenerate_run = 0;
    std::vector<double> alpha(m_);
    std::fill(w_.begin(), w_.end(), 1.0);
    price_all();
    while (true) {
      if (opt_.max_pivots > 0 && pivots_ >= opt_.max_pivots) return LpStatus::kIterationLimit;
      if (opt_.time_limit_s > 0 && pivots_ % 32 == 0 && std::chrono::steady_clock::now() > deadline_) {
        return LpStatus::kTimeLimit;
      }
      if (static_cast<int>(eta_p_.size()) - base_etas_ >= kMaxUpdates) {
        reinvert();
        price_all();
      }
      if (phase1) {
        bool any = false;
        for (int p = 0; p < m_ && !any; ++p) any = head_[p] >= first_art_ && xb_[p] > kPrimalTol;
        if (!any) return LpStatus::kOptimal;
      }
      const bool bland = degenerate_run >= degenerate_limit_;
      int q = choose_entering(bland);
      if (q < 0) {
        // Confirm with fresh reduced costs before declaring optimality.
        price_all();
        q = choose_entering(bland);
        if (q < 0) return LpStatus::kOptimal;
      }
      const double dir = direction(q);

      scatter(q, alpha);
      ftran(alpha);
      double t = 0.0;
      const int r = choose_leaving(alpha, dir, bland, t);
      if (r < 0) {
        if (phase1) throw std::runtime_error("phase one objective is unbounded");
        return LpStatus::kUnbounded;
      }
      for (int p = 0; p < m_; ++p) {
        if (alpha[p] != 0.0) xb_[p] -= dir * alpha[p] * t;
      }
      update_duals(r, q, alpha[r]);
      const int leaving = head_[r];
      xb_[r] = dir * t;
      push_eta(r, alpha);
      pos_[leaving] = -1;
      head_[r] = q;
      pos_[q] = r;
      ++pivots_;
      degenerate_run = t <= kPrimalTol ? degenerate_run + 1 : 0;
    }
  }

  const LpModel& model_;
  SolveOptions opt_;
  Reduced red_;
  std::chrono::steady_clock::time_point deadline_;
  int degenerate_limit_ = 0;
  int m_ = 0;
  int n_ = 0;
  int n_struct_ = 0;
  int first_art_ = 0;
  double bmax_ = 0.0;
  std::vector<int> start_, idx_;
  std::vector<double> val_;
  std::vector<int> rstart_, rcol_;
  std::vector<double> rval_;
  std::vector<double> lo_, up_, cost_, b_;
  std::vector<int> head_, pos_;
  std::vector<double> xb_, work_;
  std::vector<double> d_, w_, arow_;
  std::vector<int> touched_;
  std::vector<int> eta_p_, eta_start_, eta_idx_;
  std::vector<double> eta_piv_, eta_val_;
  int base_etas_ = 0;
  long pivots_ = 0;
};

}  // namespace

LpSolution solve_revised(const LpModel& model, const SolveOptions& opt) { return Revised(model, opt).run(); }

}  // namespace signcert::detail
