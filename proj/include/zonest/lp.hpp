#ifndef ZONEST_LP_HPP_
#define ZONEST_LP_HPP_

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "zonest/config.hpp"
#include "zonest/errors.hpp"
#include "zonest/interval.hpp"

namespace zonest {

/// maximize objective . x  subject to
///   ineq_a x <= ineq_b,  eq_a x = eq_b,  bounds.lo <= x <= bounds.hi.
/// Bounds must be finite for every variable.
struct LinearProgram {
  Eigen::VectorXd objective;
  Eigen::MatrixXd ineq_a;
  Eigen::VectorXd ineq_b;
  Eigen::MatrixXd eq_a;
  Eigen::VectorXd eq_b;
  IntervalVector bounds;

  int num_vars() const { return static_cast<int>(objective.size()); }

  static LinearProgram make(int n) {
    LinearProgram p;
    p.objective = Eigen::VectorXd::Zero(n);
    p.ineq_a.resize(0, n);
    p.ineq_b.resize(0);
    p.eq_a.resize(0, n);
    p.eq_b.resize(0);
    p.bounds = IntervalVector::unit_box(n);
    return p;
  }
};

struct FeasibilityResult {
  bool feasible = false;
  Eigen::VectorXd witness;
};

struct OptimumResult {
  double value = 0.0;
  Eigen::VectorXd argmax;
};

namespace detail {

/// Dense two-phase revised simplex with implicit variable bounds.
/// Dantzig pricing with a Bland's-rule fallback against cycling; a hard
/// pivot budget yields NumericalFailure. Single-use: one instance per solve.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& p) : p_(p) { build(); }

  bool run_phase1() {
    phase_ = 1;
    solve_loop();
    double infeas = 0.0;
    for (int j = art0_; j < ncols_; ++j) infeas += value_of(j);
    if (infeas > config::lp_tolerance) return false;
    pin_artificials();
    return true;
  }

  void run_phase2() {
    phase_ = 2;
    solve_loop();
  }

  Eigen::VectorXd primal() const {
    Eigen::VectorXd x(n_);
    for (int j = 0; j < n_; ++j) x[j] = value_of(j);
    return x;
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  enum class St { lo, up, basic };

  void build() {
    n_ = p_.num_vars();
    const int mi = static_cast<int>(p_.ineq_b.size());
    const int me = static_cast<int>(p_.eq_b.size());
    m_ = mi + me;
    if (p_.bounds.size() != n_)
      throw DimensionMismatch("lp: bounds size != objective size");
    if (mi > 0 && p_.ineq_a.cols() != n_)
      throw DimensionMismatch("lp: ineq_a cols != n");
    if (me > 0 && p_.eq_a.cols() != n_)
      throw DimensionMismatch("lp: eq_a cols != n");

    slack0_ = n_;
    art0_ = n_ + mi;
    ncols_ = n_ + mi + m_;

    A_ = Eigen::MatrixXd::Zero(m_, ncols_);
    rhs_.resize(m_);
    if (mi > 0) {
      A_.topLeftCorner(mi, n_) = p_.ineq_a;
      A_.block(0, slack0_, mi, mi).setIdentity();
      rhs_.head(mi) = p_.ineq_b;
    }
    if (me > 0) {
      A_.block(mi, 0, me, n_) = p_.eq_a;
      rhs_.tail(me) = p_.eq_b;
    }

    lo_.assign(static_cast<std::size_t>(ncols_), 0.0);
    hi_.assign(static_cast<std::size_t>(ncols_), kInf);
    for (int j = 0; j < n_; ++j) {
      const Interval& b = p_.bounds[j];
      if (!std::isfinite(b.lo()) || !std::isfinite(b.hi()))
        throw Error("lp: variable bounds must be finite");
      lo_[static_cast<std::size_t>(j)] = b.lo();
      hi_[static_cast<std::size_t>(j)] = b.hi();
    }

    status_.assign(static_cast<std::size_t>(ncols_), St::lo);
    xn_.assign(static_cast<std::size_t>(ncols_), 0.0);
    for (int j = 0; j < n_; ++j) {
      // start at the bound of smaller magnitude
      const double l = lo_[static_cast<std::size_t>(j)], u = hi_[static_cast<std::size_t>(j)];
      if (std::abs(u) < std::abs(l)) {
        status_[static_cast<std::size_t>(j)] = St::up;
        xn_[static_cast<std::size_t>(j)] = u;
      } else {
        xn_[static_cast<std::size_t>(j)] = l;
      }
    }

    // residual determines artificial column signs; artificials start basic
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(ncols_);
    for (int j = 0; j < n_; ++j) x0[j] = xn_[static_cast<std::size_t>(j)];
    Eigen::VectorXd r = rhs_ - A_ * x0;
    basis_.resize(static_cast<std::size_t>(m_));
    xb_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const int aj = art0_ + i;
      A_(i, aj) = r[i] >= 0.0 ? 1.0 : -1.0;
      basis_[static_cast<std::size_t>(i)] = aj;
      status_[static_cast<std::size_t>(aj)] = St::basic;
      xb_[i] = std::abs(r[i]);
    }
    binv_ = Eigen::MatrixXd::Identity(m_, m_);
    for (int i = 0; i < m_; ++i)
      if (A_(i, art0_ + i) < 0.0) binv_(i, i) = -1.0;
  }

  double value_of(int j) const {
    if (status_[static_cast<std::size_t>(j)] == St::basic) {
      for (int i = 0; i < m_; ++i)
        if (basis_[static_cast<std::size_t>(i)] == j) return xb_[i];
      return 0.0;
    }
    return xn_[static_cast<std::size_t>(j)];
  }

  double cost_of(int j) const {
    if (phase_ == 1) return j >= art0_ ? -1.0 : 0.0;
    return j < n_ ? p_.objective[j] : 0.0;
  }

  bool is_fixed(int j) const {
    return lo_[static_cast<std::size_t>(j)] == hi_[static_cast<std::size_t>(j)];
  }

  void pin_artificials() {
    // drive basic artificials out where possible; pin all of them at zero
    for (int i = 0; i < m_; ++i) {
      const int bj = basis_[static_cast<std::size_t>(i)];
      if (bj < art0_) continue;
      bool pivoted = false;
      for (int j = 0; j < art0_ && !pivoted; ++j) {
        if (status_[static_cast<std::size_t>(j)] == St::basic || is_fixed(j)) continue;
        const double wij = binv_.row(i).dot(A_.col(j));
        if (std::abs(wij) > 1e-9) {
          degenerate_swap(i, j, wij);
          pivoted = true;
        }
      }
    }
    for (int j = art0_; j < ncols_; ++j) {
      lo_[static_cast<std::size_t>(j)] = 0.0;
      hi_[static_cast<std::size_t>(j)] = 0.0;
      if (status_[static_cast<std::size_t>(j)] != St::basic)
        xn_[static_cast<std::size_t>(j)] = 0.0;
    }
  }

  /// Swaps nonbasic j into row i at unchanged variable values (the leaving
  /// basic sits at ~0 after a feasible phase 1, so this is a null pivot).
  void degenerate_swap(int i, int j, double wij) {
    const int leave = basis_[static_cast<std::size_t>(i)];
    Eigen::VectorXd w = binv_ * A_.col(j);
    binv_.row(i) /= wij;
    for (int r = 0; r < m_; ++r)
      if (r != i) binv_.row(r) -= w[r] * binv_.row(i);
    basis_[static_cast<std::size_t>(i)] = j;
    status_[static_cast<std::size_t>(j)] = St::basic;
    status_[static_cast<std::size_t>(leave)] = St::lo;
    xn_[static_cast<std::size_t>(leave)] = 0.0;
    xb_[i] = nonbasic_value(j);
  }

  double nonbasic_value(int j) const { return xn_[static_cast<std::size_t>(j)]; }

  void recompute_basics() {
    Eigen::VectorXd acc = rhs_;
    for (int j = 0; j < ncols_; ++j) {
      if (status_[static_cast<std::size_t>(j)] == St::basic) continue;
      const double v = xn_[static_cast<std::size_t>(j)];
      if (v != 0.0) acc -= A_.col(j) * v;
    }
    xb_ = binv_ * acc;
  }

  void refactorize() {
    Eigen::MatrixXd B(m_, m_);
    for (int i = 0; i < m_; ++i) B.col(i) = A_.col(basis_[static_cast<std::size_t>(i)]);
    binv_ = B.partialPivLu().solve(Eigen::MatrixXd::Identity(m_, m_));
    if (!binv_.allFinite()) throw NumericalFailure("lp: singular basis");
    recompute_basics();
  }

  void solve_loop() {
    if (m_ == 0) {
      if (phase_ == 2) {
        for (int j = 0; j < n_; ++j) {
          xn_[static_cast<std::size_t>(j)] =
              p_.objective[j] > 0.0 ? hi_[static_cast<std::size_t>(j)]
                                    : lo_[static_cast<std::size_t>(j)];
          status_[static_cast<std::size_t>(j)] =
              p_.objective[j] > 0.0 ? St::up : St::lo;
        }
      }
      return;
    }
    const double tol = config::lp_tolerance;
    const int bland_after = 200 + 10 * m_;
    const int max_iters = 20000 + 200 * m_;
    Eigen::VectorXd cb(m_), y, w;
    for (int iter = 0; iter < max_iters; ++iter) {
      const bool bland = iter >= bland_after;
      if (iter > 0 && iter % 64 == 0) refactorize();

      for (int i = 0; i < m_; ++i) cb[i] = cost_of(basis_[static_cast<std::size_t>(i)]);
      y = binv_.transpose() * cb;

      int enter = -1;
      double best = tol;
      bool from_lo = true;
      for (int j = 0; j < ncols_; ++j) {
        if (status_[static_cast<std::size_t>(j)] == St::basic || is_fixed(j)) continue;
        if (phase_ == 2 && j >= art0_) continue;
        const double d = cost_of(j) - y.dot(A_.col(j));
        const bool at_lo = status_[static_cast<std::size_t>(j)] == St::lo;
        const double viol = at_lo ? d : -d;
        if (viol > best) {
          enter = j;
          from_lo = at_lo;
          if (bland) break;
          best = viol;
        }
      }
      if (enter < 0) return;  // optimal

      const double sigma = from_lo ? 1.0 : -1.0;
      w = binv_ * A_.col(enter);

      // ratio test: first blocking basic variable, or the entering
      // variable's own opposite bound (bound flip)
      double tmax = hi_[static_cast<std::size_t>(enter)] - lo_[static_cast<std::size_t>(enter)];
      int leave_row = -1;
      bool leave_to_lo = true;
      for (int i = 0; i < m_; ++i) {
        const double dir = -sigma * w[i];
        const int bj = basis_[static_cast<std::size_t>(i)];
        double ratio;
        bool to_lo;
        if (dir < -1e-11) {
          ratio = (xb_[i] - lo_[static_cast<std::size_t>(bj)]) / (-dir);
          to_lo = true;
        } else if (dir > 1e-11) {
          if (!std::isfinite(hi_[static_cast<std::size_t>(bj)])) continue;
          ratio = (hi_[static_cast<std::size_t>(bj)] - xb_[i]) / dir;
          to_lo = false;
        } else {
          continue;
        }
        ratio = std::max(ratio, 0.0);
        if (ratio < tmax - 1e-12) {
          tmax = ratio;
          leave_row = i;
          leave_to_lo = to_lo;
        } else if (leave_row >= 0 && ratio <= tmax + 1e-12) {
          // tie: Bland picks the smallest basis index, otherwise prefer the
          // numerically strongest pivot
          const bool better =
              bland ? bj < basis_[static_cast<std::size_t>(leave_row)]
                    : std::abs(w[i]) > std::abs(w[leave_row]);
          if (better) {
            tmax = std::min(tmax, ratio);
            leave_row = i;
            leave_to_lo = to_lo;
          }
        }
      }

      if (!std::isfinite(tmax)) {
        if (phase_ == 1)
          throw NumericalFailure("lp: unbounded phase-1 direction");
        throw UnboundedProgram("lp: objective unbounded over feasible set");
      }

      // apply the step
      for (int i = 0; i < m_; ++i) xb_[i] -= sigma * tmax * w[i];
      if (leave_row < 0) {
        // bound flip: entering moves to its opposite bound
        status_[static_cast<std::size_t>(enter)] = from_lo ? St::up : St::lo;
        xn_[static_cast<std::size_t>(enter)] =
            from_lo ? hi_[static_cast<std::size_t>(enter)]
                    : lo_[static_cast<std::size_t>(enter)];
        continue;
      }
      const int leave = basis_[static_cast<std::size_t>(leave_row)];
      const double enter_val =
          (from_lo ? lo_[static_cast<std::size_t>(enter)]
                   : hi_[static_cast<std::size_t>(enter)]) +
          sigma * tmax;
      const double piv = w[leave_row];
      if (std::abs(piv) < 1e-12) {
        refactorize();
        continue;
      }
      binv_.row(leave_row) /= piv;
      for (int r = 0; r < m_; ++r)
        if (r != leave_row) binv_.row(r) -= w[r] * binv_.row(leave_row);
      basis_[static_cast<std::size_t>(leave_row)] = enter;
      status_[static_cast<std::size_t>(enter)] = St::basic;
      status_[static_cast<std::size_t>(leave)] = leave_to_lo ? St::lo : St::up;
      xn_[static_cast<std::size_t>(leave)] =
          leave_to_lo ? lo_[static_cast<std::size_t>(leave)]
                      : hi_[static_cast<std::size_t>(leave)];
      xb_[leave_row] = enter_val;
    }
    throw NumericalFailure("lp: pivot budget exceeded");
  }

  const LinearProgram& p_;
  int n_ = 0, m_ = 0, slack0_ = 0, art0_ = 0, ncols_ = 0;
  int phase_ = 1;
  Eigen::MatrixXd A_;
  Eigen::VectorXd rhs_;
  Eigen::MatrixXd binv_;
  Eigen::VectorXd xb_;
  std::vector<int> basis_;
  std::vector<St> status_;
  std::vector<double> lo_, hi_, xn_;
};

}  // namespace detail

/// Phase-1 feasibility: returns a witness satisfying all constraints within
/// config::lp_tolerance, or Infeasible certified by a positive phase-1
/// optimum.
inline FeasibilityResult feasible(const LinearProgram& p) {
  detail::Simplex s(p);
  FeasibilityResult r;
  r.feasible = s.run_phase1();
  if (r.feasible) r.witness = s.primal();
  return r;
}

inline OptimumResult maximize(const LinearProgram& p) {
  detail::Simplex s(p);
  if (!s.run_phase1()) throw InfeasibleProgram("lp: infeasible");
  s.run_phase2();
  OptimumResult r;
  r.argmax = s.primal();
  r.value = p.objective.dot(r.argmax);
  return r;
}

}  // namespace zonest

#endif  // ZONEST_LP_HPP_
