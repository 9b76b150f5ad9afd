#ifndef ZONEST_MIXMONO_HPP_
#define ZONEST_MIXMONO_HPP_

#include <concepts>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zonest/errors.hpp"
#include "zonest/interval.hpp"
#include "zonest/model.hpp"
#include "zonest/rng.hpp"

namespace zonest {

/// Sign of the remainder's partial derivative after subtracting H:
/// picking H_ij = min(Jlo_ij, 0) leaves d g_i / d xi_j >= 0 (non_negative),
/// picking H_ij = max(Jhi_ij, 0) leaves it <= 0 (non_positive).
enum class PartialSign { non_negative, non_positive };

/// One admissible linear-remainder matrix H together with the sign pattern
/// of the Jacobian-sign-stable remainder g(xi) = f(xi) - H xi it induces.
struct DecompositionSelection {
  Eigen::MatrixXd H;
  std::vector<std::vector<PartialSign>> sign;  // same shape as H
};

struct FamilySpec {
  enum class Kind { canonical, canonical_plus_random, exhaustive };
  Kind kind = Kind::canonical;
  int extra = 0;
  std::uint64_t seed = 0;

  static FamilySpec canonical() { return {}; }
  static FamilySpec canonical_plus_random(int extra, std::uint64_t seed) {
    FamilySpec s;
    s.kind = Kind::canonical_plus_random;
    s.extra = extra;
    s.seed = seed;
    return s;
  }
  static FamilySpec exhaustive() {
    FamilySpec s;
    s.kind = Kind::exhaustive;
    return s;
  }
};

namespace detail {

inline DecompositionSelection selection_from_bits(
    const Eigen::MatrixXd& Jlo, const Eigen::MatrixXd& Jhi,
    const std::vector<bool>& take_upper) {
  const int rows = static_cast<int>(Jlo.rows()), cols = static_cast<int>(Jlo.cols());
  DecompositionSelection sel;
  sel.H.resize(rows, cols);
  sel.sign.assign(static_cast<std::size_t>(rows),
                  std::vector<PartialSign>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const bool up = take_upper[static_cast<std::size_t>(i * cols + j)];
      if (up) {
        sel.H(i, j) = std::max(Jhi(i, j), 0.0);
        sel.sign[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            PartialSign::non_positive;
      } else {
        sel.H(i, j) = std::min(Jlo(i, j), 0.0);
        sel.sign[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            PartialSign::non_negative;
      }
    }
  return sel;
}

}  // namespace detail

/// Admissible remainder matrices for Jacobian bounds Jlo <= J <= Jhi.
/// Every entry of every returned H is one of the two clipped bounds
/// {min(Jlo_ij, 0), max(Jhi_ij, 0)}, so f - H xi is JSS by construction.
///
/// canonical yields the two uniform selections (all entries clipped low /
/// all clipped high) plus the midpoint-sign selection, which picks per
/// entry the clip nearer mid(J); for a sign-stable or constant Jacobian the
/// latter reproduces J itself and the remainder collapses to a constant.
inline std::vector<DecompositionSelection> build_h_family(
    const Eigen::MatrixXd& Jlo, const Eigen::MatrixXd& Jhi,
    const FamilySpec& spec = FamilySpec::canonical()) {
  if (Jlo.rows() != Jhi.rows() || Jlo.cols() != Jhi.cols())
    throw DimensionMismatch("build_h_family: bound shapes differ");
  const int rows = static_cast<int>(Jlo.rows()), cols = static_cast<int>(Jlo.cols());
  const int cells = rows * cols;

  std::vector<DecompositionSelection> family;
  std::set<std::vector<double>> seen;
  auto push = [&](const std::vector<bool>& bits) {
    DecompositionSelection sel = detail::selection_from_bits(Jlo, Jhi, bits);
    std::vector<double> key(sel.H.data(), sel.H.data() + cells);
    if (seen.insert(std::move(key)).second) family.push_back(std::move(sel));
  };

  if (spec.kind == FamilySpec::Kind::exhaustive) {
    if (cells > 16)
      throw ExhaustiveTooLarge("build_h_family: exhaustive limited to 16 cells");
    for (std::uint64_t mask = 0; mask < (1ULL << cells); ++mask) {
      std::vector<bool> bits(static_cast<std::size_t>(cells));
      for (int t = 0; t < cells; ++t) bits[static_cast<std::size_t>(t)] = (mask >> t) & 1ULL;
      push(bits);
    }
    return family;
  }

  push(std::vector<bool>(static_cast<std::size_t>(cells), false));  // all min(Jlo, 0)
  push(std::vector<bool>(static_cast<std::size_t>(cells), true));   // all max(Jhi, 0)
  {
    std::vector<bool> bits(static_cast<std::size_t>(cells));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        bits[static_cast<std::size_t>(i * cols + j)] = Jlo(i, j) + Jhi(i, j) >= 0.0;
    push(bits);
  }

  if (spec.kind == FamilySpec::Kind::canonical_plus_random) {
    RngStream rng(spec.seed, {0x68666dULL});
    for (int k = 0; k < spec.extra; ++k) {
      std::vector<bool> bits(static_cast<std::size_t>(cells));
      for (int t = 0; t < cells; ++t) bits[static_cast<std::size_t>(t)] = rng.bits() & 1ULL;
      push(bits);
    }
  }
  return family;
}

/// The corner at which row `row` of the JSS remainder attains an extremum:
/// component j takes zhat_j where the remainder is non-increasing and z_j
/// where it is non-decreasing. With (z, zhat) = (ub, lb) this gives the
/// maximizer, with (lb, ub) the minimizer.
inline Eigen::VectorXd corner_point(const DecompositionSelection& sel, int row,
                                    const Eigen::VectorXd& z,
                                    const Eigen::VectorXd& zhat) {
  if (z.size() != zhat.size() || z.size() != sel.H.cols())
    throw DimensionMismatch("corner_point: size mismatch");
  Eigen::VectorXd zeta(z.size());
  for (int j = 0; j < z.size(); ++j) {
    const bool non_pos =
        sel.sign[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] ==
        PartialSign::non_positive;
    zeta[j] = non_pos ? zhat[j] : z[j];
  }
  return zeta;
}

/// Tight bounds of g_i(xi) = f_i(xi) - <H_i, xi> over the box, attained at
/// the sign-pattern corners. `fn` maps a point of the box to all outputs.
template <class F>
  requires std::invocable<F&, const Eigen::VectorXd&>
std::pair<Eigen::VectorXd, Eigen::VectorXd> jss_remainder_bounds(
    F&& fn, const DecompositionSelection& sel, const IntervalVector& box) {
  const int n_out = static_cast<int>(sel.H.rows());
  const Eigen::VectorXd ub = box.hi(), lb = box.lo();
  Eigen::VectorXd g_lo(n_out), g_hi(n_out);
  for (int i = 0; i < n_out; ++i) {
    const Eigen::VectorXd zeta_max = corner_point(sel, i, ub, lb);
    const Eigen::VectorXd zeta_min = corner_point(sel, i, lb, ub);
    g_hi[i] = fn(zeta_max)[i] - sel.H.row(i).dot(zeta_max);
    g_lo[i] = fn(zeta_min)[i] - sel.H.row(i).dot(zeta_min);
  }
  return {g_lo, g_hi};
}

inline std::pair<Eigen::VectorXd, Eigen::VectorXd> jss_remainder_bounds(
    const std::vector<Expr>& f_tilde, const DecompositionSelection& sel,
    const IntervalVector& box) {
  return jss_remainder_bounds(
      [&f_tilde](const Eigen::VectorXd& p) { return eval_point(f_tilde, p); },
      sel, box);
}

/// Range bounds of fn over the box via remainder-form decompositions:
/// per output and per family member, extremum of the JSS part at its
/// corner plus the exact extremum of the linear remainder, intersected
/// over the family. Always sound; often tighter than a plain extension.
template <class F>
IntervalVector decomposition_range(F&& fn, const IntervalMatrix& jac_bounds,
                                   const IntervalVector& box,
                                   const FamilySpec& family = FamilySpec::canonical()) {
  const int n_out = jac_bounds.rows();
  const Eigen::VectorXd ub = box.hi(), lb = box.lo();
  Eigen::VectorXd best_lo =
      Eigen::VectorXd::Constant(n_out, -std::numeric_limits<double>::infinity());
  Eigen::VectorXd best_hi =
      Eigen::VectorXd::Constant(n_out, std::numeric_limits<double>::infinity());
  for (const auto& sel : build_h_family(jac_bounds.lo(), jac_bounds.hi(), family)) {
    for (int i = 0; i < n_out; ++i) {
      const Eigen::VectorXd zp = corner_point(sel, i, ub, lb);
      const Eigen::VectorXd zm = corner_point(sel, i, lb, ub);
      const double hi = fn(zp)[i] + sel.H.row(i).dot(zm - zp);
      const double lo = fn(zm)[i] + sel.H.row(i).dot(zp - zm);
      best_hi[i] = std::min(best_hi[i], hi);
      best_lo[i] = std::max(best_lo[i], lo);
    }
  }
  return IntervalVector::from_bounds(best_lo, best_hi);
}

/// Decomposition-refined interval bounds of a Jacobian grid over a box.
/// Each entry is treated as a scalar function whose gradient (one more
/// symbolic derivative, `hess`) feeds the remainder-form bound; the result
/// is intersected with the natural interval extension, so it is sound and
/// never wider.
inline IntervalMatrix bound_jacobian_via_decomposition(
    const ExprGrid& jac, const std::vector<ExprGrid>& hess,
    const IntervalVector& box) {
  if (box.is_empty())
    throw EmptyIntervalError("bound_jacobian_via_decomposition: empty box");
  const int rows = static_cast<int>(jac.size());
  const int cols = rows > 0 ? static_cast<int>(jac[0].size()) : 0;
  IntervalMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const Expr& q = jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const Interval natural = q.eval(box);
      if (q.is_constant() || natural.diam() == 0.0) {
        out(i, j) = natural;
        continue;
      }
      IntervalMatrix grad(1, box.size());
      for (int k = 0; k < box.size(); ++k)
        grad(0, k) =
            hess[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                [static_cast<std::size_t>(k)].eval(box);
      auto fn = [&q](const Eigen::VectorXd& p) {
        Eigen::VectorXd v(1);
        v[0] = q.eval(p);
        return v;
      };
      const IntervalVector dec = decomposition_range(fn, grad, box);
      Interval refined = natural.intersect(dec[0]);
      if (refined.is_empty()) refined = natural;  // fp slack: keep the sound one
      out(i, j) = refined;
    }
  }
  return out;
}

}  // namespace zonest

#endif  // ZONEST_MIXMONO_HPP_
