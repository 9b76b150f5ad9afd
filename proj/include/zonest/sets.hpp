#ifndef ZONEST_SETS_HPP_
#define ZONEST_SETS_HPP_

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "zonest/config.hpp"
#include "zonest/errors.hpp"
#include "zonest/interval.hpp"
#include "zonest/lp.hpp"
#include "zonest/rng.hpp"

namespace zonest {

/// {G xi + c | xi in [-1,1]^ng}.
struct Zonotope {
  Eigen::MatrixXd G;
  Eigen::VectorXd c;

  int dim() const { return static_cast<int>(c.size()); }
  int num_generators() const { return static_cast<int>(G.cols()); }

  static Zonotope box(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
    Zonotope z;
    z.c = 0.5 * (lo + hi);
    z.G = (0.5 * (hi - lo)).asDiagonal();
    return z;
  }

  static Zonotope point(const Eigen::VectorXd& v) {
    Zonotope z;
    z.c = v;
    z.G.resize(v.size(), 0);
    return z;
  }
};

/// {G xi + c | xi in [-1,1]^ng, A xi = b}. A may have zero rows, in which
/// case the set is a plain zonotope.
struct ConstrainedZonotope {
  Eigen::MatrixXd G;
  Eigen::VectorXd c;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;

  int dim() const { return static_cast<int>(c.size()); }
  int num_generators() const { return static_cast<int>(G.cols()); }
  int num_constraints() const { return static_cast<int>(A.rows()); }
  bool is_unconstrained() const { return A.rows() == 0; }

  static ConstrainedZonotope make(Eigen::MatrixXd G, Eigen::VectorXd c,
                                  Eigen::MatrixXd A, Eigen::VectorXd b) {
    if (G.rows() != c.size())
      throw DimensionMismatch("ConstrainedZonotope: G rows != c size");
    if (A.rows() != b.size())
      throw DimensionMismatch("ConstrainedZonotope: A rows != b size");
    if (A.rows() > 0 && A.cols() != G.cols())
      throw DimensionMismatch("ConstrainedZonotope: A cols != G cols");
    ConstrainedZonotope z;
    z.G = std::move(G);
    z.c = std::move(c);
    z.A = std::move(A);
    z.b = std::move(b);
    if (z.A.rows() == 0) z.A.resize(0, z.G.cols());
    return z;
  }

  static ConstrainedZonotope from_zonotope(const Zonotope& z) {
    return make(z.G, z.c, Eigen::MatrixXd(0, z.G.cols()), Eigen::VectorXd(0));
  }

  static ConstrainedZonotope box(const Eigen::VectorXd& lo,
                                 const Eigen::VectorXd& hi) {
    return from_zonotope(Zonotope::box(lo, hi));
  }

  static ConstrainedZonotope point(const Eigen::VectorXd& v) {
    return from_zonotope(Zonotope::point(v));
  }
};

/// Intersection of zonotopes, never expanded explicitly.
struct ZonotopeBundle {
  std::vector<Zonotope> members;
};

/// {z | Ap z <= bp}.
struct HPolytope {
  Eigen::MatrixXd Ap;
  Eigen::VectorXd bp;
};

/// Intersection list of constrained zonotopes; the common output
/// representation of every estimator in this library.
struct SetEnclosure {
  std::vector<ConstrainedZonotope> members;

  int dim() const { return members.empty() ? 0 : members.front().dim(); }

  static SetEnclosure single(ConstrainedZonotope z) {
    SetEnclosure s;
    s.members.push_back(std::move(z));
    return s;
  }
};

// ---------------------------------------------------------------------------
// exact set algebra

inline ConstrainedZonotope linear_map(const Eigen::MatrixXd& R,
                                      const ConstrainedZonotope& Z) {
  if (R.cols() != Z.dim()) throw DimensionMismatch("linear_map: R cols != dim");
  return ConstrainedZonotope::make(R * Z.G, R * Z.c, Z.A, Z.b);
}

inline ConstrainedZonotope shift(const ConstrainedZonotope& Z,
                                 const Eigen::VectorXd& v) {
  if (v.size() != Z.dim()) throw DimensionMismatch("shift: size mismatch");
  return ConstrainedZonotope::make(Z.G, Z.c + v, Z.A, Z.b);
}

namespace detail {
inline Eigen::MatrixXd blkdiag(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

inline Eigen::VectorXd vcat(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd v(a.size() + b.size());
  v << a, b;
  return v;
}
}  // namespace detail

inline ConstrainedZonotope minkowski_sum(const ConstrainedZonotope& Z1,
                                         const ConstrainedZonotope& Z2) {
  if (Z1.dim() != Z2.dim()) throw DimensionMismatch("minkowski_sum: dim mismatch");
  Eigen::MatrixXd G(Z1.dim(), Z1.num_generators() + Z2.num_generators());
  G << Z1.G, Z2.G;
  return ConstrainedZonotope::make(G, Z1.c + Z2.c, detail::blkdiag(Z1.A, Z2.A),
                                   detail::vcat(Z1.b, Z2.b));
}

inline ConstrainedZonotope cartesian_product(const ConstrainedZonotope& Zx,
                                             const ConstrainedZonotope& Zw) {
  return ConstrainedZonotope::make(detail::blkdiag(Zx.G, Zw.G),
                                   detail::vcat(Zx.c, Zw.c),
                                   detail::blkdiag(Zx.A, Zw.A),
                                   detail::vcat(Zx.b, Zw.b));
}

inline Zonotope cartesian_product(const Zonotope& a, const Zonotope& b) {
  Zonotope z;
  z.G = detail::blkdiag(a.G, b.G);
  z.c = detail::vcat(a.c, b.c);
  return z;
}

namespace detail {
/// Removes all-zero constraint rows (with zero rhs) and exact duplicate
/// rows. Folded intersections produce many of both.
inline void compact_constraints(Eigen::MatrixXd& A, Eigen::VectorXd& b) {
  std::vector<int> keep;
  for (int i = 0; i < A.rows(); ++i) {
    if (A.row(i).lpNorm<Eigen::Infinity>() <= 1e-14 && std::abs(b[i]) <= 1e-14)
      continue;
    bool dup = false;
    for (int k : keep)
      if (b[k] == b[i] && A.row(k) == A.row(i)) {
        dup = true;
        break;
      }
    if (!dup) keep.push_back(i);
  }
  if (static_cast<int>(keep.size()) == A.rows()) return;
  Eigen::MatrixXd A2(static_cast<int>(keep.size()), A.cols());
  Eigen::VectorXd b2(static_cast<int>(keep.size()));
  for (std::size_t r = 0; r < keep.size(); ++r) {
    A2.row(static_cast<int>(r)) = A.row(keep[r]);
    b2[static_cast<int>(r)] = b[keep[r]];
  }
  A = std::move(A2);
  b = std::move(b2);
}
}  // namespace detail

/// Intersection of two CZs whose first `shared_generators` generator
/// coordinates refer to the same latent vector. With 0 shared generators
/// this is the standard stacked-constraint CZ intersection. The result is
/// parameterized as (shared block, private block of Z1, private block of
/// Z2) and keeps Z1's output map; the appended equality rows force both
/// parameterizations to agree.
inline ConstrainedZonotope intersect_cz(const ConstrainedZonotope& Z1,
                                        const ConstrainedZonotope& Z2,
                                        int shared_generators = 0) {
  if (Z1.dim() != Z2.dim()) throw DimensionMismatch("intersect_cz: dim mismatch");
  const int s = shared_generators;
  if (s < 0 || s > Z1.num_generators() || s > Z2.num_generators())
    throw DimensionMismatch("intersect_cz: bad shared generator count");
  const int n = Z1.dim();
  const int r1 = Z1.num_generators() - s;  // private generators of Z1
  const int r2 = Z2.num_generators() - s;
  const int ng = s + r1 + r2;

  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, ng);
  G.leftCols(s + r1) = Z1.G;

  const int m1 = Z1.num_constraints(), m2 = Z2.num_constraints();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m1 + m2 + n, ng);
  Eigen::VectorXd b(m1 + m2 + n);
  if (m1 > 0) {
    A.block(0, 0, m1, s + r1) = Z1.A;
    b.head(m1) = Z1.b;
  }
  if (m2 > 0) {
    A.block(m1, 0, m2, s) = Z2.A.leftCols(s);
    A.block(m1, s + r1, m2, r2) = Z2.A.rightCols(r2);
    b.segment(m1, m2) = Z2.b;
  }
  A.block(m1 + m2, 0, n, s) = Z1.G.leftCols(s) - Z2.G.leftCols(s);
  A.block(m1 + m2, s, n, r1) = Z1.G.rightCols(r1);
  A.block(m1 + m2, s + r1, n, r2) = -Z2.G.rightCols(r2);
  b.tail(n) = Z2.c - Z1.c;

  detail::compact_constraints(A, b);
  return ConstrainedZonotope::make(G, Z1.c, A, b);
}

/// {z in Zf | R z in Y}: Zf's parameterization is kept, Y's generators are
/// appended with zero output columns, and R G_f xi - G_Y gamma = c_Y - R c_f
/// is appended as equality rows.
inline ConstrainedZonotope generalized_linear_intersection(
    const ConstrainedZonotope& Zf, const Eigen::MatrixXd& R,
    const ConstrainedZonotope& Y) {
  if (R.cols() != Zf.dim())
    throw DimensionMismatch("generalized_linear_intersection: R cols");
  if (R.rows() != Y.dim())
    throw DimensionMismatch("generalized_linear_intersection: R rows != Y dim");
  const int nf = Zf.num_generators(), ny = Y.num_generators();
  const int mf = Zf.num_constraints(), my = Y.num_constraints();
  const int nr = static_cast<int>(R.rows());

  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(Zf.dim(), nf + ny);
  G.leftCols(nf) = Zf.G;

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(mf + my + nr, nf + ny);
  Eigen::VectorXd b(mf + my + nr);
  if (mf > 0) {
    A.topLeftCorner(mf, nf) = Zf.A;
    b.head(mf) = Zf.b;
  }
  if (my > 0) {
    A.block(mf, nf, my, ny) = Y.A;
    b.segment(mf, my) = Y.b;
  }
  A.block(mf + my, 0, nr, nf) = R * Zf.G;
  A.block(mf + my, nf, nr, ny) = -Y.G;
  b.tail(nr) = Y.c - R * Zf.c;
  return ConstrainedZonotope::make(G, Zf.c, A, b);
}

/// Constraint-dropping enclosure: always a superset of the CZ.
inline Zonotope zonotope_hull(const ConstrainedZonotope& Z) {
  return Zonotope{Z.G, Z.c};
}

// ---------------------------------------------------------------------------
// LP-backed queries

namespace detail {
inline LinearProgram membership_lp(const ConstrainedZonotope& Z,
                                   const Eigen::VectorXd& z) {
  LinearProgram p = LinearProgram::make(Z.num_generators());
  const int m = Z.num_constraints(), n = Z.dim();
  p.eq_a.resize(m + n, Z.num_generators());
  p.eq_b.resize(m + n);
  if (m > 0) {
    p.eq_a.topRows(m) = Z.A;
    p.eq_b.head(m) = Z.b;
  }
  p.eq_a.bottomRows(n) = Z.G;
  p.eq_b.tail(n) = z - Z.c;
  return p;
}

/// Cheap necessary condition: the hull box of the generators.
inline bool inside_generator_box(const ConstrainedZonotope& Z,
                                 const Eigen::VectorXd& z, double tol) {
  for (int i = 0; i < Z.dim(); ++i) {
    const double r = Z.G.row(i).lpNorm<1>();
    if (std::abs(z[i] - Z.c[i]) > r + tol) return false;
  }
  return true;
}
}  // namespace detail

inline bool membership(const ConstrainedZonotope& Z, const Eigen::VectorXd& z) {
  if (z.size() != Z.dim()) throw DimensionMismatch("membership: dim mismatch");
  if (!detail::inside_generator_box(Z, z, config::lp_tolerance)) return false;
  return feasible(detail::membership_lp(Z, z)).feasible;
}

inline bool membership(const SetEnclosure& S, const Eigen::VectorXd& z) {
  if (S.members.empty()) throw EmptySetError("membership: no members");
  for (const auto& m : S.members)
    if (!membership(m, z)) return false;
  return true;
}

inline bool membership(const ZonotopeBundle& B, const Eigen::VectorXd& z) {
  if (B.members.empty()) throw EmptySetError("membership: no members");
  for (const auto& m : B.members)
    if (!membership(ConstrainedZonotope::from_zonotope(m), z)) return false;
  return true;
}

inline bool is_feasible(const ConstrainedZonotope& Z) {
  if (Z.is_unconstrained()) return true;
  LinearProgram p = LinearProgram::make(Z.num_generators());
  p.eq_a = Z.A;
  p.eq_b = Z.b;
  return feasible(p).feasible;
}

/// A feasible point of the CZ (its center when unconstrained).
inline Eigen::VectorXd feasible_point(const ConstrainedZonotope& Z) {
  if (Z.is_unconstrained()) return Z.c;
  LinearProgram p = LinearProgram::make(Z.num_generators());
  p.eq_a = Z.A;
  p.eq_b = Z.b;
  auto r = feasible(p);
  if (!r.feasible) throw EmptySetError("feasible_point: empty CZ");
  return Z.G * r.witness + Z.c;
}

/// Support function h(d) = max{<d, z> : z in Z}.
inline double support(const ConstrainedZonotope& Z, const Eigen::VectorXd& d) {
  if (d.size() != Z.dim()) throw DimensionMismatch("support: dim mismatch");
  LinearProgram p = LinearProgram::make(Z.num_generators());
  p.objective = Z.G.transpose() * d;
  if (!Z.is_unconstrained()) {
    p.eq_a = Z.A;
    p.eq_b = Z.b;
  }
  try {
    return maximize(p).value + d.dot(Z.c);
  } catch (const InfeasibleProgram&) {
    throw EmptySetError("support: empty CZ");
  }
}

/// Row-sum box of the generators: c_i +- |G|_i 1. Always a superset of the
/// CZ; the exact interval hull when the CZ is unconstrained.
inline IntervalVector generator_box(const ConstrainedZonotope& Z) {
  IntervalVector box(Z.dim());
  for (int i = 0; i < Z.dim(); ++i) {
    const double r = Z.G.row(i).lpNorm<1>();
    box[i] = Interval(Z.c[i] - r, Z.c[i] + r);
  }
  return box;
}

/// Axis-aligned interval hull of an intersection list: per axis the
/// tightest of the members' support values. Unconstrained members use
/// their generator box (exact, no LP). Throws EmptySetError if a member is
/// empty or two members have disjoint axis projections.
inline IntervalVector interval_hull(const SetEnclosure& S) {
  if (S.members.empty()) throw EmptySetError("interval_hull: no members");
  const int n = S.dim();
  IntervalVector box(n);
  std::vector<IntervalVector> boxes;
  boxes.reserve(S.members.size());
  for (const auto& m : S.members)
    boxes.push_back(m.is_unconstrained() ? generator_box(m) : IntervalVector());
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    double hi = std::numeric_limits<double>::infinity();
    double lo = -hi;
    for (std::size_t s = 0; s < S.members.size(); ++s) {
      if (boxes[s].size() > 0) {
        hi = std::min(hi, boxes[s][i].hi());
        lo = std::max(lo, boxes[s][i].lo());
        continue;
      }
      const auto& m = S.members[s];
      d[i] = 1.0;
      hi = std::min(hi, support(m, d));
      d[i] = -1.0;
      lo = std::max(lo, -support(m, d));
      d[i] = 0.0;
    }
    if (lo > hi) {
      if (lo > hi + 1e-9) throw EmptySetError("interval_hull: empty intersection");
      lo = hi = 0.5 * (lo + hi);
    }
    box[i] = Interval(lo, hi);
  }
  return box;
}

inline IntervalVector interval_hull(const ConstrainedZonotope& Z) {
  return interval_hull(SetEnclosure::single(Z));
}

/// Box bound on the generator coefficients of a CZ: every xi with
/// A xi = b and |xi|_inf <= 1 satisfies lbox <= xi <= ubox. Coordinates
/// pinned by the constraints (zero rows of I - pinv(A) A) collapse to their
/// pseudoinverse solution; free coordinates saturate at +-1, so the
/// "large kappa" in the underlying bound never needs materializing.
inline IntervalVector constraint_interval_bound(const Eigen::MatrixXd& A,
                                                const Eigen::VectorXd& b,
                                                int num_generators) {
  if (A.rows() == 0) return IntervalVector::unit_box(num_generators);
  if (A.cols() != num_generators)
    throw DimensionMismatch("constraint_interval_bound: A cols != ng");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double cutoff = std::max(A.rows(), A.cols()) *
                        std::numeric_limits<double>::epsilon() *
                        (svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0);
  Eigen::VectorXd sinv = svd.singularValues();
  for (int i = 0; i < sinv.size(); ++i)
    sinv[i] = sinv[i] > cutoff ? 1.0 / sinv[i] : 0.0;
  const Eigen::MatrixXd pinv =
      svd.matrixV() * sinv.asDiagonal() * svd.matrixU().transpose();
  const Eigen::VectorXd xi0 = pinv * b;
  const Eigen::MatrixXd residual =
      Eigen::MatrixXd::Identity(num_generators, num_generators) - pinv * A;

  IntervalVector box(num_generators);
  for (int i = 0; i < num_generators; ++i) {
    const bool free_coord =
        residual.row(i).lpNorm<Eigen::Infinity>() > config::rowsupp_tolerance;
    if (free_coord) {
      box[i] = Interval(-1.0, 1.0);
    } else {
      double lo = std::max(-1.0, xi0[i]);
      double hi = std::min(1.0, xi0[i]);
      if (lo > hi) {
        if (lo > hi + 1e-9)
          throw EmptySetError("constraint_interval_bound: pinned outside box");
        lo = hi = 0.5 * (lo + hi);
      }
      box[i] = Interval(lo, hi);
    }
  }
  return box;
}

/// Interval Gauss-Seidel sweeps over A xi = b: coordinate j is intersected
/// with (b_i - sum_{k != j} A_ik xi_k) / A_ij for every row. Sound (every
/// feasible xi stays inside) and propagates coupled constraints into the
/// box where the pseudoinverse bound cannot. Throws EmptySetError when a
/// coordinate empties.
inline IntervalVector tighten_latent_box(const Eigen::MatrixXd& A,
                                         const Eigen::VectorXd& b,
                                         IntervalVector box, int sweeps = 3) {
  for (int pass = 0; pass < sweeps; ++pass) {
    for (int i = 0; i < A.rows(); ++i) {
      for (int j = 0; j < A.cols(); ++j) {
        const double aij = A(i, j);
        if (std::abs(aij) < 1e-12) continue;
        Interval rest = Interval::point(b[i]);
        for (int k = 0; k < A.cols(); ++k)
          if (k != j) rest = rest - A(i, k) * box[k];
        const Interval q = rest / Interval::point(aij);
        Interval cand = q.intersect(box[j]);
        if (cand.is_empty()) {
          // tolerate fp-thin gaps at active constraints
          cand = Interval(q.lo() - 1e-12, q.hi() + 1e-12).intersect(box[j]);
          if (cand.is_empty())
            throw EmptySetError("tighten_latent_box: infeasible constraints");
        }
        box[j] = cand;
      }
    }
  }
  return box;
}

// ---------------------------------------------------------------------------
// Monte-Carlo volume and plotting

struct VolumeEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Hit-ratio times interval-hull volume, sampled in fixed-size blocks with
/// per-block RNG streams so the result depends only on (seed, samples).
inline VolumeEstimate mc_volume(const SetEnclosure& S, long samples,
                                std::uint64_t seed) {
  if (samples < 1) throw Error("mc_volume: samples must be >= 1");
  IntervalVector hull = interval_hull(S);  // throws EmptySetError when empty
  const int n = hull.size();
  const Eigen::VectorXd lo = hull.lo(), diam = hull.diam();
  double vol_hull = 1.0;
  for (int i = 0; i < n; ++i) vol_hull *= diam[i];
  if (vol_hull <= 0.0) return {0.0, 0.0};

  constexpr long kBlock = 4096;
  long hits = 0;
  Eigen::VectorXd z(n);
  for (long b0 = 0; b0 < samples; b0 += kBlock) {
    RngStream rng(seed, {0x766f6cULL, static_cast<std::uint64_t>(b0 / kBlock)});
    const long hi = std::min(samples, b0 + kBlock);
    for (long s = b0; s < hi; ++s) {
      for (int i = 0; i < n; ++i) z[i] = lo[i] + diam[i] * rng.uniform();
      if (membership(S, z)) ++hits;
    }
  }
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  VolumeEstimate e;
  e.value = p * vol_hull;
  e.std_error = vol_hull * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return e;
}

/// Outer polygon of the (i, j) coordinate projection from support-function
/// sampling in `directions` equally spaced directions. Implemented as the
/// exact vertex list of the halfspace intersection (bounding box clipped by
/// each supporting halfspace), so the polygon is a guaranteed superset of
/// the true projection.
inline std::vector<Eigen::Vector2d> project_2d(const SetEnclosure& S, int axis_i,
                                               int axis_j, int directions) {
  if (directions < 3) throw Error("project_2d: need at least 3 directions");
  const int n = S.dim();
  if (axis_i < 0 || axis_i >= n || axis_j < 0 || axis_j >= n || axis_i == axis_j)
    throw DimensionMismatch("project_2d: bad axes");

  auto support_min = [&](double dx, double dy) {
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    d[axis_i] = dx;
    d[axis_j] = dy;
    double h = std::numeric_limits<double>::infinity();
    for (const auto& m : S.members) h = std::min(h, support(m, d));
    return h;
  };

  const double pad = 1e-12;
  const double xmax = support_min(1, 0) + pad, xmin = -support_min(-1, 0) - pad;
  const double ymax = support_min(0, 1) + pad, ymin = -support_min(0, -1) - pad;
  std::vector<Eigen::Vector2d> poly = {{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}};

  for (int t = 0; t < directions; ++t) {
    const double ang = 2.0 * M_PI * t / directions;
    const Eigen::Vector2d d(std::cos(ang), std::sin(ang));
    const double h = support_min(d[0], d[1]) + pad;
    // clip polygon against <d, v> <= h
    std::vector<Eigen::Vector2d> out;
    const std::size_t k = poly.size();
    for (std::size_t a = 0; a < k; ++a) {
      const Eigen::Vector2d& p = poly[a];
      const Eigen::Vector2d& q = poly[(a + 1) % k];
      const double dp = d.dot(p) - h, dq = d.dot(q) - h;
      if (dp <= 0) out.push_back(p);
      if ((dp < 0 && dq > 0) || (dp > 0 && dq < 0))
        out.push_back(p + (dp / (dp - dq)) * (q - p));
    }
    poly = std::move(out);
    if (poly.empty()) break;  // numerically empty projection
  }
  // drop consecutive duplicates (degenerate sets)
  std::vector<Eigen::Vector2d> cleaned;
  for (const auto& v : poly)
    if (cleaned.empty() || (cleaned.back() - v).norm() > 1e-12) cleaned.push_back(v);
  if (cleaned.size() > 1 && (cleaned.front() - cleaned.back()).norm() <= 1e-12)
    cleaned.pop_back();
  return cleaned;
}

/// Exact CZ form of a bounded H-polytope: interval-hull generators plus one
/// slack generator per inequality row. Boundedness is verified by support
/// LPs over a large working box; polytopes must fit well inside it.
inline ConstrainedZonotope polytope_to_cz(const HPolytope& P) {
  const int n = static_cast<int>(P.Ap.cols());
  const int m = static_cast<int>(P.Ap.rows());
  if (P.bp.size() != m) throw DimensionMismatch("polytope_to_cz: bp size");
  constexpr double kBig = 1e6, kLimit = 1e5;

  LinearProgram p = LinearProgram::make(n);
  p.ineq_a = P.Ap;
  p.ineq_b = P.bp;
  p.bounds = IntervalVector::from_bounds(Eigen::VectorXd::Constant(n, -kBig),
                                         Eigen::VectorXd::Constant(n, kBig));
  Eigen::VectorXd lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    p.objective.setZero();
    p.objective[i] = 1.0;
    OptimumResult up;
    try {
      up = maximize(p);
    } catch (const InfeasibleProgram&) {
      throw EmptySetError("polytope_to_cz: empty polytope");
    }
    p.objective[i] = -1.0;
    const OptimumResult dn = maximize(p);
    if (std::abs(up.value) > kLimit || std::abs(dn.value) > kLimit)
      throw UnboundedPolytope("polytope_to_cz: polytope is unbounded");
    hi[i] = up.value;
    lo[i] = -dn.value;
  }

  const Eigen::VectorXd c0 = 0.5 * (lo + hi);
  const Eigen::VectorXd rad = 0.5 * (hi - lo);
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n + m);
  G.leftCols(n) = rad.asDiagonal();

  // row i: Ap z + s_i = bp_i with s_i in [0, bp_i - min_box Ap z]
  Eigen::MatrixXd A(m, n + m);
  Eigen::VectorXd b(m);
  A.setZero();
  for (int i = 0; i < m; ++i) {
    const Eigen::VectorXd a = P.Ap.row(i).transpose();
    const double sigma_lo = a.dot(c0) - rad.cwiseProduct(a.cwiseAbs()).sum();
    const double slack_rad = std::max(0.0, 0.5 * (P.bp[i] - sigma_lo));
    A.row(i).head(n) = a.transpose() * G.leftCols(n);
    A(i, n + i) = slack_rad;
    b[i] = P.bp[i] - a.dot(c0) - slack_rad;
  }
  return ConstrainedZonotope::make(G, c0, A, b);
}

// ---------------------------------------------------------------------------
// intersection folding and member management

/// Folds an intersection list into one CZ whose solution set equals the
/// intersection. `shared_generators` refers to a common leading latent
/// block in every member (0 when members are independent).
inline ConstrainedZonotope fold_intersection(const SetEnclosure& S,
                                             int shared_generators = 0) {
  if (S.members.empty()) throw EmptySetError("fold_intersection: no members");
  ConstrainedZonotope acc = S.members.front();
  for (std::size_t i = 1; i < S.members.size(); ++i) {
    // the shared block stays the leading block of the accumulator
    acc = intersect_cz(acc, S.members[i], shared_generators);
  }
  return acc;
}

/// Exact re-parameterization of a constrained zonotope as
/// (interval-hull box) intersect (original CZ). The set is unchanged, but
/// the leading generator block becomes the LP-tight hull box, so the
/// generator-space image of the new parameterization equals the true hull
/// instead of the accumulated generator box. Keeps lifted recursions from
/// leaving the dynamics' domain as constraints pile up.
inline ConstrainedZonotope rebase_on_hull(const ConstrainedZonotope& Z,
                                          IntervalVector* hull_out = nullptr) {
  if (Z.is_unconstrained()) {
    if (hull_out) *hull_out = generator_box(Z);  // exact for zonotopes
    return Z;
  }
  const IntervalVector hull = interval_hull(Z);
  if (hull_out) *hull_out = hull;
  return intersect_cz(ConstrainedZonotope::box(hull.lo(), hull.hi()), Z, 0);
}

/// Keeps the `max_members` members with the smallest interval-hull volume.
/// Dropping members can only enlarge the represented set.
inline SetEnclosure cap_members(const SetEnclosure& S, int max_members) {
  if (max_members <= 0 ||
      static_cast<int>(S.members.size()) <= max_members)
    return S;
  // scored by the generator-box volume: exact for unconstrained members
  // and a cheap sound proxy otherwise
  std::vector<std::pair<double, int>> scored;
  scored.reserve(S.members.size());
  for (std::size_t i = 0; i < S.members.size(); ++i) {
    const IntervalVector h = generator_box(S.members[i]);
    double logvol = 0.0;
    for (int d = 0; d < h.size(); ++d)
      logvol += std::log(std::max(h[d].diam(), 1e-300));
    scored.emplace_back(logvol, static_cast<int>(i));
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SetEnclosure out;
  std::vector<int> chosen;
  for (int i = 0; i < max_members; ++i) chosen.push_back(scored[static_cast<std::size_t>(i)].second);
  std::sort(chosen.begin(), chosen.end());
  for (int i : chosen) out.members.push_back(S.members[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace zonest

#endif  // ZONEST_SETS_HPP_
