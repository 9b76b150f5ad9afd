#ifndef ZONEST_FILTER_HPP_
#define ZONEST_FILTER_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zonest/errors.hpp"
#include "zonest/interval.hpp"
#include "zonest/mixmono.hpp"
#include "zonest/model.hpp"
#include "zonest/sets.hpp"

namespace zonest {

enum class MethodId { rrsr, d_rrsr, d_zb, d_cz, comb };

inline std::string to_string(MethodId m) {
  switch (m) {
    case MethodId::rrsr: return "RRSR";
    case MethodId::d_rrsr: return "D-RRSR";
    case MethodId::d_zb: return "D-ZB";
    case MethodId::d_cz: return "D-CZ";
    case MethodId::comb: return "COMB";
  }
  return "?";
}

inline MethodId parse_method(const std::string& s) {
  if (s == "RRSR") return MethodId::rrsr;
  if (s == "D-RRSR") return MethodId::d_rrsr;
  if (s == "D-ZB") return MethodId::d_zb;
  if (s == "D-CZ") return MethodId::d_cz;
  if (s == "COMB") return MethodId::comb;
  throw ParseError("unknown method: " + s);
}

enum class JacSource { interval_extension, decomposition };

enum class StepStatus { ok, empty };

struct StepRecord {
  int k = 0;
  MethodId method = MethodId::rrsr;
  SetEnclosure propagated;
  SetEnclosure updated;
  double wall_time_s = 0.0;
  double volume = 0.0;
  double volume_std_error = 0.0;
  StepStatus status = StepStatus::ok;
};

// ---------------------------------------------------------------------------
// mean-value-extension building blocks

/// Enclosure of {J x | J in J, x in X}: mid(J) X plus a diagonal box term
/// absorbing the interval remainder against a zonotope hull of X.
inline ConstrainedZonotope cz_bound_product(const IntervalMatrix& J,
                                            const ConstrainedZonotope& X) {
  if (J.cols() != X.dim())
    throw DimensionMismatch("cz_bound_product: J cols != dim(X)");
  const int n = J.rows();
  const Zonotope hull = zonotope_hull(X);
  const Eigen::MatrixXd diam = J.diam();

  Eigen::VectorXd p(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < J.cols(); ++k)
      acc += diam(i, k) * (std::abs(hull.c[k]) + hull.G.row(k).lpNorm<1>());
    p[i] = 0.5 * acc;
  }

  const Eigen::MatrixXd mid = J.mid();
  Eigen::MatrixXd G(n, X.num_generators() + n);
  G << mid * X.G, Eigen::MatrixXd(p.asDiagonal());
  Eigen::MatrixXd A(X.num_constraints(), X.num_generators() + n);
  A << X.A, Eigen::MatrixXd::Zero(X.num_constraints(), n);
  return ConstrainedZonotope::make(G, mid * X.c, A, X.b);
}

namespace detail {

inline IntervalVector concat(const IntervalVector& a, const IntervalVector& b) {
  IntervalVector r(a.size() + b.size());
  for (int i = 0; i < a.size(); ++i) r[i] = a[i];
  for (int i = 0; i < b.size(); ++i) r[a.size() + i] = b[i];
  return r;
}

/// Box enclosure of f(h, W): natural extension over {h} x hull(W)
/// intersected with the remainder-form decomposition bound.
inline ConstrainedZonotope enclose_f_at(const SystemModel& model,
                                        const Eigen::VectorXd& h,
                                        const ConstrainedZonotope& W) {
  if (model.nw == 0)
    return ConstrainedZonotope::point(eval_point(model.f, h));
  const IntervalVector w_box = interval_hull(W);
  Eigen::MatrixXd Gz = Eigen::MatrixXd::Zero(model.nz(), model.nw);
  Gz.bottomRows(model.nw).setIdentity();
  Eigen::VectorXd cz(model.nz());
  cz << h, Eigen::VectorXd::Zero(model.nw);

  const IntervalVector image = affine_image_box(cz, Gz, w_box);
  IntervalVector natural = eval_box(model.f, image);

  AffineImage phi(model.f, model.jac_f, Gz, cz);
  const IntervalVector dec = decomposition_range(
      [&phi](const Eigen::VectorXd& w) { return phi.eval(w); },
      phi.jacobian_bounds(w_box), w_box);
  Eigen::VectorXd lo(model.nx), hi(model.nx);
  for (int i = 0; i < model.nx; ++i) {
    Interval r = natural[i].intersect(dec[i]);
    if (r.is_empty()) r = natural[i];
    lo[i] = r.lo();
    hi[i] = r.hi();
  }
  return ConstrainedZonotope::box(lo, hi);
}

enum class Anchor { propagation_h, update_x0 };

/// Picks a point of X: an explicit choice must be a member, otherwise the
/// center (or an LP witness when the center is cut off by constraints).
inline Eigen::VectorXd anchor_point(const ConstrainedZonotope& X,
                                    const std::optional<Eigen::VectorXd>& chosen,
                                    Anchor kind) {
  if (chosen) {
    if (!membership(X, *chosen)) {
      if (kind == Anchor::propagation_h)
        throw HNotInX("rrsr_propagate: h not in X");
      throw X0NotInPrior("rrsr_update: x0 not in prior");
    }
    return *chosen;
  }
  if (X.is_unconstrained() || membership(X, X.c)) return X.c;
  return feasible_point(X);
}

}  // namespace detail

/// Mean-value-extension propagation: f(X, W) is enclosed by
/// Z + mid(J)(X - h) + P B with Z a box around f(h, W) and J an interval
/// matrix bounding the state Jacobian over hull(X) x hull(W). The Jacobian
/// bounds come either from the natural interval extension or from the
/// decomposition-based refinement.
inline ConstrainedZonotope rrsr_propagate(
    const SystemModel& model, const ConstrainedZonotope& X,
    const ConstrainedZonotope& W,
    const std::optional<Eigen::VectorXd>& h_choice = std::nullopt,
    JacSource source = JacSource::interval_extension,
    const std::optional<IntervalVector>& x_hull = std::nullopt) {
  if (X.dim() != model.nx) throw DimensionMismatch("rrsr_propagate: dim(X)");
  const Eigen::VectorXd h = detail::anchor_point(X, h_choice, detail::Anchor::propagation_h);

  IntervalVector z_box =
      detail::concat(x_hull ? *x_hull : interval_hull(X), interval_hull(W));
  IntervalMatrix J_full =
      source == JacSource::interval_extension
          ? jacobian_bounds_over_box(model.jac_f, z_box)
          : bound_jacobian_via_decomposition(model.jac_f, model.hess_f, z_box);
  IntervalMatrix J(model.nx, model.nx);
  for (int i = 0; i < model.nx; ++i)
    for (int j = 0; j < model.nx; ++j) J(i, j) = J_full(i, j);

  const ConstrainedZonotope Z = detail::enclose_f_at(model, h, W);
  return minkowski_sum(Z, cz_bound_product(J, shift(X, -h)));
}

/// Decomposition-based propagation of a zonotope bundle: every member is
/// lifted to its generator space, split into a JSS part (bounded at its
/// corners) and a linear remainder H xi, and re-emitted as a zonotope
/// [H  1/2 diag(ghi - glo)] around the remainder midpoint. One member per
/// (bundle member, H selection); intersection semantics.
///
/// A member whose image leaves the dynamics' interval domain is skipped:
/// every emitted member already encloses f(Z) on its own, so dropping some
/// only loosens the intersection. The error is rethrown if no member
/// survives.
inline SetEnclosure dzb_propagate(const SystemModel& model,
                                  const ZonotopeBundle& Z,
                                  const FamilySpec& family = FamilySpec::canonical()) {
  if (Z.members.empty()) throw EmptySetError("dzb_propagate: empty bundle");
  SetEnclosure out;
  std::optional<IntervalDomainError> last_error;
  for (const auto& member : Z.members) {
    if (member.dim() != model.nz())
      throw DimensionMismatch("dzb_propagate: member dim != nx + nw");
    try {
      AffineImage f_tilde(model.f, model.jac_f, member.G, member.c);
      const IntervalVector box = IntervalVector::unit_box(member.num_generators());
      const IntervalMatrix J = f_tilde.jacobian_bounds(box);
      for (const auto& sel : build_h_family(J.lo(), J.hi(), family)) {
        auto [g_lo, g_hi] = jss_remainder_bounds(
            [&f_tilde](const Eigen::VectorXd& xi) { return f_tilde.eval(xi); },
            sel, box);
        Eigen::MatrixXd G(model.nx, member.num_generators() + model.nx);
        G << sel.H, Eigen::MatrixXd((0.5 * (g_hi - g_lo)).asDiagonal());
        out.members.push_back(ConstrainedZonotope::make(
            G, 0.5 * (g_hi + g_lo), Eigen::MatrixXd(0, G.cols()), Eigen::VectorXd(0)));
      }
    } catch (const IntervalDomainError& e) {
      last_error = e;
    }
  }
  if (out.members.empty() && last_error) throw *last_error;
  return out;
}

/// Decomposition-based propagation of a constrained zonotope. The latent
/// box is first tightened by the constraint information (pseudoinverse
/// bound), the JSS remainder is bounded over that box, and each emitted
/// member keeps the original constraints on the shared xi block. Members
/// share the leading xi block; fold with fold_intersection(.., ng) to get
/// a single CZ.
inline SetEnclosure dcz_propagate(const SystemModel& model,
                                  const ConstrainedZonotope& Z,
                                  const FamilySpec& family = FamilySpec::canonical()) {
  if (Z.dim() != model.nz())
    throw DimensionMismatch("dcz_propagate: dim(Z) != nx + nw");
  const int ng = Z.num_generators();
  const IntervalVector xi_box =
      tighten_latent_box(Z.A, Z.b, constraint_interval_bound(Z.A, Z.b, ng));
  AffineImage f_tilde(model.f, model.jac_f, Z.G, Z.c);
  const IntervalMatrix J = f_tilde.jacobian_bounds(xi_box);

  SetEnclosure out;
  for (const auto& sel : build_h_family(J.lo(), J.hi(), family)) {
    auto [g_lo, g_hi] = jss_remainder_bounds(
        [&f_tilde](const Eigen::VectorXd& xi) { return f_tilde.eval(xi); },
        sel, xi_box);
    Eigen::MatrixXd G(model.nx, ng + model.nx);
    G << sel.H, Eigen::MatrixXd((0.5 * (g_hi - g_lo)).asDiagonal());
    Eigen::MatrixXd A(Z.num_constraints(), ng + model.nx);
    A << Z.A, Eigen::MatrixXd::Zero(Z.num_constraints(), model.nx);
    out.members.push_back(
        ConstrainedZonotope::make(G, 0.5 * (g_hi + g_lo), A, Z.b));
  }
  return out;
}

/// Intersection of the bundle route and the CZ route.
inline SetEnclosure combined_propagate(const SystemModel& model,
                                       const ZonotopeBundle& Zb,
                                       const ConstrainedZonotope& Zc,
                                       const FamilySpec& family = FamilySpec::canonical()) {
  SetEnclosure out = dzb_propagate(model, Zb, family);
  SetEnclosure cz = dcz_propagate(model, Zc, family);
  out.members.insert(out.members.end(), cz.members.begin(), cz.members.end());
  return out;
}

/// Decomposition-based update with zonotope priors and a bundle-valued
/// observation set: emits one CZ per (prior member, observation member,
/// remainder selection). The emitted set keeps the prior parameterization
/// and encodes mu-consistency as equality constraints over the lifted
/// observation function.
inline SetEnclosure dzb_update(const SystemModel& model, const SetEnclosure& prior,
                               const ZonotopeBundle& Y,
                               const FamilySpec& family = FamilySpec::canonical()) {
  if (prior.members.empty() || Y.members.empty())
    throw EmptySetError("dzb_update: empty inputs");
  SetEnclosure out;
  std::optional<IntervalDomainError> last_error;
  for (const auto& prior_member : prior.members) {
    const Zonotope zr = zonotope_hull(prior_member);
    const int nr = zr.num_generators();
    try {
      AffineImage mu_r(model.mu, model.jac_mu, zr.G, zr.c);
      const IntervalVector box = IntervalVector::unit_box(nr);
      const IntervalMatrix J = mu_r.jacobian_bounds(box);
      for (const auto& sel : build_h_family(J.lo(), J.hi(), family)) {
        auto [p_lo, p_hi] = jss_remainder_bounds(
            [&mu_r](const Eigen::VectorXd& a) { return mu_r.eval(a); }, sel, box);
        for (const auto& yt : Y.members) {
          const int nt = yt.num_generators();
          Eigen::MatrixXd G = Eigen::MatrixXd::Zero(model.nx, nr + nt + model.nmu);
          G.leftCols(nr) = zr.G;
          Eigen::MatrixXd A(model.nmu, nr + nt + model.nmu);
          A << sel.H, -yt.G, Eigen::MatrixXd((0.5 * (p_hi - p_lo)).asDiagonal());
          Eigen::VectorXd b = yt.c - 0.5 * (p_hi + p_lo);
          out.members.push_back(ConstrainedZonotope::make(G, zr.c, A, b));
        }
      }
    } catch (const IntervalDomainError& e) {
      // this prior member's hull leaves mu's interval domain; its siblings
      // still enclose the intersection on their own
      last_error = e;
    }
  }
  if (out.members.empty() && last_error) throw *last_error;
  return out;
}

/// Decomposition-based update with CZ prior and CZ observation set. The
/// lifted observation lambda(beta) = mu(c_f + G_f beta) is bounded over
/// the constraint-tightened latent box. Members share the (beta, gamma)
/// prefix; fold with fold_intersection(.., ng_f + ng_y).
inline SetEnclosure dcz_update(const SystemModel& model,
                               const ConstrainedZonotope& prior,
                               const ConstrainedZonotope& Y,
                               const FamilySpec& family = FamilySpec::canonical()) {
  if (prior.dim() != model.nx) throw DimensionMismatch("dcz_update: prior dim");
  if (Y.dim() != model.nmu) throw DimensionMismatch("dcz_update: Y dim");
  const int nf = prior.num_generators(), ny = Y.num_generators();
  const int mf = prior.num_constraints(), my = Y.num_constraints();
  const IntervalVector beta_box = tighten_latent_box(
      prior.A, prior.b, constraint_interval_bound(prior.A, prior.b, nf));
  AffineImage lambda(model.mu, model.jac_mu, prior.G, prior.c);
  const IntervalMatrix J = lambda.jacobian_bounds(beta_box);

  SetEnclosure out;
  for (const auto& sel : build_h_family(J.lo(), J.hi(), family)) {
    auto [v_lo, v_hi] = jss_remainder_bounds(
        [&lambda](const Eigen::VectorXd& beta) { return lambda.eval(beta); },
        sel, beta_box);
    const int cols = nf + ny + model.nmu;
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(model.nx, cols);
    G.leftCols(nf) = prior.G;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(mf + my + model.nmu, cols);
    Eigen::VectorXd b(mf + my + model.nmu);
    if (mf > 0) {
      A.topLeftCorner(mf, nf) = prior.A;
      b.head(mf) = prior.b;
    }
    if (my > 0) {
      A.block(mf, nf, my, ny) = Y.A;
      b.segment(mf, my) = Y.b;
    }
    A.block(mf + my, 0, model.nmu, nf) = sel.H;
    A.block(mf + my, nf, model.nmu, ny) = -Y.G;
    A.block(mf + my, nf + ny, model.nmu, model.nmu) =
        Eigen::MatrixXd((0.5 * (v_hi - v_lo)).asDiagonal());
    b.tail(model.nmu) = Y.c - 0.5 * (v_hi + v_lo);
    out.members.push_back(ConstrainedZonotope::make(G, prior.c, A, b));
  }
  return out;
}

/// Mean-value-extension update for a nonlinear observation: mu(prior) is
/// enclosed by mu(x0) + mid(J)(prior - x0) + (interval remainder), the
/// remainder absorbed by a Prop-2 style diagonal, and consistency with Y
/// encoded as equality constraints.
inline ConstrainedZonotope rrsr_update(
    const SystemModel& model, const ConstrainedZonotope& prior,
    const ConstrainedZonotope& Y,
    const std::optional<Eigen::VectorXd>& x0_choice = std::nullopt) {
  if (prior.dim() != model.nx) throw DimensionMismatch("rrsr_update: prior dim");
  if (Y.dim() != model.nmu) throw DimensionMismatch("rrsr_update: Y dim");
  const Eigen::VectorXd x0 = detail::anchor_point(prior, x0_choice, detail::Anchor::update_x0);

  // generator box: a standard hull choice for the Jacobian domain
  const IntervalVector hull = generator_box(prior);
  const IntervalMatrix J = jacobian_bounds_over_box(model.jac_mu, hull);
  const Eigen::MatrixXd mid = J.mid();
  const Eigen::MatrixXd diam = J.diam();

  // Prop-2 diagonal against the shifted hull zonotope {G_f, c_f - x0}
  const Zonotope hull_z = zonotope_hull(shift(prior, -x0));
  Eigen::VectorXd p(model.nmu);
  for (int i = 0; i < model.nmu; ++i) {
    double acc = 0.0;
    for (int k = 0; k < model.nx; ++k)
      acc += diam(i, k) * (std::abs(hull_z.c[k]) + hull_z.G.row(k).lpNorm<1>());
    p[i] = 0.5 * acc;
  }

  const int nf = prior.num_generators(), ny = Y.num_generators();
  const int nR = nf + model.nmu;  // independent copy of beta plus the P block
  const int mf = prior.num_constraints(), my = Y.num_constraints();
  const int cols = nf + ny + nR;

  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(model.nx, cols);
  G.leftCols(nf) = prior.G;

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(model.nmu + mf + my + mf, cols);
  Eigen::VectorXd b(model.nmu + mf + my + mf);
  int r0 = 0;
  A.block(r0, 0, model.nmu, nf) = mid * prior.G;
  A.block(r0, nf, model.nmu, ny) = -Y.G;
  A.block(r0, nf + ny + nf, model.nmu, model.nmu) = Eigen::MatrixXd(p.asDiagonal());
  b.segment(r0, model.nmu) =
      Y.c - eval_point(model.mu, x0) + mid * (x0 - prior.c);
  r0 += model.nmu;
  if (mf > 0) {
    A.block(r0, 0, mf, nf) = prior.A;
    b.segment(r0, mf) = prior.b;
    // the remainder enclosure reuses the prior's constraint structure
    A.block(r0 + mf + my, nf + ny, mf, nf) = prior.A;
    b.segment(r0 + mf + my, mf) = prior.b;
  }
  if (my > 0) {
    A.block(r0 + mf, nf, my, ny) = Y.A;
    b.segment(r0 + mf, my) = Y.b;
  }
  return ConstrainedZonotope::make(G, prior.c, A, b);
}

// ---------------------------------------------------------------------------
// one estimation step

struct StepConfig {
  FamilySpec family = FamilySpec::canonical();
  int max_members = 0;           // 0 = unlimited
  long volume_samples = 0;       // 0 = skip volume estimation
  std::uint64_t volume_seed = 0;
  std::optional<Eigen::VectorXd> anchor;  // h / x0 override
};

namespace detail {

struct PropUpdate {
  SetEnclosure propagated;
  SetEnclosure updated;
};

inline PropUpdate run_base_method(MethodId method, const SystemModel& model,
                                  const SetEnclosure& prev,
                                  const ConstrainedZonotope& W,
                                  const SetEnclosure& Y, const StepConfig& cfg) {
  PropUpdate r;
  switch (method) {
    case MethodId::rrsr:
    case MethodId::d_rrsr: {
      const JacSource source = method == MethodId::rrsr
                                   ? JacSource::interval_extension
                                   : JacSource::decomposition;
      IntervalVector x_hull;
      const ConstrainedZonotope X = rebase_on_hull(fold_intersection(prev), &x_hull);
      const ConstrainedZonotope prop =
          rrsr_propagate(model, X, W, cfg.anchor, source, x_hull);
      r.propagated = SetEnclosure::single(prop);
      const ConstrainedZonotope y_cz = fold_intersection(Y);
      if (model.mu_linear) {
        const ConstrainedZonotope y_shift = shift(y_cz, -model.mu_offset);
        r.updated = SetEnclosure::single(
            generalized_linear_intersection(prop, model.mu_matrix, y_shift));
      } else {
        r.updated = SetEnclosure::single(
            rrsr_update(model, prop, y_cz, cfg.anchor));
      }
      break;
    }
    case MethodId::d_zb: {
      // bundle from the member hulls, re-normalized with the interval hull
      // of the whole intersection: the box member keeps the image domains
      // bounded even when individual member hulls (constraints dropped)
      // have grown loose
      ZonotopeBundle Z;
      const Zonotope w_hull = zonotope_hull(W);
      for (const auto& m : prev.members)
        Z.members.push_back(cartesian_product(zonotope_hull(m), w_hull));
      if (prev.members.size() > 1 || !prev.members.front().is_unconstrained()) {
        const IntervalVector hull = interval_hull(prev);
        Z.members.push_back(cartesian_product(
            Zonotope::box(hull.lo(), hull.hi()), w_hull));
      }
      r.propagated = cap_members(dzb_propagate(model, Z, cfg.family), cfg.max_members);
      ZonotopeBundle yb;
      for (const auto& m : Y.members) yb.members.push_back(zonotope_hull(m));
      r.updated = cap_members(dzb_update(model, r.propagated, yb, cfg.family),
                              cfg.max_members);
      break;
    }
    case MethodId::d_cz: {
      const ConstrainedZonotope Z =
          cartesian_product(rebase_on_hull(fold_intersection(prev)), W);
      const SetEnclosure prop_list = dcz_propagate(model, Z, cfg.family);
      const ConstrainedZonotope prop =
          fold_intersection(prop_list, Z.num_generators());
      r.propagated = SetEnclosure::single(prop);
      const ConstrainedZonotope y_cz = fold_intersection(Y);
      const SetEnclosure upd_list = dcz_update(model, prop, y_cz, cfg.family);
      r.updated = SetEnclosure::single(fold_intersection(
          upd_list, prop.num_generators() + y_cz.num_generators()));
      break;
    }
    case MethodId::comb: {
      for (MethodId base : {MethodId::rrsr, MethodId::d_rrsr, MethodId::d_zb,
                            MethodId::d_cz}) {
        PropUpdate part = run_base_method(base, model, prev, W, Y, cfg);
        r.propagated.members.insert(r.propagated.members.end(),
                                    part.propagated.members.begin(),
                                    part.propagated.members.end());
        r.updated.members.insert(r.updated.members.end(),
                                 part.updated.members.begin(),
                                 part.updated.members.end());
      }
      break;
    }
  }
  return r;
}

/// Member-level emptiness; an empty intersection of individually feasible
/// members is caught later by interval_hull where it matters (volumes).
inline bool enclosure_empty(const SetEnclosure& S) {
  for (const auto& m : S.members)
    if (!is_feasible(m)) return true;
  return false;
}

}  // namespace detail

/// One propagation + update cycle of a single method. An empty updated set
/// (inconsistent measurement under approximation error) is flagged in the
/// status, never thrown; the record keeps the previous enclosure so a
/// recursion can continue. COMB concatenates the member lists of all four
/// base methods run from the same prior.
inline StepRecord estimator_step(MethodId method, const SystemModel& model,
                                 const SetEnclosure& prev,
                                 const ConstrainedZonotope& W,
                                 const SetEnclosure& Y,
                                 const StepConfig& cfg = StepConfig{}) {
  StepRecord rec;
  rec.method = method;
  const auto t0 = std::chrono::steady_clock::now();
  bool empty = false;
  try {
    detail::PropUpdate pu = detail::run_base_method(method, model, prev, W, Y, cfg);
    rec.propagated = std::move(pu.propagated);
    rec.updated = std::move(pu.updated);
    empty = detail::enclosure_empty(rec.updated);
  } catch (const EmptySetError&) {
    rec.propagated = prev;
    rec.updated = prev;
    empty = true;
  }
  rec.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rec.status = empty ? StepStatus::empty : StepStatus::ok;
  if (!empty && cfg.volume_samples > 0) {
    try {
      const VolumeEstimate v =
          mc_volume(rec.updated, cfg.volume_samples, cfg.volume_seed);
      rec.volume = v.value;
      rec.volume_std_error = v.std_error;
    } catch (const EmptySetError&) {
      rec.status = StepStatus::empty;
    }
  }
  return rec;
}

}  // namespace zonest

#endif  // ZONEST_FILTER_HPP_
