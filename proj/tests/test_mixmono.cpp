#include <catch_amalgamated.hpp>

#include "zonest/mixmono.hpp"
#include "zonest/rng.hpp"

using namespace zonest;

namespace {

Eigen::MatrixXd scalar(double v) {
  Eigen::MatrixXd m(1, 1);
  m << v;
  return m;
}

std::vector<double> family_values(const std::vector<DecompositionSelection>& fam) {
  std::vector<double> v;
  for (const auto& s : fam) v.push_back(s.H(0, 0));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("canonical family for scalar Jacobian bounds") {
  CHECK(family_values(build_h_family(scalar(3), scalar(3))) ==
        std::vector<double>{0.0, 3.0});
  CHECK(family_values(build_h_family(scalar(-2), scalar(2))) ==
        std::vector<double>{-2.0, 2.0});
  CHECK(family_values(build_h_family(scalar(0), scalar(1))) ==
        std::vector<double>{0.0, 1.0});
}

TEST_CASE("midpoint-sign member recovers a constant Jacobian") {
  Eigen::MatrixXd J(1, 2);
  J << 2, -3;  // mixed signs across entries
  const auto fam = build_h_family(J, J);
  bool found = false;
  for (const auto& s : fam) found = found || s.H == J;
  CHECK(found);
}

TEST_CASE("every family member is built from the clipped bounds") {
  RngStream rng(5);
  for (int t = 0; t < 50; ++t) {
    Eigen::MatrixXd lo(2, 3), hi(2, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) {
        const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
        lo(i, j) = std::min(a, b);
        hi(i, j) = std::max(a, b);
      }
    for (const auto& sel :
         build_h_family(lo, hi, FamilySpec::canonical_plus_random(4, 11)))
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
          const double v = sel.H(i, j);
          REQUIRE((v == std::min(lo(i, j), 0.0) || v == std::max(hi(i, j), 0.0)));
        }
  }
}

TEST_CASE("exhaustive family") {
  Eigen::MatrixXd lo(1, 2), hi(1, 2);
  lo << -1, -2;
  hi << 1, 2;
  const auto fam = build_h_family(lo, hi, FamilySpec::exhaustive());
  CHECK(fam.size() == 4);

  Eigen::MatrixXd big_lo = Eigen::MatrixXd::Constant(3, 6, -1);
  Eigen::MatrixXd big_hi = Eigen::MatrixXd::Constant(3, 6, 1);
  CHECK_THROWS_AS(build_h_family(big_lo, big_hi, FamilySpec::exhaustive()),
                  ExhaustiveTooLarge);
}

TEST_CASE("corner selection") {
  DecompositionSelection sel;
  sel.H = Eigen::MatrixXd::Zero(1, 2);
  Eigen::VectorXd ub = Eigen::VectorXd::Ones(2);
  Eigen::VectorXd lb = -ub;

  sel.sign = {{PartialSign::non_negative, PartialSign::non_negative}};
  CHECK(corner_point(sel, 0, ub, lb) == ub);

  sel.sign = {{PartialSign::non_positive, PartialSign::non_positive}};
  CHECK(corner_point(sel, 0, ub, lb) == lb);

  sel.sign = {{PartialSign::non_negative, PartialSign::non_positive}};
  const Eigen::VectorXd mixed = corner_point(sel, 0, ub, lb);
  CHECK(mixed[0] == 1.0);
  CHECK(mixed[1] == -1.0);
}

namespace {

/// Brute-force extremum of g(xi) = f(xi) - H xi over a grid; corners are
/// grid points, so for a JSS g the grid extremum is the true one.
std::pair<double, double> grid_extrema_1d(const std::function<double(double)>& g,
                                          double lo, double hi, int points) {
  double gmin = std::numeric_limits<double>::infinity(), gmax = -gmin;
  for (int i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    gmin = std::min(gmin, g(x));
    gmax = std::max(gmax, g(x));
  }
  return {gmin, gmax};
}

}  // namespace

TEST_CASE("jss remainder bounds on worked scalars") {
  const Expr xi = Expr::variable(0);
  {
    // f = xi^2 on [-1,1] with H = 2: g = xi^2 - 2 xi is non-increasing
    std::vector<Expr> f = {pow(xi, 2)};
    DecompositionSelection sel;
    sel.H = scalar(2);
    sel.sign = {{PartialSign::non_positive}};
    auto [g_lo, g_hi] = jss_remainder_bounds(f, sel, IntervalVector::unit_box(1));
    CHECK(g_lo[0] == Catch::Approx(-1.0));
    CHECK(g_hi[0] == Catch::Approx(3.0));
    auto [gmin, gmax] =
        grid_extrema_1d([](double x) { return x * x - 2 * x; }, -1, 1, 10000);
    CHECK(g_lo[0] == Catch::Approx(gmin).margin(1e-6));
    CHECK(g_hi[0] == Catch::Approx(gmax).margin(1e-6));
  }
  {
    // linear f with matching H: remainder is identically zero
    std::vector<Expr> f = {3.0 * xi};
    DecompositionSelection sel;
    sel.H = scalar(3);
    sel.sign = {{PartialSign::non_positive}};
    auto [g_lo, g_hi] = jss_remainder_bounds(f, sel, IntervalVector::unit_box(1));
    CHECK(g_lo[0] == 0.0);
    CHECK(g_hi[0] == 0.0);
  }
  {
    // f = xi^3 on [0,2] with H = 0: g = f non-decreasing
    std::vector<Expr> f = {pow(xi, 3)};
    DecompositionSelection sel;
    sel.H = scalar(0);
    sel.sign = {{PartialSign::non_negative}};
    const auto box = IntervalVector::from_bounds(Eigen::VectorXd::Zero(1),
                                                 Eigen::VectorXd::Constant(1, 2));
    auto [g_lo, g_hi] = jss_remainder_bounds(f, sel, box);
    CHECK(g_lo[0] == Catch::Approx(0.0));
    CHECK(g_hi[0] == Catch::Approx(8.0));
  }
}

TEST_CASE("remainder bounds are sound and attained for random selections") {
  RngStream rng(314);
  const Expr x = Expr::variable(0);
  const Expr y = Expr::variable(1);
  for (int t = 0; t < 30; ++t) {
    // random smooth function on a random 2-d box
    std::vector<Expr> f = {rng.uniform(-2, 2) * pow(x, 2) +
                           rng.uniform(-2, 2) * x * y +
                           rng.uniform(-2, 2) * sin(x + 2.0 * y) +
                           rng.uniform(-1, 1) * y};
    const double x0 = rng.uniform(-1.5, 0.0), y0 = rng.uniform(-1.5, 0.0);
    Eigen::VectorXd lo(2), hi(2);
    lo << x0, y0;
    hi << x0 + rng.uniform(0.3, 1.5), y0 + rng.uniform(0.3, 1.5);
    const auto box = IntervalVector::from_bounds(lo, hi);
    const IntervalMatrix J =
        jacobian_bounds_over_box(derive_jacobian(f, 2), box);
    for (const auto& sel : build_h_family(J.lo(), J.hi())) {
      auto [g_lo, g_hi] = jss_remainder_bounds(f, sel, box);
      // soundness across a dense sample
      for (int s = 0; s < 400; ++s) {
        Eigen::VectorXd p(2);
        p << rng.uniform(lo[0], hi[0]), rng.uniform(lo[1], hi[1]);
        const double g = f[0].eval(p) - sel.H.row(0).dot(p);
        REQUIRE(g >= g_lo[0] - 1e-9);
        REQUIRE(g <= g_hi[0] + 1e-9);
      }
      // attainment at the corners, exactly
      const Eigen::VectorXd cmax = corner_point(sel, 0, hi, lo);
      const Eigen::VectorXd cmin = corner_point(sel, 0, lo, hi);
      REQUIRE(f[0].eval(cmax) - sel.H.row(0).dot(cmax) == g_hi[0]);
      REQUIRE(f[0].eval(cmin) - sel.H.row(0).dot(cmin) == g_lo[0]);
    }
  }
}

TEST_CASE("decomposition function axioms") {
  // g_d(z, zhat) = g(corner(z, zhat)) is a mixed-monotone decomposition of g
  const Expr x = Expr::variable(0);
  const Expr y = Expr::variable(1);
  std::vector<Expr> f = {pow(x, 2) - 1.5 * x * y + cos(y)};
  const auto box = IntervalVector::from_bounds(Eigen::VectorXd::Constant(2, -1),
                                               Eigen::VectorXd::Constant(2, 1));
  const IntervalMatrix J = jacobian_bounds_over_box(derive_jacobian(f, 2), box);
  RngStream rng(500);
  for (const auto& sel : build_h_family(J.lo(), J.hi())) {
    auto g = [&](const Eigen::VectorXd& p) {
      return f[0].eval(p) - sel.H.row(0).dot(p);
    };
    auto gd = [&](const Eigen::VectorXd& z, const Eigen::VectorXd& zh) {
      return g(corner_point(sel, 0, z, zh));
    };
    for (int t = 0; t < 300; ++t) {
      Eigen::VectorXd a(2), b(2);
      for (int i = 0; i < 2; ++i) {
        a[i] = rng.symmetric();
        b[i] = rng.symmetric();
      }
      // identity on the diagonal
      REQUIRE(gd(a, a) == Catch::Approx(g(a)).margin(1e-12));
      // monotone: nondecreasing in the first argument ...
      Eigen::VectorXd a2 = a;
      for (int i = 0; i < 2; ++i) a2[i] = std::min(1.0, a[i] + rng.uniform(0, 0.5));
      REQUIRE(gd(a2, b) >= gd(a, b) - 1e-12);
      // ... and nonincreasing in the second
      Eigen::VectorXd b2 = b;
      for (int i = 0; i < 2; ++i) b2[i] = std::min(1.0, b[i] + rng.uniform(0, 0.5));
      REQUIRE(gd(a, b2) <= gd(a, b) + 1e-12);
    }
  }
}

TEST_CASE("decomposition-refined Jacobian bounds") {
  const Expr xi = Expr::variable(0);
  {
    // linear dynamics: both routes give the exact zero-width bounds
    std::vector<Expr> f = {3.0 * xi};
    const auto jac = derive_jacobian(f, 1);
    std::vector<ExprGrid> hess = {derive_jacobian(jac[0], 1)};
    const auto box = IntervalVector::unit_box(1);
    const IntervalMatrix refined = bound_jacobian_via_decomposition(jac, hess, box);
    CHECK(refined(0, 0).lo() == 3.0);
    CHECK(refined(0, 0).hi() == 3.0);
  }
  {
    // f = xi^2: the Jacobian 2 xi is already tight both ways
    std::vector<Expr> f = {pow(xi, 2)};
    const auto jac = derive_jacobian(f, 1);
    std::vector<ExprGrid> hess = {derive_jacobian(jac[0], 1)};
    const auto box = IntervalVector::unit_box(1);
    const IntervalMatrix refined = bound_jacobian_via_decomposition(jac, hess, box);
    CHECK(refined(0, 0).lo() == Catch::Approx(-2.0));
    CHECK(refined(0, 0).hi() == Catch::Approx(2.0));
  }
}

TEST_CASE("refinement on the planar model over the initial hull") {
  const SystemModel m = make_example1_model();
  IntervalVector box(4);
  box[0] = Interval(0.1, 0.9);
  box[1] = Interval(0.3, 0.7);
  box[2] = Interval(-0.1, 0.1);
  box[3] = Interval(-0.1, 0.1);
  const IntervalMatrix plain = jacobian_bounds_over_box(m.jac_f, box);
  const IntervalMatrix refined =
      bound_jacobian_via_decomposition(m.jac_f, m.hess_f, box);
  // subset element-wise
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) {
      REQUIRE(refined(i, j).lo() >= plain(i, j).lo() - 1e-12);
      REQUIRE(refined(i, j).hi() <= plain(i, j).hi() + 1e-12);
    }
  // pointwise Jacobians lie inside both
  RngStream rng(123);
  for (int t = 0; t < 10000; ++t) {
    Eigen::VectorXd z(4);
    for (int i = 0; i < 4; ++i) z[i] = rng.uniform(box[i].lo(), box[i].hi());
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) {
        const double v = m.jac_f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(z);
        REQUIRE(plain(i, j).contains(v));
        REQUIRE(refined(i, j).lo() <= v + 1e-12);
        REQUIRE(refined(i, j).hi() >= v - 1e-12);
      }
  }
  // strictly tighter somewhere (the rational terms have curvature)
  double gain = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      gain = std::max(gain, plain(i, j).diam() - refined(i, j).diam());
  CHECK(gain > 0.0);
}
