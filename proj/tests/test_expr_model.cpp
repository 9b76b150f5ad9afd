#include <catch_amalgamated.hpp>

#include "zonest/model.hpp"
#include "zonest/rng.hpp"

using namespace zonest;

namespace {

// central finite difference of e along variable j
double fd(const Expr& e, const Eigen::VectorXd& p, int j, double h = 1e-6) {
  Eigen::VectorXd hi = p, lo = p;
  hi[j] += h;
  lo[j] -= h;
  return (e.eval(hi) - e.eval(lo)) / (2 * h);
}

}  // namespace

TEST_CASE("point evaluation of the planar dynamics") {
  const SystemModel m = make_example1_model();
  Eigen::VectorXd z(4);
  z << 0.5, 0.5, 0.0, 0.0;
  const double expected = 3 * 0.5 - 0.25 / 7.0 - 4 * 0.25 / 4.5;
  CHECK(m.f[0].eval(z) == Catch::Approx(expected).epsilon(1e-12));
  const double expected2 = -2 * 0.5 + 3 * 0.25 / 4.5;
  CHECK(m.f[1].eval(z) == Catch::Approx(expected2).epsilon(1e-12));
}

TEST_CASE("identity and constant expressions") {
  std::vector<Expr> id = {Expr::variable(0), Expr::variable(1)};
  Eigen::VectorXd p(2);
  p << 1, 2;
  CHECK(eval_point(id, p) == p);
  CHECK(Expr(0.0).eval(p) == 0.0);
}

TEST_CASE("evaluation domain errors") {
  const Expr x = Expr::variable(0);
  Eigen::VectorXd zero(1);
  zero << 0.0;
  CHECK_THROWS_AS((x / x).eval(zero), DomainError);
  Eigen::VectorXd neg(1);
  neg << -1.0;
  CHECK_THROWS_AS(sqrt(x).eval(neg), DomainError);
}

TEST_CASE("symbolic derivatives match finite differences") {
  RngStream rng(31);
  for (const auto& model : {make_example1_model(),
                            make_unicycle_model(default_params("unicycle"))}) {
    const int nz = model.nz();
    for (int t = 0; t < 100; ++t) {
      Eigen::VectorXd z(nz);
      for (int i = 0; i < nz; ++i) z[i] = rng.uniform(0.05, 0.8);
      for (int i = 0; i < model.nx; ++i)
        for (int j = 0; j < nz; ++j) {
          const double sym = model.jac_f[i][j].eval(z);
          const double num = fd(model.f[i], z, j);
          REQUIRE(sym == Catch::Approx(num).epsilon(1e-6).margin(1e-8));
        }
      Eigen::VectorXd x = z.head(model.nx);
      for (int i = 0; i < model.nmu; ++i)
        for (int j = 0; j < model.nx; ++j) {
          const double sym = model.jac_mu[i][j].eval(x);
          const double num = fd(model.mu[i], x, j);
          REQUIRE(sym == Catch::Approx(num).epsilon(1e-6).margin(1e-8));
        }
    }
  }
}

TEST_CASE("jacobian bounds over a box") {
  const Expr xi = Expr::variable(0);
  {
    // d/dxi of xi^2 over [-1,1] is [-2,2]
    std::vector<Expr> f = {pow(xi, 2)};
    const auto J = jacobian_bounds_over_box(derive_jacobian(f, 1),
                                            IntervalVector::unit_box(1));
    CHECK(J(0, 0).lo() == -2.0);
    CHECK(J(0, 0).hi() == 2.0);
  }
  {
    std::vector<Expr> f = {3.0 * xi};
    const auto J = jacobian_bounds_over_box(derive_jacobian(f, 1),
                                            IntervalVector::from_bounds(
                                                Eigen::VectorXd::Constant(1, -7),
                                                Eigen::VectorXd::Constant(1, 9)));
    CHECK(J(0, 0).lo() == 3.0);
    CHECK(J(0, 0).hi() == 3.0);
  }
  {
    // d/dtheta of T0 * phi_w * cos(theta) over [0, pi/2] is [-0.3, 0]
    std::vector<Expr> f = {1.0 * 0.3 * cos(xi)};
    const auto J = jacobian_bounds_over_box(
        derive_jacobian(f, 1),
        IntervalVector::from_bounds(Eigen::VectorXd::Zero(1),
                                    Eigen::VectorXd::Constant(1, M_PI / 2)));
    CHECK(J(0, 0).lo() == Catch::Approx(-0.3));
    CHECK(J(0, 0).hi() == Catch::Approx(0.0).margin(1e-15));
  }
}

TEST_CASE("jacobian interval bounds contain sampled Jacobians") {
  const SystemModel m = make_example1_model();
  IntervalVector box(4);
  box[0] = Interval(0.1, 0.9);
  box[1] = Interval(0.3, 0.7);
  box[2] = Interval(-0.1, 0.1);
  box[3] = Interval(-0.1, 0.1);
  const IntervalMatrix J = jacobian_bounds_over_box(m.jac_f, box);
  RngStream rng(8);
  for (int t = 0; t < 10000; ++t) {
    Eigen::VectorXd z(4);
    for (int i = 0; i < 4; ++i) z[i] = rng.uniform(box[i].lo(), box[i].hi());
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j)
        REQUIRE(J(i, j).contains(m.jac_f[i][j].eval(z)));
  }
}

TEST_CASE("affine composition") {
  const Expr x = Expr::variable(0);
  {
    // identity map leaves evaluation unchanged
    std::vector<Expr> e = {x * x + 1.0};
    const auto composed = compose_affine(e, Eigen::MatrixXd::Identity(1, 1),
                                         Eigen::VectorXd::Zero(1));
    Eigen::VectorXd p(1);
    p << 0.7;
    CHECK(eval_point(composed, p) == eval_point(e, p));
  }
  {
    // x^2 with x = 2 xi + 1 gives (2 xi + 1)^2; at xi = 1 that is 9
    std::vector<Expr> e = {pow(x, 2)};
    Eigen::MatrixXd G(1, 1);
    G << 2;
    Eigen::VectorXd c(1);
    c << 1;
    const auto composed = compose_affine(e, G, c);
    Eigen::VectorXd p(1);
    p << 1.0;
    CHECK(eval_point(composed, p)[0] == Catch::Approx(9.0));
  }
  {
    // composing the planar dynamics with (G, c) of its initial set at xi=0
    // equals evaluating at the center
    const SystemModel m = make_example1_model();
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(4, 3);
    G.topRows(2) << 0.1, 0.2, -0.1, 0.1, 0.1, 0.0;
    Eigen::VectorXd c(4);
    c << 0.5, 0.5, 0.0, 0.0;
    const auto composed = compose_affine(m.f, G, c);
    const Eigen::VectorXd at_zero =
        eval_point(composed, Eigen::VectorXd::Zero(3));
    CHECK(at_zero == eval_point(m.f, c));
  }
}

TEST_CASE("composition consistency between trees and the implicit image") {
  const SystemModel m = make_example1_model();
  Eigen::MatrixXd G(4, 2);
  G << 0.3, 0.1, -0.2, 0.4, 0.05, 0.0, 0.0, 0.05;
  Eigen::VectorXd c(4);
  c << 0.5, 0.5, 0.0, 0.0;
  const auto composed = compose_affine(m.f, G, c);
  const AffineImage image(m.f, m.jac_f, G, c);
  const IntervalVector box = IntervalVector::unit_box(2);
  const IntervalMatrix J_tree =
      jacobian_bounds_over_box(derive_jacobian(composed, 2), box);
  const IntervalMatrix J_image = image.jacobian_bounds(box);
  RngStream rng(77);
  for (int t = 0; t < 2000; ++t) {
    Eigen::VectorXd xi(2);
    xi << rng.symmetric(), rng.symmetric();
    CHECK((image.eval(xi) - eval_point(composed, xi)).norm() < 1e-12);
    // pointwise Jacobian of the composition lies in both bounds
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double sym = composed[static_cast<std::size_t>(i)].derivative(j).eval(xi);
        REQUIRE(J_tree(i, j).contains(sym));
        REQUIRE(J_image(i, j).contains(sym));
      }
  }
}

TEST_CASE("jacobian bounds reject boxes crossing a singularity") {
  const SystemModel m = make_example1_model();
  IntervalVector box(4);
  box[0] = Interval(-5.0, 0.5);  // 4 + x1 straddles zero
  box[1] = Interval(0.3, 0.7);
  box[2] = Interval(-0.1, 0.1);
  box[3] = Interval(-0.1, 0.1);
  CHECK_THROWS_AS(jacobian_bounds_over_box(m.jac_f, box), IntervalDomainError);
}

TEST_CASE("linear observation detection") {
  const SystemModel m1 = make_example1_model();
  REQUIRE(m1.mu_linear);
  Eigen::MatrixXd C(2, 2);
  C << 1, 0, -1, 1;
  CHECK(m1.mu_matrix == C);
  CHECK(m1.mu_offset.norm() == 0.0);

  const SystemModel m2 = make_unicycle_model(default_params("unicycle"));
  CHECK_FALSE(m2.mu_linear);
  CHECK(m2.nmu == 4);
}

TEST_CASE("unknown model name") {
  CHECK_THROWS_AS(make_model("nonexistent", {}), ModelNotFound);
}
