#ifndef ZONEST_MODEL_HPP_
#define ZONEST_MODEL_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zonest/errors.hpp"
#include "zonest/expr.hpp"
#include "zonest/interval.hpp"

namespace zonest {

using ExprGrid = std::vector<std::vector<Expr>>;

/// Natural-interval-extension bounds of an expression grid over a box:
/// the returned interval matrix encloses jac(z) for every z in the box.
inline IntervalMatrix jacobian_bounds_over_box(const ExprGrid& jac,
                                               const IntervalVector& box) {
  if (box.is_empty())
    throw EmptyIntervalError("jacobian_bounds_over_box: empty box");
  const int rows = static_cast<int>(jac.size());
  const int cols = rows > 0 ? static_cast<int>(jac[0].size()) : 0;
  IntervalMatrix J(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(jac[static_cast<std::size_t>(i)].size()) != cols)
      throw DimensionMismatch("jacobian_bounds_over_box: ragged grid");
    for (int j = 0; j < cols; ++j)
      J(i, j) = jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(box);
  }
  return J;
}

inline ExprGrid derive_jacobian(const std::vector<Expr>& f, int arity) {
  ExprGrid jac(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    jac[i].reserve(static_cast<std::size_t>(arity));
    for (int j = 0; j < arity; ++j) jac[i].push_back(f[i].derivative(j));
  }
  return jac;
}

/// Dynamics f over z = [x; w], observation mu over x, and their
/// symbolically derived Jacobian grids. Second derivatives of f and mu
/// (one more symbolic pass over the Jacobian entries) back the
/// decomposition-based Jacobian refinement.
struct SystemModel {
  int nx = 0, nw = 0, nmu = 0;
  std::vector<Expr> f;    // length nx, arity nx + nw
  std::vector<Expr> mu;   // length nmu, arity nx
  ExprGrid jac_f;         // nx x (nx + nw)
  ExprGrid jac_mu;        // nmu x nx
  std::vector<ExprGrid> hess_f;   // per f row: (nx+nw) x (nx+nw) entries d2f_i
  std::vector<ExprGrid> hess_mu;  // per mu row

  bool mu_linear = false;
  Eigen::MatrixXd mu_matrix;  // valid when mu_linear
  Eigen::VectorXd mu_offset;  // mu(x) = mu_matrix * x + mu_offset

  int nz() const { return nx + nw; }

  static SystemModel build(std::vector<Expr> f, std::vector<Expr> mu, int nx,
                           int nw) {
    SystemModel m;
    m.nx = nx;
    m.nw = nw;
    m.nmu = static_cast<int>(mu.size());
    m.f = std::move(f);
    m.mu = std::move(mu);
    if (static_cast<int>(m.f.size()) != nx)
      throw DimensionMismatch("SystemModel: f length != nx");
    m.jac_f = derive_jacobian(m.f, m.nz());
    m.jac_mu = derive_jacobian(m.mu, nx);
    m.hess_f.reserve(m.f.size());
    for (const auto& row : m.jac_f) m.hess_f.push_back(derive_jacobian(row, m.nz()));
    m.hess_mu.reserve(m.mu.size());
    for (const auto& row : m.jac_mu) m.hess_mu.push_back(derive_jacobian(row, nx));

    m.mu_linear = true;
    for (const auto& row : m.jac_mu)
      for (const auto& e : row)
        if (!e.is_constant()) m.mu_linear = false;
    if (m.mu_linear && m.nmu > 0) {
      m.mu_matrix.resize(m.nmu, nx);
      for (int i = 0; i < m.nmu; ++i)
        for (int j = 0; j < nx; ++j)
          m.mu_matrix(i, j) =
              m.jac_mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].constant_value();
      m.mu_offset = eval_point(m.mu, Eigen::VectorXd::Zero(nx));
    }
    return m;
  }
};

/// f composed with an affine map xi -> c + G xi, kept implicit: points are
/// mapped and then fed to f, and Jacobian bounds come from the chain rule
/// J_f(c + G * box) * G at interval level. This evaluates to the same
/// enclosure as the natural extension of the expanded composed derivative,
/// without materializing composed trees.
struct AffineImage {
  const std::vector<Expr>* f = nullptr;
  const ExprGrid* jac = nullptr;
  Eigen::MatrixXd G;
  Eigen::VectorXd c;

  AffineImage(const std::vector<Expr>& f_in, const ExprGrid& jac_in,
              Eigen::MatrixXd G_in, Eigen::VectorXd c_in)
      : f(&f_in), jac(&jac_in), G(std::move(G_in)), c(std::move(c_in)) {
    if (G.rows() != this->c.size())
      throw DimensionMismatch("AffineImage: G rows != c size");
  }

  int out_dim() const { return static_cast<int>(f->size()); }
  int in_dim() const { return static_cast<int>(G.cols()); }

  Eigen::VectorXd eval(const Eigen::VectorXd& xi) const {
    return eval_point(*f, c + G * xi);
  }

  IntervalMatrix jacobian_bounds(const IntervalVector& box) const {
    IntervalVector image = affine_image_box(c, G, box);
    return jacobian_bounds_over_box(*jac, image) * G;
  }
};

inline std::map<std::string, double> default_params(const std::string& name) {
  if (name == "unicycle")
    return {{"T0", 1.0},      {"phi_w", 0.3}, {"phi_theta", 0.15},
            {"sx1", -2.0},    {"sy1", 0.0},   {"sx2", 2.0},
            {"sy2", 2.0}};
  return {};
}

/// Planar system with quadratic/rational dynamics and a linear two-channel
/// observation y = [x1; x2 - x1] + v.
inline SystemModel make_example1_model() {
  Expr x1 = Expr::variable(0), x2 = Expr::variable(1);
  Expr w1 = Expr::variable(2), w2 = Expr::variable(3);
  std::vector<Expr> f = {
      3.0 * x1 - pow(x1, 2) / 7.0 - 4.0 * x1 * x2 / (4.0 + x1) + w1,
      -2.0 * x2 + 3.0 * x1 * x2 / (4.0 + x1) + w2,
  };
  std::vector<Expr> mu = {x1, -1.0 * x1 + x2};
  return SystemModel::build(std::move(f), std::move(mu), 2, 2);
}

/// Discretized unicycle with constant forward and angular rates and a
/// range/bearing observation of two fixed landmarks.
inline SystemModel make_unicycle_model(const std::map<std::string, double>& params) {
  auto get = [&params](const std::string& key) {
    auto defaults = default_params("unicycle");
    auto it = params.find(key);
    if (it != params.end()) return it->second;
    return defaults.at(key);
  };
  const double T0 = get("T0"), phi_w = get("phi_w"), phi_theta = get("phi_theta");
  Expr sx = Expr::variable(0), sy = Expr::variable(1), th = Expr::variable(2);
  Expr w1 = Expr::variable(3), w2 = Expr::variable(4), w3 = Expr::variable(5);
  std::vector<Expr> f = {
      sx + T0 * phi_w * cos(th) + w1,
      sy + T0 * phi_w * sin(th) + w2,
      th + Expr::constant(T0 * phi_theta) + w3,
  };
  std::vector<Expr> mu;
  for (int i = 1; i <= 2; ++i) {
    const double lx = get("sx" + std::to_string(i));
    const double ly = get("sy" + std::to_string(i));
    Expr dx = Expr::constant(lx) - sx;
    Expr dy = Expr::constant(ly) - sy;
    mu.push_back(sqrt(pow(dx, 2) + pow(dy, 2)));
    mu.push_back(th - atan(dy / dx));
  }
  return SystemModel::build(std::move(f), std::move(mu), 3, 3);
}

inline SystemModel make_model(const std::string& name,
                              const std::map<std::string, double>& params) {
  if (name == "example1") return make_example1_model();
  if (name == "unicycle") return make_unicycle_model(params);
  throw ModelNotFound("unknown model: " + name);
}

}  // namespace zonest

#endif  // ZONEST_MODEL_HPP_
