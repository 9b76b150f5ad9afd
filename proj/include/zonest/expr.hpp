#ifndef ZONEST_EXPR_HPP_
#define ZONEST_EXPR_HPP_

#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zonest/errors.hpp"
#include "zonest/interval.hpp"

namespace zonest {

/// Immutable scalar expression tree over the node set
/// {constant, variable(i), +, -, *, /, pow(int), sqrt, sin, cos, atan}.
/// Supports exact point evaluation, natural interval extension and
/// symbolic forward differentiation (the node set is closed under it).
class Expr {
 public:
  enum class Kind { kConst, kVar, kAdd, kSub, kMul, kDiv, kPow, kSqrt, kSin, kCos, kAtan };

  Expr() : Expr(0.0) {}
  Expr(double v) : node_(make_node(Kind::kConst, v, 0, 0, nullptr, nullptr)) {}

  static Expr constant(double v) { return Expr(v); }

  static Expr variable(int index) {
    if (index < 0) throw DimensionMismatch("Expr::variable: negative index");
    return Expr(make_node(Kind::kVar, 0.0, index, 0, nullptr, nullptr));
  }

  Kind kind() const { return node_->kind; }
  bool is_constant() const { return node_->kind == Kind::kConst; }
  bool is_constant(double v) const { return is_constant() && node_->value == v; }
  double constant_value() const { return node_->value; }

  /// Number of variables the expression closes over (max index + 1).
  int arity() const { return arity_of(node_.get()); }

  double eval(const Eigen::VectorXd& p) const { return eval_node(node_.get(), p); }

  /// Natural interval extension over a box.
  Interval eval(const IntervalVector& box) const { return eval_node(node_.get(), box); }

  /// Symbolic partial derivative with respect to variable `var`.
  Expr derivative(int var) const;

  /// Substitutes every variable i with subs[i].
  Expr substitute(const std::vector<Expr>& subs) const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr pow(const Expr& a, int n);
  friend Expr sqrt(const Expr& a);
  friend Expr sin(const Expr& a);
  friend Expr cos(const Expr& a);
  friend Expr atan(const Expr& a);

 private:
  struct Node {
    Kind kind;
    double value;  // kConst
    int index;     // kVar
    int expo;      // kPow
    std::shared_ptr<const Node> a, b;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit Expr(NodePtr n) : node_(std::move(n)) {}

  static NodePtr make_node(Kind kind, double value, int index, int expo,
                           NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->value = value;
    n->index = index;
    n->expo = expo;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  static Expr unary(Kind kind, const Expr& a, int expo = 0) {
    return Expr(make_node(kind, 0.0, 0, expo, a.node_, nullptr));
  }

  static Expr binary(Kind kind, const Expr& a, const Expr& b) {
    return Expr(make_node(kind, 0.0, 0, 0, a.node_, b.node_));
  }

  static int arity_of(const Node* n) {
    if (!n) return 0;
    switch (n->kind) {
      case Kind::kConst: return 0;
      case Kind::kVar: return n->index + 1;
      default:
        return std::max(arity_of(n->a.get()), arity_of(n->b.get()));
    }
  }

  static double eval_node(const Node* n, const Eigen::VectorXd& p) {
    switch (n->kind) {
      case Kind::kConst: return n->value;
      case Kind::kVar:
        if (n->index >= p.size())
          throw DimensionMismatch("Expr::eval: point arity too small");
        return p[n->index];
      case Kind::kAdd: return eval_node(n->a.get(), p) + eval_node(n->b.get(), p);
      case Kind::kSub: return eval_node(n->a.get(), p) - eval_node(n->b.get(), p);
      case Kind::kMul: return eval_node(n->a.get(), p) * eval_node(n->b.get(), p);
      case Kind::kDiv: {
        const double den = eval_node(n->b.get(), p);
        if (den == 0.0) throw DomainError("Expr::eval: division by zero");
        return eval_node(n->a.get(), p) / den;
      }
      case Kind::kPow: {
        const double base = eval_node(n->a.get(), p);
        if (base == 0.0 && n->expo < 0)
          throw DomainError("Expr::eval: 0 to a negative power");
        return std::pow(base, n->expo);
      }
      case Kind::kSqrt: {
        const double u = eval_node(n->a.get(), p);
        if (u < 0.0) throw DomainError("Expr::eval: sqrt of negative");
        return std::sqrt(u);
      }
      case Kind::kSin: return std::sin(eval_node(n->a.get(), p));
      case Kind::kCos: return std::cos(eval_node(n->a.get(), p));
      case Kind::kAtan: return std::atan(eval_node(n->a.get(), p));
    }
    throw Error("Expr::eval: unreachable");
  }

  static Interval eval_node(const Node* n, const IntervalVector& box) {
    switch (n->kind) {
      case Kind::kConst: return Interval::point(n->value);
      case Kind::kVar:
        if (n->index >= box.size())
          throw DimensionMismatch("Expr::eval: box arity too small");
        return box[n->index];
      case Kind::kAdd: return eval_node(n->a.get(), box) + eval_node(n->b.get(), box);
      case Kind::kSub: return eval_node(n->a.get(), box) - eval_node(n->b.get(), box);
      case Kind::kMul: return eval_node(n->a.get(), box) * eval_node(n->b.get(), box);
      case Kind::kDiv:
        try {
          return eval_node(n->a.get(), box) / eval_node(n->b.get(), box);
        } catch (const IntervalDivisionByZero&) {
          throw IntervalDomainError("Expr::eval: interval divisor contains zero");
        }
      case Kind::kPow:
        try {
          return pow_int(eval_node(n->a.get(), box), n->expo);
        } catch (const IntervalDivisionByZero&) {
          throw IntervalDomainError("Expr::eval: interval base contains zero");
        }
      case Kind::kSqrt: return zonest::sqrt(eval_node(n->a.get(), box));
      case Kind::kSin: return zonest::sin(eval_node(n->a.get(), box));
      case Kind::kCos: return zonest::cos(eval_node(n->a.get(), box));
      case Kind::kAtan: return zonest::atan(eval_node(n->a.get(), box));
    }
    throw Error("Expr::eval: unreachable");
  }

  Expr child_a() const { return Expr(node_->a); }
  Expr child_b() const { return Expr(node_->b); }

  NodePtr node_;
};

inline Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant())
    return Expr(a.constant_value() + b.constant_value());
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  return Expr::binary(Expr::Kind::kAdd, a, b);
}

inline Expr operator-(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant())
    return Expr(a.constant_value() - b.constant_value());
  if (b.is_constant(0.0)) return a;
  return Expr::binary(Expr::Kind::kSub, a, b);
}

inline Expr operator-(const Expr& a) { return Expr(0.0) - a; }

inline Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant())
    return Expr(a.constant_value() * b.constant_value());
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  return Expr::binary(Expr::Kind::kMul, a, b);
}

inline Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_constant() && b.constant_value() != 0.0) {
    if (a.is_constant())
      return Expr(a.constant_value() / b.constant_value());
    return a * Expr(1.0 / b.constant_value());
  }
  if (a.is_constant(0.0)) return Expr(0.0);
  return Expr::binary(Expr::Kind::kDiv, a, b);
}

inline Expr pow(const Expr& a, int n) {
  if (n == 0) return Expr(1.0);
  if (n == 1) return a;
  if (a.is_constant()) return Expr(std::pow(a.constant_value(), n));
  return Expr::unary(Expr::Kind::kPow, a, n);
}

inline Expr sqrt(const Expr& a) {
  if (a.is_constant() && a.constant_value() >= 0.0)
    return Expr(std::sqrt(a.constant_value()));
  return Expr::unary(Expr::Kind::kSqrt, a);
}

inline Expr sin(const Expr& a) {
  if (a.is_constant()) return Expr(std::sin(a.constant_value()));
  return Expr::unary(Expr::Kind::kSin, a);
}

inline Expr cos(const Expr& a) {
  if (a.is_constant()) return Expr(std::cos(a.constant_value()));
  return Expr::unary(Expr::Kind::kCos, a);
}

inline Expr atan(const Expr& a) {
  if (a.is_constant()) return Expr(std::atan(a.constant_value()));
  return Expr::unary(Expr::Kind::kAtan, a);
}

inline Expr Expr::derivative(int var) const {
  const Expr& self = *this;
  switch (node_->kind) {
    case Kind::kConst: return Expr(0.0);
    case Kind::kVar: return Expr(node_->index == var ? 1.0 : 0.0);
    case Kind::kAdd: return child_a().derivative(var) + child_b().derivative(var);
    case Kind::kSub: return child_a().derivative(var) - child_b().derivative(var);
    case Kind::kMul:
      return child_a().derivative(var) * child_b() +
             child_a() * child_b().derivative(var);
    case Kind::kDiv:
      return (child_a().derivative(var) * child_b() -
              child_a() * child_b().derivative(var)) /
             (child_b() * child_b());
    case Kind::kPow:
      return Expr(node_->expo) * pow(child_a(), node_->expo - 1) *
             child_a().derivative(var);
    case Kind::kSqrt:
      return child_a().derivative(var) / (Expr(2.0) * self);
    case Kind::kSin: return cos(child_a()) * child_a().derivative(var);
    case Kind::kCos: return Expr(-1.0) * sin(child_a()) * child_a().derivative(var);
    case Kind::kAtan:
      return child_a().derivative(var) / (Expr(1.0) + child_a() * child_a());
  }
  throw Error("Expr::derivative: unreachable");
}

inline Expr Expr::substitute(const std::vector<Expr>& subs) const {
  switch (node_->kind) {
    case Kind::kConst: return *this;
    case Kind::kVar:
      if (node_->index >= static_cast<int>(subs.size()))
        throw DimensionMismatch("Expr::substitute: missing substitution");
      return subs[static_cast<std::size_t>(node_->index)];
    case Kind::kAdd: return child_a().substitute(subs) + child_b().substitute(subs);
    case Kind::kSub: return child_a().substitute(subs) - child_b().substitute(subs);
    case Kind::kMul: return child_a().substitute(subs) * child_b().substitute(subs);
    case Kind::kDiv: return child_a().substitute(subs) / child_b().substitute(subs);
    case Kind::kPow: return pow(child_a().substitute(subs), node_->expo);
    case Kind::kSqrt: return sqrt(child_a().substitute(subs));
    case Kind::kSin: return sin(child_a().substitute(subs));
    case Kind::kCos: return cos(child_a().substitute(subs));
    case Kind::kAtan: return atan(child_a().substitute(subs));
  }
  throw Error("Expr::substitute: unreachable");
}

inline Eigen::VectorXd eval_point(const std::vector<Expr>& e,
                                  const Eigen::VectorXd& p) {
  Eigen::VectorXd r(static_cast<int>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i)
    r[static_cast<int>(i)] = e[i].eval(p);
  return r;
}

inline IntervalVector eval_box(const std::vector<Expr>& e,
                               const IntervalVector& box) {
  IntervalVector r(static_cast<int>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) r[static_cast<int>(i)] = e[i].eval(box);
  return r;
}

/// Substitutes the affine map xi -> G xi + c into every expression:
/// result(xi) = e(G xi + c). The composed Jacobian is (J of e) * G.
inline std::vector<Expr> compose_affine(const std::vector<Expr>& e,
                                        const Eigen::MatrixXd& G,
                                        const Eigen::VectorXd& c) {
  if (G.rows() != c.size())
    throw DimensionMismatch("compose_affine: G rows != c size");
  std::vector<Expr> subs;
  subs.reserve(static_cast<std::size_t>(G.rows()));
  for (int i = 0; i < G.rows(); ++i) {
    Expr row(c[i]);
    for (int j = 0; j < G.cols(); ++j)
      row = row + Expr(G(i, j)) * Expr::variable(j);
    subs.push_back(row);
  }
  std::vector<Expr> out;
  out.reserve(e.size());
  for (const auto& ei : e) out.push_back(ei.substitute(subs));
  return out;
}

}  // namespace zonest

#endif  // ZONEST_EXPR_HPP_
