#ifndef ZONEST_INTERVAL_HPP_
#define ZONEST_INTERVAL_HPP_

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "zonest/config.hpp"
#include "zonest/errors.hpp"

namespace zonest {

/// Closed real interval [lo, hi]. The empty interval is a distinct state
/// produced only by Interval::empty(); lo > hi is never representable.
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0), empty_(false) {}

  Interval(double lo, double hi) : lo_(lo), hi_(hi), empty_(false) {
    if (!(lo <= hi))
      throw EmptyIntervalError("Interval: lo > hi (use Interval::empty())");
  }

  static Interval empty() {
    Interval v;
    v.empty_ = true;
    return v;
  }

  static Interval point(double x) { return Interval(x, x); }

  /// Symmetric interval [-r, r].
  static Interval symmetric(double r) { return Interval(-std::abs(r), std::abs(r)); }

  bool is_empty() const { return empty_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double diam() const { return hi_ - lo_; }
  double rad() const { return 0.5 * (hi_ - lo_); }

  bool contains(double x) const { return !empty_ && lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const {
    if (o.empty_) return true;
    return !empty_ && lo_ <= o.lo_ && o.hi_ <= hi_;
  }

  Interval intersect(const Interval& o) const {
    if (empty_ || o.empty_) return empty();
    double lo = std::max(lo_, o.lo_), hi = std::min(hi_, o.hi_);
    if (lo > hi) return empty();
    return Interval(lo, hi);
  }

  Interval hull(const Interval& o) const {
    if (empty_) return o;
    if (o.empty_) return *this;
    return Interval(std::min(lo_, o.lo_), std::max(hi_, o.hi_));
  }

 private:
  double lo_, hi_;
  bool empty_;
};

namespace detail {
inline Interval inflate(double lo, double hi) {
  const double eps = config::interval_inflation;
  return eps > 0.0 ? Interval(lo - eps, hi + eps) : Interval(lo, hi);
}
}  // namespace detail

inline Interval operator+(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return detail::inflate(a.lo() + b.lo(), a.hi() + b.hi());
}

inline Interval operator-(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return detail::inflate(a.lo() - b.hi(), a.hi() - b.lo());
}

inline Interval operator-(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  return Interval(-a.hi(), -a.lo());
}

inline Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  const double p1 = a.lo() * b.lo(), p2 = a.lo() * b.hi();
  const double p3 = a.hi() * b.lo(), p4 = a.hi() * b.hi();
  return detail::inflate(std::min(std::min(p1, p2), std::min(p3, p4)),
                         std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator/(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  if (b.contains(0.0))
    throw IntervalDivisionByZero("interval division: divisor contains zero");
  const double p1 = a.lo() / b.lo(), p2 = a.lo() / b.hi();
  const double p3 = a.hi() / b.lo(), p4 = a.hi() / b.hi();
  return detail::inflate(std::min(std::min(p1, p2), std::min(p3, p4)),
                         std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator+(const Interval& a, double b) { return a + Interval::point(b); }
inline Interval operator+(double a, const Interval& b) { return Interval::point(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval::point(b); }
inline Interval operator-(double a, const Interval& b) { return Interval::point(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval::point(b); }
inline Interval operator*(double a, const Interval& b) { return Interval::point(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval::point(b); }

/// x^n with integer exponent. Even powers fold the sign; negative exponents
/// require 0 outside x.
inline Interval pow_int(const Interval& x, int n) {
  if (x.is_empty()) return Interval::empty();
  if (n == 0) return Interval::point(1.0);
  if (n < 0) return Interval::point(1.0) / pow_int(x, -n);
  const double pl = std::pow(x.lo(), n), ph = std::pow(x.hi(), n);
  if (n % 2 == 1) return detail::inflate(pl, ph);
  if (x.lo() >= 0.0) return detail::inflate(pl, ph);
  if (x.hi() <= 0.0) return detail::inflate(ph, pl);
  return detail::inflate(0.0, std::max(pl, ph));
}

inline Interval sqrt(const Interval& x) {
  if (x.is_empty()) return Interval::empty();
  double lo = x.lo();
  if (lo < 0.0) {
    if (lo > -1e-12) lo = 0.0;  // tolerate fp jitter around zero
    else throw IntervalDomainError("interval sqrt: negative argument");
  }
  return detail::inflate(std::sqrt(lo), std::sqrt(x.hi()));
}

/// Exact range of sin over [a, b]: endpoint values plus any interior
/// extremum at pi/2 + 2k*pi (max) and -pi/2 + 2k*pi (min).
inline Interval sin(const Interval& x) {
  if (x.is_empty()) return Interval::empty();
  const double two_pi = 2.0 * M_PI;
  if (x.diam() >= two_pi) return Interval(-1.0, 1.0);
  double lo = std::min(std::sin(x.lo()), std::sin(x.hi()));
  double hi = std::max(std::sin(x.lo()), std::sin(x.hi()));
  // smallest k with pi/2 + 2k*pi >= x.lo()
  double k = std::ceil((x.lo() - M_PI / 2.0) / two_pi);
  if (M_PI / 2.0 + k * two_pi <= x.hi()) hi = 1.0;
  k = std::ceil((x.lo() + M_PI / 2.0) / two_pi);
  if (-M_PI / 2.0 + k * two_pi <= x.hi()) lo = -1.0;
  return detail::inflate(lo, hi);
}

inline Interval cos(const Interval& x) {
  if (x.is_empty()) return Interval::empty();
  return sin(Interval(x.lo() + M_PI / 2.0, x.hi() + M_PI / 2.0));
}

inline Interval atan(const Interval& x) {
  if (x.is_empty()) return Interval::empty();
  return detail::inflate(std::atan(x.lo()), std::atan(x.hi()));
}

inline Interval abs(const Interval& x) {
  if (x.is_empty()) return Interval::empty();
  if (x.lo() >= 0.0) return x;
  if (x.hi() <= 0.0) return -x;
  return Interval(0.0, std::max(-x.lo(), x.hi()));
}

/// Box in R^n as a vector of closed intervals.
class IntervalVector {
 public:
  IntervalVector() = default;
  explicit IntervalVector(int n) : e_(static_cast<std::size_t>(n)) {}
  IntervalVector(std::initializer_list<Interval> init) : e_(init) {}

  static IntervalVector from_bounds(const Eigen::VectorXd& lo,
                                    const Eigen::VectorXd& hi) {
    if (lo.size() != hi.size())
      throw DimensionMismatch("IntervalVector::from_bounds: size mismatch");
    IntervalVector v(static_cast<int>(lo.size()));
    for (int i = 0; i < lo.size(); ++i) v.e_[i] = Interval(lo[i], hi[i]);
    return v;
  }

  static IntervalVector from_point(const Eigen::VectorXd& p) {
    return from_bounds(p, p);
  }

  static IntervalVector unit_box(int n) {
    IntervalVector v(n);
    for (auto& x : v.e_) x = Interval(-1.0, 1.0);
    return v;
  }

  int size() const { return static_cast<int>(e_.size()); }
  const Interval& operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  Interval& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }

  bool is_empty() const {
    for (const auto& x : e_)
      if (x.is_empty()) return true;
    return false;
  }

  Eigen::VectorXd lo() const { return map([](const Interval& x) { return x.lo(); }); }
  Eigen::VectorXd hi() const { return map([](const Interval& x) { return x.hi(); }); }
  Eigen::VectorXd mid() const { return map([](const Interval& x) { return x.mid(); }); }
  Eigen::VectorXd rad() const { return map([](const Interval& x) { return x.rad(); }); }
  Eigen::VectorXd diam() const { return map([](const Interval& x) { return x.diam(); }); }

  bool contains(const Eigen::VectorXd& p) const {
    if (p.size() != size()) return false;
    for (int i = 0; i < size(); ++i)
      if (!e_[static_cast<std::size_t>(i)].contains(p[i])) return false;
    return true;
  }

 private:
  template <class F>
  Eigen::VectorXd map(F f) const {
    Eigen::VectorXd v(size());
    for (int i = 0; i < size(); ++i) v[i] = f(e_[static_cast<std::size_t>(i)]);
    return v;
  }

  std::vector<Interval> e_;
};

/// Element-wise interval matrix.
class IntervalMatrix {
 public:
  IntervalMatrix() : rows_(0), cols_(0) {}
  IntervalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static IntervalMatrix from_bounds(const Eigen::MatrixXd& lo,
                                    const Eigen::MatrixXd& hi) {
    if (lo.rows() != hi.rows() || lo.cols() != hi.cols())
      throw DimensionMismatch("IntervalMatrix::from_bounds: shape mismatch");
    IntervalMatrix m(static_cast<int>(lo.rows()), static_cast<int>(lo.cols()));
    for (int i = 0; i < m.rows_; ++i)
      for (int j = 0; j < m.cols_; ++j) m(i, j) = Interval(lo(i, j), hi(i, j));
    return m;
  }

  static IntervalMatrix from_point(const Eigen::MatrixXd& p) {
    return from_bounds(p, p);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Interval& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
  }
  Interval& operator()(int i, int j) {
    return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
  }

  bool is_empty() const {
    for (const auto& x : e_)
      if (x.is_empty()) return true;
    return false;
  }

  Eigen::MatrixXd lo() const { return map([](const Interval& x) { return x.lo(); }); }
  Eigen::MatrixXd hi() const { return map([](const Interval& x) { return x.hi(); }); }
  Eigen::MatrixXd mid() const { return map([](const Interval& x) { return x.mid(); }); }
  Eigen::MatrixXd diam() const { return map([](const Interval& x) { return x.diam(); }); }
  Eigen::MatrixXd rad() const { return map([](const Interval& x) { return x.rad(); }); }

  bool contains(const Eigen::MatrixXd& p) const {
    if (p.rows() != rows_ || p.cols() != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).contains(p(i, j))) return false;
    return true;
  }

  /// Element-wise intersection; throws EmptySetError when disjoint anywhere.
  IntervalMatrix intersect(const IntervalMatrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_)
      throw DimensionMismatch("IntervalMatrix::intersect: shape mismatch");
    IntervalMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        r(i, j) = (*this)(i, j).intersect(o(i, j));
        if (r(i, j).is_empty())
          throw EmptySetError("IntervalMatrix::intersect: empty entry");
      }
    return r;
  }

 private:
  template <class F>
  Eigen::MatrixXd map(F f) const {
    Eigen::MatrixXd v(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) v(i, j) = f((*this)(i, j));
    return v;
  }

  int rows_, cols_;
  std::vector<Interval> e_;
};

/// Centered representation of a box: (center, halfwidths) with
/// box = center + diag(halfwidths) * unit box.
inline std::pair<Eigen::VectorXd, Eigen::VectorXd> centered_form(
    const IntervalVector& v) {
  if (v.is_empty()) throw EmptyIntervalError("centered_form: empty interval");
  return {v.mid(), v.rad()};
}

/// Splits an interval matrix into its midpoint and a zero-centered
/// symmetric interval remainder: J = mid + delta, delta_ij = rad * [-1, 1].
inline std::pair<Eigen::MatrixXd, IntervalMatrix> split_matrix(
    const IntervalMatrix& J) {
  if (J.is_empty()) throw EmptyIntervalError("split_matrix: empty entry");
  Eigen::MatrixXd r = J.rad();
  return {J.mid(), IntervalMatrix::from_bounds(-r, r)};
}

inline IntervalVector operator*(const IntervalMatrix& M, const IntervalVector& v) {
  if (M.cols() != v.size()) throw DimensionMismatch("interval matmul: shape");
  IntervalVector r(M.rows());
  for (int i = 0; i < M.rows(); ++i) {
    Interval acc = Interval::point(0.0);
    for (int j = 0; j < M.cols(); ++j) acc = acc + M(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

inline IntervalVector operator*(const IntervalMatrix& M, const Eigen::VectorXd& v) {
  return M * IntervalVector::from_point(v);
}

inline IntervalMatrix operator*(const IntervalMatrix& M, const Eigen::MatrixXd& B) {
  if (M.cols() != B.rows()) throw DimensionMismatch("interval matmul: shape");
  IntervalMatrix r(M.rows(), static_cast<int>(B.cols()));
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) {
      Interval acc = Interval::point(0.0);
      for (int k = 0; k < M.cols(); ++k) acc = acc + M(i, k) * B(k, j);
      r(i, j) = acc;
    }
  return r;
}

/// Affine image of a box: c + G * box, evaluated with exact interval
/// arithmetic per row.
inline IntervalVector affine_image_box(const Eigen::VectorXd& c,
                                       const Eigen::MatrixXd& G,
                                       const IntervalVector& box) {
  if (G.cols() != box.size() || G.rows() != c.size())
    throw DimensionMismatch("affine_image_box: shape");
  IntervalVector r(static_cast<int>(c.size()));
  for (int i = 0; i < c.size(); ++i) {
    Interval acc = Interval::point(c[i]);
    for (int j = 0; j < G.cols(); ++j) acc = acc + G(i, j) * box[j];
    r[i] = acc;
  }
  return r;
}

}  // namespace zonest

#endif  // ZONEST_INTERVAL_HPP_
