#pragma once

#include <Eigen/Core>
#include <memory>

#include "numerics.hpp"

namespace cdkit {

enum class Which { X, Z };

enum class StrongMode { Exact, SmallestPositive };

// Incremental gradient state for the two-sequence solvers.  The cache owns
// the iterates x and z together with whatever per-objective quantity makes
// coordinate gradients cheap (the full gradient for least squares, the
// margin vector for logistic).  All mutations go through transform() and
// step() so the cached quantity stays coherent with the iterates; a full
// recompute runs every refresh_period mutations to stop drift.
class GradientCache {
 public:
  virtual ~GradientCache() = default;

  const Eigen::VectorXd& x() const { return x_; }
  const Eigen::VectorXd& z() const { return z_; }
  const Eigen::VectorXd& iterate(Which w) const { return w == Which::X ? x_ : z_; }
  long dim() const { return x_.size(); }

  // y(theta) = (1 - theta) x + theta z, materialized.
  Eigen::VectorXd combined(double theta) const {
    return (1.0 - theta) * x_ + theta * z_;
  }

  // Gradient of the objective at y(theta); theta = 0 reads at x, 1 at z.
  virtual double coord_gradient_combo(double theta, long i) const = 0;
  virtual void gradient_combo(double theta, Eigen::VectorXd& out) const = 0;
  double coord_gradient(Which w, long i) const {
    return coord_gradient_combo(w == Which::X ? 0.0 : 1.0, i);
  }

  // (x, z) <- (axx x + axz z, azx x + azz z), applied simultaneously, with
  // the cached quantity transformed the same way.  Each row must sum to 1
  // so the affine part of the gradient carries through.
  void transform(double axx, double axz, double azx, double azz);

  // iterate(w)[i] += h plus the matching rank-one cache update.
  void step(Which w, long i, double h);

  // Recompute the cached quantity from the iterates.
  void refresh();

  void set_refresh_period(long period);
  long mutations_since_refresh() const { return mutations_; }

 protected:
  GradientCache(Eigen::VectorXd x0)
      : x_(x0), z_(std::move(x0)), tx_(x_.size()), tz_(x_.size()) {}

  virtual void on_transform(double axx, double axz, double azx, double azz) = 0;
  virtual void on_step(Which w, long i, double h) = 0;
  virtual void on_refresh() = 0;

  // Shared two-temporary combine used by on_transform implementations.
  static void combine_pair(Eigen::VectorXd& a, Eigen::VectorXd& b,
                           double aa, double ab, double ba, double bb,
                           Eigen::VectorXd& ta, Eigen::VectorXd& tb);

 private:
  void bump();

  Eigen::VectorXd x_, z_;
  Eigen::VectorXd tx_, tz_;
  long mutations_ = 0;
  long period_ = 1000;
};

// A smooth convex objective over beta in R^dim.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual long samples() const = 0;
  virtual double value(const Eigen::VectorXd& beta) const = 0;
  virtual Eigen::VectorXd gradient(const Eigen::VectorXd& beta) const = 0;
  virtual double coordinate_gradient(const Eigen::VectorXd& beta,
                                     long i) const = 0;
  virtual const Smoothness& smoothness() const = 0;

  // Strong convexity parameter measured in the smoothness-weighted norm.
  // Exact mode returns the smallest eigenvalue (clamped at 0);
  // SmallestPositive ignores the near-null eigenvalues of a rank deficient
  // problem.  Throws for objectives without a computable value.
  virtual double strong_convexity(StrongMode mode) const = 0;

  virtual std::unique_ptr<GradientCache> make_cache(
      const Eigen::VectorXd& x0) const = 0;

  long dim() const { return smoothness().dim(); }
};

}  // namespace cdkit
