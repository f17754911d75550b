#pragma once

#include <Eigen/Core>

namespace cdkit {

// Per-coordinate smoothness constants L_i > 0 of the objective, together
// with the reciprocal powers the solvers need on the hot path.
class Smoothness {
 public:
  explicit Smoothness(Eigen::VectorXd l);

  long dim() const { return l_.size(); }
  double operator[](long i) const { return l_[i]; }
  const Eigen::VectorXd& values() const { return l_; }
  double inv(long i) const { return inv_[i]; }
  double inv_sqrt(long i) const { return inv_sqrt_[i]; }

 private:
  Eigen::VectorXd l_;
  Eigen::VectorXd inv_;
  Eigen::VectorXd inv_sqrt_;
};

// One step of the acceleration schedule: given theta_k in (0, 1], returns
// the unique theta_{k+1} in (0, 1) with (1 - t)/t^2 = 1/theta_k^2, i.e.
//   theta_{k+1} = (theta_k / 2) * (sqrt(theta_k^2 + 4) - theta_k).
// Starting from theta_0 = 1 the sequence satisfies theta_k <= 2/(k+2).
double theta_next(double theta);

// Running schedule state.  theta() is the value the *next* iteration will
// use; k() counts how many times advance() ran.
class ThetaSchedule {
 public:
  double theta() const { return theta_; }
  long k() const { return k_; }
  void advance() {
    theta_ = theta_next(theta_);
    ++k_;
  }

 private:
  double theta_ = 1.0;
  long k_ = 0;
};

// Constants of the strongly convex variant for a problem with dim
// coordinates and strong convexity parameter mu (measured in the L-weighted
// norm, so 0 < mu <= 1):
//   a = sqrt(mu) / (dim + sqrt(mu)),   b = mu * a / dim^2.
// They satisfy a^2 <= (1 - a) * (a^2 + b), which is what makes the
// per-iteration contraction by (1 - a) go through.
struct StrongParams {
  double mu = 0.0;
  double a = 0.0;
  double b = 0.0;
  long dim = 0;
};

StrongParams strong_params(double mu, long dim);

// ||v||_L^2 = sum_i L_i v_i^2 and its dual ||g||_{L^-1}^2 = sum_i g_i^2/L_i.
double weighted_norm_sq(const Eigen::VectorXd& v, const Smoothness& l);
double weighted_inv_norm_sq(const Eigen::VectorXd& g, const Smoothness& l);

}  // namespace cdkit
