#pragma once

#include "dataset.hpp"
#include "problem.hpp"

namespace cdkit {

// f(beta) = ||y - X beta||^2 (no 1/2 factor), so the Hessian is 2 X^T X and
// the coordinate smoothness constants are L_i = 2 (X^T X)_{ii}.  The Gram
// matrix and X^T y are formed once; after that every coordinate operation
// touches a single Gram column.
class LeastSquaresProblem final : public Problem {
 public:
  LeastSquaresProblem(Eigen::MatrixXd x, Eigen::VectorXd y);
  static LeastSquaresProblem from_dataset(const Dataset& d);

  long samples() const override { return x_.rows(); }
  double value(const Eigen::VectorXd& beta) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& beta) const override;
  double coordinate_gradient(const Eigen::VectorXd& beta,
                             long i) const override;
  const Smoothness& smoothness() const override { return smooth_; }
  double strong_convexity(StrongMode mode) const override;
  std::unique_ptr<GradientCache> make_cache(
      const Eigen::VectorXd& x0) const override;

  const Eigen::MatrixXd& gram() const { return gram_; }
  const Eigen::VectorXd& gram_y() const { return gram_y_; }

 private:
  Eigen::MatrixXd x_;
  Eigen::VectorXd y_;
  Eigen::MatrixXd gram_;
  Eigen::VectorXd gram_y_;
  Smoothness smooth_;
};

}  // namespace cdkit
