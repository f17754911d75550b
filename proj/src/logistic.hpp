#pragma once

#include "dataset.hpp"
#include "problem.hpp"

namespace cdkit {

// f(beta) = (1/n) sum_i log(1 + exp(-y_i x_i^T beta)) with labels in
// {-1,+1}.  The design is kept column-major sparse; the solver-facing cache
// stores per-sample margins m_i = y_i x_i^T beta, so a coordinate step is a
// rank-one margin update touching one column.  L_i = ||X_{.i}||^2 / (4n).
class LogisticProblem final : public Problem {
 public:
  LogisticProblem(Eigen::SparseMatrix<double> x, Eigen::VectorXd labels);
  static LogisticProblem from_dataset(const Dataset& d);

  long samples() const override { return x_.rows(); }
  double value(const Eigen::VectorXd& beta) const override;
  Eigen::VectorXd gradient(const Eigen::VectorXd& beta) const override;
  double coordinate_gradient(const Eigen::VectorXd& beta,
                             long i) const override;
  const Smoothness& smoothness() const override { return smooth_; }
  double strong_convexity(StrongMode mode) const override;
  std::unique_ptr<GradientCache> make_cache(
      const Eigen::VectorXd& x0) const override;

  const Eigen::SparseMatrix<double>& design() const { return x_; }
  const Eigen::VectorXd& labels() const { return labels_; }

  // margins m = labels .* (X beta)
  Eigen::VectorXd margins(const Eigen::VectorXd& beta) const;
  double value_from_margins(const Eigen::VectorXd& m) const;
  void gradient_from_margins(const Eigen::VectorXd& m,
                             Eigen::VectorXd& out) const;

 private:
  Eigen::SparseMatrix<double> x_;
  Eigen::VectorXd labels_;
  Smoothness smooth_;
};

}  // namespace cdkit
