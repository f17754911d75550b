#include "least_squares.hpp"

#include <Eigen/Eigenvalues>
#include <string>

#include "errors.hpp"

namespace cdkit {

namespace {

Eigen::MatrixXd checked_design(Eigen::MatrixXd x, const Eigen::VectorXd& y) {
  if (x.rows() < 1 || x.cols() < 1)
    fail(Errc::invalid_argument, "least squares needs a nonempty design");
  if (x.rows() != y.size())
    fail(Errc::dimension_mismatch, "design rows and response size differ");
  return x;
}

Eigen::VectorXd smoothness_from_gram(const Eigen::MatrixXd& gram) {
  for (long i = 0; i < gram.rows(); ++i) {
    if (!(gram(i, i) > 0.0))
      fail(Errc::degenerate,
           "design column " + std::to_string(i) + " has zero norm");
  }
  return 2.0 * gram.diagonal();
}

class LsCache final : public GradientCache {
 public:
  LsCache(const LeastSquaresProblem& p, Eigen::VectorXd x0)
      : GradientCache(std::move(x0)),
        p_(p),
        gx_(p.dim()),
        gz_(p.dim()),
        ta_(p.dim()),
        tb_(p.dim()) {
    refresh();
  }

  double coord_gradient_combo(double theta, long i) const override {
    return (1.0 - theta) * gx_[i] + theta * gz_[i];
  }

  void gradient_combo(double theta, Eigen::VectorXd& out) const override {
    out = (1.0 - theta) * gx_ + theta * gz_;
  }

 private:
  void on_transform(double axx, double axz, double azx, double azz) override {
    combine_pair(gx_, gz_, axx, axz, azx, azz, ta_, tb_);
  }

  void on_step(Which w, long i, double h) override {
    (w == Which::X ? gx_ : gz_).noalias() += (2.0 * h) * p_.gram().col(i);
  }

  void on_refresh() override {
    gx_.noalias() = 2.0 * (p_.gram() * x());
    gx_ -= 2.0 * p_.gram_y();
    gz_.noalias() = 2.0 * (p_.gram() * z());
    gz_ -= 2.0 * p_.gram_y();
  }

  const LeastSquaresProblem& p_;
  Eigen::VectorXd gx_, gz_, ta_, tb_;
};

}  // namespace

LeastSquaresProblem::LeastSquaresProblem(Eigen::MatrixXd x, Eigen::VectorXd y)
    : x_(checked_design(std::move(x), y)),
      y_(std::move(y)),
      gram_(x_.transpose() * x_),
      gram_y_(x_.transpose() * y_),
      smooth_(smoothness_from_gram(gram_)) {}

LeastSquaresProblem LeastSquaresProblem::from_dataset(const Dataset& d) {
  if (d.sparse) return LeastSquaresProblem(Eigen::MatrixXd(d.sp), d.target);
  return LeastSquaresProblem(d.dense, d.target);
}

double LeastSquaresProblem::value(const Eigen::VectorXd& beta) const {
  if (beta.size() != dim())
    fail(Errc::dimension_mismatch, "value: beta has wrong size");
  return (y_ - x_ * beta).squaredNorm();
}

Eigen::VectorXd LeastSquaresProblem::gradient(
    const Eigen::VectorXd& beta) const {
  if (beta.size() != dim())
    fail(Errc::dimension_mismatch, "gradient: beta has wrong size");
  return 2.0 * (gram_ * beta - gram_y_);
}

double LeastSquaresProblem::coordinate_gradient(const Eigen::VectorXd& beta,
                                                long i) const {
  if (beta.size() != dim())
    fail(Errc::dimension_mismatch, "coordinate_gradient: beta has wrong size");
  if (i < 0 || i >= dim())
    fail(Errc::invalid_argument, "coordinate index out of range");
  return 2.0 * (gram_.col(i).dot(beta) - gram_y_[i]);
}

double LeastSquaresProblem::strong_convexity(StrongMode mode) const {
  // Eigenvalues of D^{-1/2} (2 X^T X) D^{-1/2} with D = diag(L); the unit
  // diagonal makes trace = dim, so the largest eigenvalue is >= 1.
  Eigen::MatrixXd m = 2.0 * gram_;
  for (long i = 0; i < dim(); ++i)
    for (long j = 0; j < dim(); ++j)
      m(i, j) *= smooth_.inv_sqrt(i) * smooth_.inv_sqrt(j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
  if (mode == StrongMode::Exact) return std::max(ev(0), 0.0);
  double cutoff = 1e-10 * ev(ev.size() - 1);
  for (long i = 0; i < ev.size(); ++i)
    if (ev(i) > cutoff) return ev(i);
  fail(Errc::degenerate, "no eigenvalue above the rank cutoff");
}

std::unique_ptr<GradientCache> LeastSquaresProblem::make_cache(
    const Eigen::VectorXd& x0) const {
  if (x0.size() != dim())
    fail(Errc::dimension_mismatch, "make_cache: x0 has wrong size");
  return std::make_unique<LsCache>(*this, x0);
}

}  // namespace cdkit
