#include "numerics.hpp"

#include <cmath>

#include "errors.hpp"

namespace cdkit {

Smoothness::Smoothness(Eigen::VectorXd l) : l_(std::move(l)) {
  if (l_.size() == 0)
    fail(Errc::invalid_argument, "smoothness vector must be nonempty");
  for (long i = 0; i < l_.size(); ++i) {
    if (!(l_[i] > 0.0) || !std::isfinite(l_[i]))
      fail(Errc::invalid_argument,
           "smoothness constant " + std::to_string(i) +
               " is not positive and finite");
  }
  inv_ = l_.cwiseInverse();
  inv_sqrt_ = inv_.cwiseSqrt();
}

double theta_next(double theta) {
  if (!(theta > 0.0) || theta > 1.0)
    fail(Errc::invalid_argument, "theta must lie in (0, 1]");
  // Positive root of t^2/theta^2 + t - 1 = 0, written to avoid cancellation.
  return 0.5 * theta * (std::sqrt(theta * theta + 4.0) - theta);
}

StrongParams strong_params(double mu, long dim) {
  if (dim < 1) fail(Errc::invalid_argument, "dim must be at least 1");
  if (!(mu > 0.0) || mu > 1.0)
    fail(Errc::invalid_argument,
         "strong convexity parameter must lie in (0, 1]");
  double root = std::sqrt(mu);
  double n = static_cast<double>(dim);
  StrongParams p;
  p.mu = mu;
  p.a = root / (n + root);
  p.b = mu * p.a / (n * n);
  p.dim = dim;
  return p;
}

double weighted_norm_sq(const Eigen::VectorXd& v, const Smoothness& l) {
  if (v.size() != l.dim())
    fail(Errc::dimension_mismatch, "weighted_norm_sq: size mismatch");
  return v.array().square().matrix().dot(l.values());
}

double weighted_inv_norm_sq(const Eigen::VectorXd& g, const Smoothness& l) {
  if (g.size() != l.dim())
    fail(Errc::dimension_mismatch, "weighted_inv_norm_sq: size mismatch");
  double acc = 0.0;
  for (long i = 0; i < g.size(); ++i) acc += g[i] * g[i] * l.inv(i);
  return acc;
}

}  // namespace cdkit
