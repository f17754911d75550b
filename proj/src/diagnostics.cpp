#include "diagnostics.hpp"

#include <cmath>

#include "errors.hpp"
#include "least_squares.hpp"
#include "logistic.hpp"

namespace cdkit {

double bound_plain(long k, long dim, double r_sq) {
  if (k < 0 || dim < 1 || !(r_sq >= 0.0))
    fail(Errc::invalid_argument, "bound_plain: bad arguments");
  double n = static_cast<double>(dim);
  double kk = static_cast<double>(k) + 1.0;
  return 2.0 * n * n * r_sq / (kk * kk);
}

double bound_agcd(long k, long dim, double gamma, double r_sq) {
  if (!(gamma > 0.0) || gamma > 1.0)
    fail(Errc::invalid_argument,
         "bound_agcd: gamma must lie in (0, 1]; the guarantee does not "
         "cover larger values");
  return gamma * bound_plain(k, dim, r_sq);
}

double bound_strong(long k, double a, double initial_energy) {
  if (k < 0 || !(a > 0.0) || a >= 1.0 || !(initial_energy >= 0.0))
    fail(Errc::invalid_argument, "bound_strong: bad arguments");
  return std::pow(1.0 - a, static_cast<double>(k)) * initial_energy;
}

double lyapunov_coefficient(double theta, long dim) {
  if (!(theta > 0.0) || theta > 1.0 || dim < 1)
    fail(Errc::invalid_argument, "lyapunov_coefficient: bad arguments");
  double n = static_cast<double>(dim);
  return (1.0 - theta) / (n * n * theta * theta);
}

double lyapunov_energy(double f, double f_ref, const Eigen::VectorXd& z,
                       const Eigen::VectorXd& x_ref, double a_k,
                       const Smoothness& l) {
  return a_k * (f - f_ref) + 0.5 * weighted_norm_sq(x_ref - z, l);
}

double strong_energy(double f, double f_ref, const Eigen::VectorXd& z,
                     const Eigen::VectorXd& x_ref, const StrongParams& sp,
                     const Smoothness& l) {
  double n = static_cast<double>(sp.dim);
  return (f - f_ref) + 0.5 * n * n * (sp.a * sp.a + sp.b) *
                           weighted_norm_sq(z - x_ref, l);
}

GammaEstimate estimate_gamma(const Trace& trace, long k_bar) {
  if (k_bar < 0) fail(Errc::invalid_argument, "k_bar must be >= 0");
  if (!trace.has_x_ref)
    fail(Errc::invalid_argument,
         "gamma estimation needs a trace produced with a reference point");
  if (trace.variant == Variant::Gcd)
    fail(Errc::invalid_argument, "gamma is undefined for the plain baseline");
  long count = static_cast<long>(trace.records.size());
  for (long i = 0; i < count; ++i)
    if (trace.records[i].k != i)
      fail(Errc::invalid_argument,
           "gamma estimation needs a dense trace (record_period 1)");
  long last_k = count - 1;
  if (last_k <= k_bar)
    fail(Errc::invalid_argument,
         "trace ends at k = " + std::to_string(last_k) +
             ", not beyond the burn-in k_bar = " + std::to_string(k_bar));

  GammaEstimate est;
  est.k_bar = k_bar;
  double snum = 0.0, sden = 0.0;
  bool found = false;
  for (long k = 1; k <= last_k; ++k) {
    const TraceRecord& rec = trace.records[k];
    snum += rec.gamma_num;
    sden += rec.gamma_den;
    est.ks.push_back(k);
    est.num_cum.push_back(snum);
    est.den_cum.push_back(sden);
    bool positive = sden > 0.0;
    est.ratio.push_back(positive ? snum / sden
                                 : std::numeric_limits<double>::quiet_NaN());
    if (k >= k_bar) {
      if (!positive) {
        ++est.sign_violations;
      } else if (!found || snum / sden > est.gamma) {
        est.gamma = snum / sden;
        found = true;
      }
    }
  }
  if (!found)
    fail(Errc::numeric,
         "every cumulative denominator beyond k_bar is nonpositive");
  return est;
}

namespace {

// Conjugate gradients on gram * beta = rhs from zero.  The Gram system is
// always consistent (rhs lies in the range), so this converges even when
// gram is singular, and the zero start makes the limit the minimum norm
// solution.
Reference solve_least_squares(const LeastSquaresProblem& p) {
  const Eigen::MatrixXd& gram = p.gram();
  const Eigen::VectorXd& rhs = p.gram_y();
  long dim = p.dim();
  double tol = 1e-12 * std::max(1.0, rhs.lpNorm<Eigen::Infinity>());
  long max_iter = 20 * dim + 50;

  Reference ref;
  ref.x_ref = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd r = rhs;
  Eigen::VectorXd pv = r;
  Eigen::VectorXd ap(dim);
  double rs = r.squaredNorm();
  bool converged = r.lpNorm<Eigen::Infinity>() <= tol;
  long it = 0;
  while (!converged && it < max_iter) {
    ap.noalias() = gram * pv;
    double pap = pv.dot(ap);
    if (!(pap > 0.0)) break;  // numerically hit the null space
    double alpha = rs / pap;
    ref.x_ref += alpha * pv;
    r -= alpha * ap;
    ++it;
    if (r.lpNorm<Eigen::Infinity>() <= tol) {
      converged = true;
      break;
    }
    double rs_new = r.squaredNorm();
    pv = r + (rs_new / rs) * pv;
    rs = rs_new;
  }
  ref.iterations = it;
  ref.low_confidence = !converged;
  ref.f_ref = p.value(ref.x_ref);
  return ref;
}

// Greedy strongly convex run with a vanishing mu, stopped on a flat
// gradient.  Separable data never gets there, which is exactly what the
// low confidence flag is for.
Reference solve_logistic(const LogisticProblem& p) {
  constexpr double kMu = 1e-10;
  constexpr double kGradTol = 1e-12;
  constexpr long kCap = 200000;
  constexpr long kCheckEvery = 1000;

  RunOptions opts;  // no refs, no records; the stepper is driven directly
  CoordinateDescentRun run(p, Variant::Agcd, Mode::Strong, kMu,
                           Eigen::VectorXd::Zero(p.dim()), opts);
  Reference ref;
  ref.low_confidence = true;
  while (run.k() < kCap) {
    run.step();
    if (run.k() % kCheckEvery == 0) {
      double gnorm = p.gradient(run.x()).lpNorm<Eigen::Infinity>();
      if (gnorm <= kGradTol) {
        // A flat gradient with every margin positive means the iterate
        // separates the data: the true optimum is at infinity and the
        // gradient only vanished because the weights underflowed.
        ref.low_confidence = p.margins(run.x()).minCoeff() > 0.0;
        break;
      }
    }
  }
  ref.iterations = run.k();
  ref.x_ref = run.x();
  ref.f_ref = p.value(ref.x_ref);
  return ref;
}

}  // namespace

Reference reference_solve(const Problem& problem) {
  if (auto* ls = dynamic_cast<const LeastSquaresProblem*>(&problem))
    return solve_least_squares(*ls);
  if (auto* lg = dynamic_cast<const LogisticProblem*>(&problem))
    return solve_logistic(*lg);
  fail(Errc::invalid_argument, "no reference solver for this objective");
}

}  // namespace cdkit
