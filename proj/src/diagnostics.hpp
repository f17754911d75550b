#pragma once

#include <Eigen/Core>
#include <vector>

#include "numerics.hpp"
#include "problem.hpp"
#include "solver.hpp"

namespace cdkit {

// Upper envelopes on the expected optimality gap after k iterations, with
// r_sq = ||x* - x^0||_L^2.

// Plain accelerated run: 2 dim^2 r_sq / (k+1)^2.
double bound_plain(long k, long dim, double r_sq);

// Greedy variant under an estimated ratio gamma in (0, 1]; values above 1
// are a domain error because the guarantee no longer holds.
double bound_agcd(long k, long dim, double gamma, double r_sq);

// Strongly convex variant: (1 - a)^k * initial_energy.
double bound_strong(long k, double a, double initial_energy);

// Potential tracked by the plain variants.  a_k = (1 - theta_k)/(dim theta_k)^2
// with theta_k the schedule value at state k, so a_0 = 0.
double lyapunov_coefficient(double theta, long dim);
double lyapunov_energy(double f, double f_ref, const Eigen::VectorXd& z,
                       const Eigen::VectorXd& x_ref, double a_k,
                       const Smoothness& l);

// Potential contracted by the strongly convex variants:
// f - f* + (dim^2 / 2)(a^2 + b) ||z - x*||_L^2.
double strong_energy(double f, double f_ref, const Eigen::VectorXd& z,
                     const Eigen::VectorXd& x_ref, const StrongParams& sp,
                     const Smoothness& l);

// Empirical estimate of the ratio between the two cumulative sums whose
// ordering the greedy guarantee needs.  Works on a dense trace (every
// state recorded); ratios before the burn-in k_bar are kept for plotting
// but only k >= k_bar contributes to gamma and the violation count.
struct GammaEstimate {
  double gamma = 0.0;
  long k_bar = 0;
  long sign_violations = 0;  // states k >= k_bar with nonpositive denominator
  std::vector<long> ks;      // state indices, starting at 1
  std::vector<double> num_cum;
  std::vector<double> den_cum;
  std::vector<double> ratio;  // NaN where the denominator is nonpositive
};

GammaEstimate estimate_gamma(const Trace& trace, long k_bar);

// High accuracy optimum used as the reference for gaps.  Least squares is
// solved by conjugate gradients on the Gram system (from zero, so a rank
// deficient problem yields the minimum norm solution); logistic runs the
// greedy strongly convex variant with a tiny mu until the gradient is flat.
// low_confidence is set when the iteration cap was hit first, or when the
// final iterate separates the labels (the logistic optimum then sits at
// infinity and the flat gradient is an underflow artifact).
struct Reference {
  double f_ref = 0.0;
  Eigen::VectorXd x_ref;
  bool low_confidence = false;
  long iterations = 0;
};

Reference reference_solve(const Problem& problem);

}  // namespace cdkit
