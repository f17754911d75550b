#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "numerics.hpp"
#include "problem.hpp"
#include "rng.hpp"

namespace cdkit {

// Agcd: both coordinates greedy.  Ascd: x-step greedy, z-step random.
// Arcd: one random draw drives both.  Gcd: plain greedy descent, single
// sequence, no acceleration.
enum class Variant { Agcd, Ascd, Arcd, Gcd };

// Plain uses the decaying theta schedule; Strong uses the constant (a, b)
// pair derived from an explicit strong convexity parameter.
enum class Mode { Plain, Strong };

// Greedy rule: argmax_i |g_i| / sqrt(L_i), smallest index on ties.
long select_greedy(const Eigen::VectorXd& grad, const Smoothness& l);

// One unbiased draw from {0, ..., dim-1}.
long select_random(Rng& rng, long dim);

struct RunOptions {
  long iters = 0;
  std::uint64_t seed = 0;
  long record_period = 1;
  // With a reference optimum the trace carries gaps, energies and the
  // per-iteration ratio summands; without one those fields stay NaN.
  std::optional<double> f_ref;
  std::optional<Eigen::VectorXd> x_ref;
  // Verify f(x^{k+1}) <= f(y^k) - g_{j1}^2 / (2 L_{j1}) + 1e-10 every step.
  bool check_descent = false;
  long cache_refresh_period = 1000;
  // Abort when f exceeds (|f(x^0)| + 1) * divergence_factor at a record.
  double divergence_factor = 1e12;
};

// State snapshot after k iterations.  j1/j2/theta_or_a and the ratio
// summands describe the step that produced this state, so they are -1/NaN
// on the k = 0 record.  j2 is -1 for Gcd (no second sequence).
struct TraceRecord {
  long k = 0;
  double elapsed_s = 0.0;
  double f = std::numeric_limits<double>::quiet_NaN();
  double gap = std::numeric_limits<double>::quiet_NaN();
  long j1 = -1;
  long j2 = -1;
  double theta_or_a = std::numeric_limits<double>::quiet_NaN();
  double gamma_num = std::numeric_limits<double>::quiet_NaN();
  double gamma_den = std::numeric_limits<double>::quiet_NaN();
  double energy = std::numeric_limits<double>::quiet_NaN();
};

struct Trace {
  Variant variant = Variant::Arcd;
  Mode mode = Mode::Plain;
  long dim = 0;
  long iters = 0;
  bool has_f_ref = false;
  bool has_x_ref = false;
  long descent_violations = 0;
  // Ratio summands accumulated over every iteration, independent of the
  // record period.
  double gamma_num_total = 0.0;
  double gamma_den_total = 0.0;
  std::vector<TraceRecord> records;
};

// Stepper driving one solver run.  Exposed separately from run() so tests
// can inspect single iterations; run() adds timing, records and guards.
class CoordinateDescentRun {
 public:
  // mu is consumed only in Strong mode (and ignored for Gcd, which has no
  // accelerated sequence to parameterize).
  CoordinateDescentRun(const Problem& problem, Variant variant, Mode mode,
                       double mu, const Eigen::VectorXd& x0,
                       const RunOptions& opts);

  void step();
  TraceRecord record() const;  // fresh f(x); not counted in elapsed time

  const Eigen::VectorXd& x() const { return cache_->x(); }
  const Eigen::VectorXd& z() const { return cache_->z(); }
  GradientCache& cache() { return *cache_; }
  long k() const { return k_; }
  double theta() const { return schedule_.theta(); }
  const StrongParams& strong() const { return strong_; }
  long descent_violations() const { return descent_violations_; }
  double gamma_num_total() const { return gnum_total_; }
  double gamma_den_total() const { return gden_total_; }

 private:
  void step_plain();
  void step_strong();
  void step_gcd();
  long pick_j1();
  void accumulate_gamma(double weight, long j2, double g2);

  const Problem& problem_;
  Variant variant_;
  Mode mode_;
  long dim_;
  std::unique_ptr<GradientCache> cache_;
  ThetaSchedule schedule_;
  StrongParams strong_;
  Rng rng_;

  std::optional<double> f_ref_;
  std::optional<Eigen::VectorXd> x_ref_;
  bool check_descent_;
  long descent_violations_ = 0;

  Eigen::VectorXd grad_y_;  // scratch, valid when the step needed it
  long k_ = 0;
  long last_j1_ = -1;
  long last_j2_ = -1;
  double last_w_ = std::numeric_limits<double>::quiet_NaN();
  double last_gnum_ = std::numeric_limits<double>::quiet_NaN();
  double last_gden_ = std::numeric_limits<double>::quiet_NaN();
  double gnum_total_ = 0.0;
  double gden_total_ = 0.0;
};

// Runs `opts.iters` iterations from x0, recording state 0, every
// record_period-th state and the final state.  Wall clock covers the step
// loop only.  Throws Errc::numeric if f turns NaN/Inf or diverges.
Trace run(const Problem& problem, Variant variant, Mode mode, double mu,
          const Eigen::VectorXd& x0, const RunOptions& opts);

}  // namespace cdkit
