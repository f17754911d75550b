#include "solver.hpp"

#include <chrono>
#include <cmath>

#include "diagnostics.hpp"
#include "errors.hpp"

namespace cdkit {

long select_greedy(const Eigen::VectorXd& grad, const Smoothness& l) {
  if (grad.size() != l.dim())
    fail(Errc::dimension_mismatch, "select_greedy: size mismatch");
  long best = 0;
  double best_score = std::abs(grad[0]) * l.inv_sqrt(0);
  for (long i = 1; i < grad.size(); ++i) {
    double score = std::abs(grad[i]) * l.inv_sqrt(i);
    if (score > best_score) {  // strict: ties keep the smallest index
      best_score = score;
      best = i;
    }
  }
  return best;
}

long select_random(Rng& rng, long dim) {
  if (dim < 1) fail(Errc::invalid_argument, "select_random: dim must be >= 1");
  return static_cast<long>(rng.uniform_below(static_cast<std::uint64_t>(dim)));
}

CoordinateDescentRun::CoordinateDescentRun(const Problem& problem,
                                           Variant variant, Mode mode,
                                           double mu,
                                           const Eigen::VectorXd& x0,
                                           const RunOptions& opts)
    : problem_(problem),
      variant_(variant),
      mode_(mode),
      dim_(problem.dim()),
      cache_(problem.make_cache(x0)),
      rng_(opts.seed),
      f_ref_(opts.f_ref),
      x_ref_(opts.x_ref),
      check_descent_(opts.check_descent) {
  if (mode_ == Mode::Strong && variant_ != Variant::Gcd)
    strong_ = strong_params(mu, dim_);
  if (x_ref_ && x_ref_->size() != dim_)
    fail(Errc::dimension_mismatch, "x_ref has wrong size");
  cache_->set_refresh_period(opts.cache_refresh_period);
}

long CoordinateDescentRun::pick_j1() {
  if (variant_ == Variant::Arcd) return select_random(rng_, dim_);
  // Greedy variants score the y gradient; grad_y_ is already filled.
  return select_greedy(grad_y_, problem_.smoothness());
}

void CoordinateDescentRun::accumulate_gamma(double weight, long j2,
                                            double g2) {
  const Eigen::VectorXd& z = cache_->z();
  double num = grad_y_.dot(z - *x_ref_) / weight;
  double den = static_cast<double>(dim_) * g2 * (z[j2] - (*x_ref_)[j2]) /
               weight;
  last_gnum_ = num;
  last_gden_ = den;
  gnum_total_ += num;
  gden_total_ += den;
}

void CoordinateDescentRun::step_plain() {
  const Smoothness& l = problem_.smoothness();
  double theta = schedule_.theta();

  // Both gradient coordinates are read at y^k before any state mutates.
  bool need_full = variant_ != Variant::Arcd || x_ref_.has_value();
  if (need_full) cache_->gradient_combo(theta, grad_y_);

  long j1 = pick_j1();
  double g1 = need_full ? grad_y_[j1] : cache_->coord_gradient_combo(theta, j1);
  long j2;
  double g2;
  if (variant_ == Variant::Ascd) {
    j2 = select_random(rng_, dim_);
    g2 = need_full ? grad_y_[j2] : cache_->coord_gradient_combo(theta, j2);
  } else {  // Agcd and Arcd reuse the x-step coordinate
    j2 = j1;
    g2 = g1;
  }

  if (x_ref_) accumulate_gamma(theta, j2, g2);

  double f_y = 0.0;
  if (check_descent_) f_y = problem_.value(cache_->combined(theta));

  // x <- y, z unchanged, then the two coordinate steps.
  cache_->transform(1.0 - theta, theta, 0.0, 1.0);
  cache_->step(Which::X, j1, -g1 * l.inv(j1));
  cache_->step(Which::Z, j2,
               -g2 * l.inv(j2) / (static_cast<double>(dim_) * theta));

  if (check_descent_) {
    double f_new = problem_.value(cache_->x());
    if (f_new > f_y - 0.5 * g1 * g1 * l.inv(j1) + 1e-10) ++descent_violations_;
  }

  last_j1_ = j1;
  last_j2_ = j2;
  last_w_ = theta;
  schedule_.advance();
}

void CoordinateDescentRun::step_strong() {
  const Smoothness& l = problem_.smoothness();
  double a = strong_.a;
  double b = strong_.b;

  bool need_full = variant_ != Variant::Arcd || x_ref_.has_value();
  if (need_full) cache_->gradient_combo(a, grad_y_);

  long j1 = pick_j1();
  double g1 = need_full ? grad_y_[j1] : cache_->coord_gradient_combo(a, j1);
  long j2;
  double g2;
  if (variant_ == Variant::Ascd) {
    j2 = select_random(rng_, dim_);
    g2 = need_full ? grad_y_[j2] : cache_->coord_gradient_combo(a, j2);
  } else {
    j2 = j1;
    g2 = g1;
  }

  if (x_ref_) accumulate_gamma(a, j2, g2);

  double f_y = 0.0;
  if (check_descent_) f_y = problem_.value(cache_->combined(a));

  // x <- y and z <- u = cz z + cy y, both relative to the old pair.
  double cz = a * a / (a * a + b);
  double cy = b / (a * a + b);
  cache_->transform(1.0 - a, a, cy * (1.0 - a), cz + cy * a);
  cache_->step(Which::X, j1, -g1 * l.inv(j1));
  cache_->step(Which::Z, j2,
               -g2 * a * l.inv(j2) /
                   ((a * a + b) * static_cast<double>(dim_)));

  if (check_descent_) {
    double f_new = problem_.value(cache_->x());
    if (f_new > f_y - 0.5 * g1 * g1 * l.inv(j1) + 1e-10) ++descent_violations_;
  }

  last_j1_ = j1;
  last_j2_ = j2;
  last_w_ = a;
}

void CoordinateDescentRun::step_gcd() {
  const Smoothness& l = problem_.smoothness();
  cache_->gradient_combo(0.0, grad_y_);  // gradient at x
  long j = select_greedy(grad_y_, l);
  double g = grad_y_[j];

  double f_old = 0.0;
  if (check_descent_) f_old = problem_.value(cache_->x());

  cache_->step(Which::X, j, -g * l.inv(j));

  if (check_descent_) {
    double f_new = problem_.value(cache_->x());
    if (f_new > f_old - 0.5 * g * g * l.inv(j) + 1e-10) ++descent_violations_;
  }

  last_j1_ = j;
  last_j2_ = -1;
  last_w_ = std::numeric_limits<double>::quiet_NaN();
}

void CoordinateDescentRun::step() {
  if (variant_ == Variant::Gcd) {
    step_gcd();
  } else if (mode_ == Mode::Strong) {
    step_strong();
  } else {
    step_plain();
  }
  ++k_;
}

TraceRecord CoordinateDescentRun::record() const {
  TraceRecord r;
  r.k = k_;
  r.f = problem_.value(cache_->x());
  r.j1 = last_j1_;
  r.j2 = last_j2_;
  r.theta_or_a = last_w_;
  r.gamma_num = last_gnum_;
  r.gamma_den = last_gden_;
  if (f_ref_) r.gap = r.f - *f_ref_;
  if (f_ref_ && x_ref_ && variant_ != Variant::Gcd) {
    const Smoothness& l = problem_.smoothness();
    if (mode_ == Mode::Plain) {
      double a_k = lyapunov_coefficient(schedule_.theta(), dim_);
      r.energy = lyapunov_energy(r.f, *f_ref_, cache_->z(), *x_ref_, a_k, l);
    } else {
      r.energy = strong_energy(r.f, *f_ref_, cache_->z(), *x_ref_, strong_, l);
    }
  }
  return r;
}

Trace run(const Problem& problem, Variant variant, Mode mode, double mu,
          const Eigen::VectorXd& x0, const RunOptions& opts) {
  if (opts.iters < 0) fail(Errc::invalid_argument, "iters must be >= 0");
  if (opts.record_period < 1)
    fail(Errc::invalid_argument, "record_period must be >= 1");
  if (x0.size() != problem.dim())
    fail(Errc::dimension_mismatch, "x0 has wrong size");

  CoordinateDescentRun r(problem, variant, mode, mu, x0, opts);

  Trace t;
  t.variant = variant;
  t.mode = mode;
  t.dim = problem.dim();
  t.iters = opts.iters;
  t.has_f_ref = opts.f_ref.has_value();
  t.has_x_ref = opts.x_ref.has_value();

  TraceRecord first = r.record();
  if (!std::isfinite(first.f))
    fail(Errc::numeric, "objective is not finite at the start");
  double limit = (std::abs(first.f) + 1.0) * opts.divergence_factor;
  t.records.push_back(first);

  double elapsed = 0.0;
  using clock = std::chrono::steady_clock;
  for (long k = 1; k <= opts.iters; ++k) {
    auto t0 = clock::now();
    r.step();
    elapsed += std::chrono::duration<double>(clock::now() - t0).count();
    if (k % opts.record_period == 0 || k == opts.iters) {
      TraceRecord rec = r.record();
      rec.elapsed_s = elapsed;
      if (!std::isfinite(rec.f))
        fail(Errc::numeric,
             "objective became NaN/Inf at iteration " + std::to_string(k));
      if (rec.f > limit)
        fail(Errc::numeric,
             "run diverged: f exceeded its divergence limit at iteration " +
                 std::to_string(k));
      t.records.push_back(rec);
    }
  }

  t.descent_violations = r.descent_violations();
  t.gamma_num_total = r.gamma_num_total();
  t.gamma_den_total = r.gamma_den_total();
  return t;
}

}  // namespace cdkit
