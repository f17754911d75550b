#include "problem.hpp"

#include <cmath>

#include "errors.hpp"

namespace cdkit {

void GradientCache::combine_pair(Eigen::VectorXd& a, Eigen::VectorXd& b,
                                 double aa, double ab, double ba, double bb,
                                 Eigen::VectorXd& ta, Eigen::VectorXd& tb) {
  ta = aa * a + ab * b;
  tb = ba * a + bb * b;
  a.swap(ta);
  b.swap(tb);
}

void GradientCache::transform(double axx, double axz, double azx, double azz) {
  if (std::abs(axx + axz - 1.0) > 1e-9 || std::abs(azx + azz - 1.0) > 1e-9)
    fail(Errc::invalid_argument, "transform rows must sum to 1");
  combine_pair(x_, z_, axx, axz, azx, azz, tx_, tz_);
  on_transform(axx, axz, azx, azz);
  bump();
}

void GradientCache::step(Which w, long i, double h) {
  if (i < 0 || i >= dim())
    fail(Errc::invalid_argument, "coordinate index out of range");
  (w == Which::X ? x_ : z_)[i] += h;
  on_step(w, i, h);
  bump();
}

void GradientCache::refresh() {
  on_refresh();
  mutations_ = 0;
}

void GradientCache::set_refresh_period(long period) {
  if (period < 1) fail(Errc::invalid_argument, "refresh period must be >= 1");
  period_ = period;
}

void GradientCache::bump() {
  if (++mutations_ >= period_) refresh();
}

}  // namespace cdkit
