#include "logistic.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace cdkit {

namespace {

// log(1 + exp(-m)) without overflow anywhere on the real line.
double loss_term(double m) {
  if (m >= 0.0) return std::log1p(std::exp(-m));
  return -m + std::log1p(std::exp(m));
}

Eigen::SparseMatrix<double> checked_design(Eigen::SparseMatrix<double> x,
                                           const Eigen::VectorXd& labels) {
  if (x.rows() < 1 || x.cols() < 1)
    fail(Errc::invalid_argument, "logistic needs a nonempty design");
  if (x.rows() != labels.size())
    fail(Errc::dimension_mismatch, "design rows and label count differ");
  for (long i = 0; i < labels.size(); ++i)
    if (labels[i] != 1.0 && labels[i] != -1.0)
      fail(Errc::invalid_argument, "labels must be +1 or -1");
  x.makeCompressed();
  return x;
}

Eigen::VectorXd smoothness_from_design(const Eigen::SparseMatrix<double>& x) {
  double n = static_cast<double>(x.rows());
  Eigen::VectorXd l(x.cols());
  for (long c = 0; c < x.cols(); ++c) {
    double sq = 0.0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(x, c); it; ++it)
      sq += it.value() * it.value();
    if (!(sq > 0.0))
      fail(Errc::degenerate,
           "design column " + std::to_string(c) + " has zero norm");
    l[c] = sq / (4.0 * n);
  }
  return l;
}

class LogitCache final : public GradientCache {
 public:
  LogitCache(const LogisticProblem& p, Eigen::VectorXd x0)
      : GradientCache(std::move(x0)),
        p_(p),
        inv_n_(1.0 / static_cast<double>(p.samples())),
        mx_(p.samples()),
        mz_(p.samples()),
        ta_(p.samples()),
        tb_(p.samples()),
        wl_(p.samples()) {
    refresh();
  }

  double coord_gradient_combo(double theta, long i) const override {
    const Eigen::VectorXd& lbl = p_.labels();
    double acc = 0.0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(p_.design(), i); it;
         ++it) {
      long r = it.row();
      double m = (1.0 - theta) * mx_[r] + theta * mz_[r];
      acc += it.value() * lbl[r] / (1.0 + std::exp(m));
    }
    return -acc * inv_n_;
  }

  void gradient_combo(double theta, Eigen::VectorXd& out) const override {
    const Eigen::VectorXd& lbl = p_.labels();
    for (long r = 0; r < mx_.size(); ++r) {
      double m = (1.0 - theta) * mx_[r] + theta * mz_[r];
      wl_[r] = lbl[r] / (1.0 + std::exp(m));
    }
    out.resize(p_.dim());
    for (long c = 0; c < p_.dim(); ++c) {
      double acc = 0.0;
      for (Eigen::SparseMatrix<double>::InnerIterator it(p_.design(), c); it;
           ++it)
        acc += it.value() * wl_[it.row()];
      out[c] = -acc * inv_n_;
    }
  }

 private:
  void on_transform(double axx, double axz, double azx, double azz) override {
    combine_pair(mx_, mz_, axx, axz, azx, azz, ta_, tb_);
  }

  void on_step(Which w, long i, double h) override {
    Eigen::VectorXd& m = w == Which::X ? mx_ : mz_;
    const Eigen::VectorXd& lbl = p_.labels();
    for (Eigen::SparseMatrix<double>::InnerIterator it(p_.design(), i); it;
         ++it)
      m[it.row()] += h * lbl[it.row()] * it.value();
  }

  void on_refresh() override {
    mx_ = p_.margins(x());
    mz_ = p_.margins(z());
  }

  const LogisticProblem& p_;
  double inv_n_;
  Eigen::VectorXd mx_, mz_, ta_, tb_;
  mutable Eigen::VectorXd wl_;
};

}  // namespace

LogisticProblem::LogisticProblem(Eigen::SparseMatrix<double> x,
                                 Eigen::VectorXd labels)
    : x_(checked_design(std::move(x), labels)),
      labels_(std::move(labels)),
      smooth_(smoothness_from_design(x_)) {}

LogisticProblem LogisticProblem::from_dataset(const Dataset& d) {
  if (d.sparse) return LogisticProblem(d.sp, d.target);
  Eigen::SparseMatrix<double> sp = d.dense.sparseView();
  return LogisticProblem(std::move(sp), d.target);
}

Eigen::VectorXd LogisticProblem::margins(const Eigen::VectorXd& beta) const {
  if (beta.size() != dim())
    fail(Errc::dimension_mismatch, "margins: beta has wrong size");
  return labels_.cwiseProduct(x_ * beta);
}

double LogisticProblem::value_from_margins(const Eigen::VectorXd& m) const {
  double acc = 0.0;
  for (long i = 0; i < m.size(); ++i) acc += loss_term(m[i]);
  return acc / static_cast<double>(samples());
}

void LogisticProblem::gradient_from_margins(const Eigen::VectorXd& m,
                                            Eigen::VectorXd& out) const {
  Eigen::VectorXd wl(samples());
  for (long r = 0; r < wl.size(); ++r)
    wl[r] = labels_[r] / (1.0 + std::exp(m[r]));
  out.resize(dim());
  double inv_n = 1.0 / static_cast<double>(samples());
  for (long c = 0; c < dim(); ++c) {
    double acc = 0.0;
    for (Eigen::SparseMatrix<double>::InnerIterator it(x_, c); it; ++it)
      acc += it.value() * wl[it.row()];
    out[c] = -acc * inv_n;
  }
}

double LogisticProblem::value(const Eigen::VectorXd& beta) const {
  return value_from_margins(margins(beta));
}

Eigen::VectorXd LogisticProblem::gradient(const Eigen::VectorXd& beta) const {
  Eigen::VectorXd out;
  gradient_from_margins(margins(beta), out);
  return out;
}

double LogisticProblem::coordinate_gradient(const Eigen::VectorXd& beta,
                                            long i) const {
  if (i < 0 || i >= dim())
    fail(Errc::invalid_argument, "coordinate index out of range");
  Eigen::VectorXd m = margins(beta);
  double acc = 0.0;
  for (Eigen::SparseMatrix<double>::InnerIterator it(x_, i); it; ++it)
    acc += it.value() * labels_[it.row()] / (1.0 + std::exp(m[it.row()]));
  return -acc / static_cast<double>(samples());
}

double LogisticProblem::strong_convexity(StrongMode) const {
  fail(Errc::invalid_argument,
       "logistic objective has no computable strong convexity; "
       "pass mu explicitly");
}

std::unique_ptr<GradientCache> LogisticProblem::make_cache(
    const Eigen::VectorXd& x0) const {
  if (x0.size() != dim())
    fail(Errc::dimension_mismatch, "make_cache: x0 has wrong size");
  return std::make_unique<LogitCache>(*this, x0);
}

}  // namespace cdkit
