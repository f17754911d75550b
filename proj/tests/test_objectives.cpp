#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dataset.hpp"
#include "errors.hpp"
#include "least_squares.hpp"
#include "logistic.hpp"
#include "rng.hpp"

using namespace cdkit;

namespace {

// Central finite difference, the independent check for every analytic
// gradient here.
double fd_coordinate(const Problem& p, const Eigen::VectorXd& beta, long i,
                     double h = 1e-5) {
  Eigen::VectorXd plus = beta, minus = beta;
  plus[i] += h;
  minus[i] -= h;
  return (p.value(plus) - p.value(minus)) / (2.0 * h);
}

bool close_rel(double a, double b, double rel) {
  double scale = std::max({std::abs(a), std::abs(b), 1e-6});
  return std::abs(a - b) <= rel * scale;
}

LogisticProblem small_logistic() {
  std::istringstream in(
      "+1 1:0.4 2:-1.2\n"
      "-1 1:-0.7 3:2.0\n"
      "+1 2:0.9 3:0.1\n"
      "-1 1:1.5 2:0.3 3:-0.8\n"
      "+1 1:-0.2 3:1.1\n"
      "-1 2:-2.0\n");
  return LogisticProblem::from_dataset(parse_libsvm(in));
}

}  // namespace

TEST_CASE("least squares hand values") {
  Eigen::MatrixXd x(2, 2);
  x << 1.0, 2.0, 3.0, 4.0;
  Eigen::VectorXd y(2);
  y << 1.0, 1.0;
  LeastSquaresProblem p(x, y);
  CHECK(p.value(Eigen::VectorXd::Zero(2)) == 2.0);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(2);
  CHECK(p.value(ones) == 40.0);  // residual (-2, -6)
  // L_i = 2 * column squared norms: (20, 40)
  CHECK(p.smoothness()[0] == 20.0);
  CHECK(p.smoothness()[1] == 40.0);
}

TEST_CASE("least squares gradient matches finite differences") {
  SyntheticSpec spec;
  spec.n_samples = 40;
  spec.dim = 15;
  spec.kappa = 80.0;
  spec.seed = 21;
  LeastSquaresProblem p =
      LeastSquaresProblem::from_dataset(generate_linear_regression(spec));
  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::VectorXd beta(p.dim());
    for (long i = 0; i < beta.size(); ++i) beta[i] = rng.normal();
    long i = static_cast<long>(rng.uniform_below(p.dim()));
    Eigen::VectorXd g = p.gradient(beta);
    CHECK(close_rel(g[i], fd_coordinate(p, beta, i), 1e-6));
    CHECK(p.coordinate_gradient(beta, i) == doctest::Approx(g[i]).epsilon(1e-12));
  }
}

TEST_CASE("least squares rejects degenerate and mismatched input") {
  Eigen::MatrixXd x(2, 2);
  x << 1.0, 0.0, 2.0, 0.0;  // second column all zero
  Eigen::VectorXd y = Eigen::VectorXd::Ones(2);
  try {
    LeastSquaresProblem p(x, y);
    FAIL_CHECK("expected a degenerate column error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate);
  }
  Eigen::MatrixXd ok(2, 1);
  ok << 1.0, 2.0;
  CHECK_THROWS_AS(LeastSquaresProblem(ok, Eigen::VectorXd::Ones(3)), Error);
  LeastSquaresProblem p(ok, y);
  CHECK_THROWS_AS(p.value(Eigen::VectorXd::Ones(2)), Error);
}

TEST_CASE("least squares strong convexity on hand checked designs") {
  // Diagonal design: the normalized Hessian is the identity.
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(2, 2);
  x(0, 0) = 1.0;
  x(1, 1) = 2.0;
  LeastSquaresProblem p(x, Eigen::VectorXd::Zero(2));
  CHECK(p.strong_convexity(StrongMode::Exact) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.strong_convexity(StrongMode::SmallestPositive) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Rank one design: eigenvalues {0, 2} after normalization.
  Eigen::MatrixXd r = Eigen::MatrixXd::Ones(2, 2);
  LeastSquaresProblem q(r, Eigen::VectorXd::Zero(2));
  CHECK(q.strong_convexity(StrongMode::Exact) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(q.strong_convexity(StrongMode::SmallestPositive) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("logistic hand values") {
  LogisticProblem p = small_logistic();
  CHECK(p.dim() == 3);
  CHECK(p.samples() == 6);
  // All margins are zero at the origin.
  CHECK(p.value(Eigen::VectorXd::Zero(3)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  // L_i = ||col_i||^2 / (4n)
  double c0 = 0.4 * 0.4 + 0.7 * 0.7 + 1.5 * 1.5 + 0.2 * 0.2;
  CHECK(p.smoothness()[0] == doctest::Approx(c0 / 24.0).epsilon(1e-14));
}

TEST_CASE("logistic gradient matches finite differences") {
  LogisticProblem p = small_logistic();
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Eigen::VectorXd beta(p.dim());
    for (long i = 0; i < beta.size(); ++i) beta[i] = 1.5 * rng.normal();
    Eigen::VectorXd g = p.gradient(beta);
    for (long i = 0; i < p.dim(); ++i) {
      CHECK(close_rel(g[i], fd_coordinate(p, beta, i), 1e-6));
      CHECK(p.coordinate_gradient(beta, i) ==
            doctest::Approx(g[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("logistic survives margins around 1e4") {
  Eigen::SparseMatrix<double> x(2, 1);
  x.insert(0, 0) = 1.0;
  x.insert(1, 0) = 2.0;
  Eigen::VectorXd labels(2);
  labels << 1.0, -1.0;
  LogisticProblem p(std::move(x), labels);
  Eigen::VectorXd beta(1);
  beta << 1e4;
  double f = p.value(beta);
  CHECK(std::isfinite(f));
  CHECK(f == doctest::Approx(1e4).epsilon(1e-10));  // the -1 sample dominates
  CHECK(std::isfinite(p.gradient(beta)[0]));
  beta << -1e4;
  CHECK(std::isfinite(p.value(beta)));
  CHECK(std::isfinite(p.gradient(beta)[0]));
}

TEST_CASE("logistic validates labels") {
  Eigen::SparseMatrix<double> x(2, 1);
  x.insert(0, 0) = 1.0;
  x.insert(1, 0) = 2.0;
  Eigen::VectorXd labels(2);
  labels << 1.0, 3.0;
  CHECK_THROWS_AS(LogisticProblem(std::move(x), labels), Error);
}

TEST_CASE("caches stay coherent through interleaved mutations") {
  SyntheticSpec spec;
  spec.n_samples = 30;
  spec.dim = 12;
  spec.kappa = 40.0;
  spec.seed = 4;
  LeastSquaresProblem ls =
      LeastSquaresProblem::from_dataset(generate_linear_regression(spec));
  LogisticProblem lg = small_logistic();
  const Problem* problems[2] = {&ls, &lg};

  for (const Problem* p : problems) {
    Rng rng(9);
    Eigen::VectorXd x0(p->dim());
    for (long i = 0; i < x0.size(); ++i) x0[i] = rng.normal();
    auto cache = p->make_cache(x0);
    for (int op = 0; op < 2000; ++op) {
      double u = rng.uniform01();
      if (u < 0.25) {
        double th = rng.uniform01();
        cache->transform(1.0 - th, th, 0.0, 1.0);
      } else if (u < 0.4) {
        double aa = 0.3 * rng.uniform01();
        cache->transform(1.0 - aa, aa, 0.2 * (1.0 - aa), 0.8 + 0.2 * aa);
      } else {
        Which w = rng.uniform01() < 0.5 ? Which::X : Which::Z;
        long i = static_cast<long>(rng.uniform_below(p->dim()));
        cache->step(w, i, 0.5 * rng.normal());
      }
      if (op % 100 == 0) {
        for (double th : {0.0, 1.0, 0.37}) {
          Eigen::VectorXd fresh = p->gradient(cache->combined(th));
          for (long i = 0; i < p->dim(); ++i)
            CHECK(std::abs(cache->coord_gradient_combo(th, i) - fresh[i]) <=
                  1e-8);
        }
      }
    }
  }
}

TEST_CASE("cache transform validates row sums and refresh period resets") {
  LogisticProblem p = small_logistic();
  auto cache = p.make_cache(Eigen::VectorXd::Zero(p.dim()));
  CHECK_THROWS_AS(cache->transform(0.5, 0.4, 0.0, 1.0), Error);
  cache->set_refresh_period(10);
  for (int i = 0; i < 10; ++i) cache->step(Which::X, 0, 0.1);
  CHECK(cache->mutations_since_refresh() == 0);
  cache->step(Which::Z, 1, -0.2);
  CHECK(cache->mutations_since_refresh() == 1);
  CHECK_THROWS_AS(cache->set_refresh_period(0), Error);
}

TEST_CASE("combined iterate matches the by-hand mix") {
  LogisticProblem p = small_logistic();
  Eigen::VectorXd x0(3);
  x0 << 1.0, -2.0, 0.5;
  auto cache = p.make_cache(x0);
  cache->step(Which::Z, 0, 1.0);
  Eigen::VectorXd y = cache->combined(0.25);
  CHECK(y[0] == doctest::Approx(0.75 * 1.0 + 0.25 * 2.0).epsilon(1e-15));
  CHECK(y[1] == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("logistic strong convexity is not available") {
  LogisticProblem p = small_logistic();
  CHECK_THROWS_AS(p.strong_convexity(StrongMode::Exact), Error);
}
