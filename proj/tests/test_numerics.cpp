#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "errors.hpp"
#include "numerics.hpp"
#include "rng.hpp"

using namespace cdkit;

TEST_CASE("theta_next frozen values") {
  // Hand computed: theta_next(1) = (sqrt(5) - 1)/2, the golden ratio
  // conjugate; theta_next(0.5) = (sqrt(4.25) - 0.5)/4.
  CHECK(theta_next(1.0) == doctest::Approx(0.61803398874989485).epsilon(1e-15));
  CHECK(theta_next(0.5) == doctest::Approx(0.39038820320220757).epsilon(1e-15));
}

TEST_CASE("theta recurrence holds along the schedule") {
  ThetaSchedule s;
  CHECK(s.theta() == 1.0);
  for (int k = 0; k < 2000; ++k) {
    double prev = s.theta();
    s.advance();
    double t = s.theta();
    double residual = (1.0 - t) / (t * t) - 1.0 / (prev * prev);
    CHECK(std::abs(residual) <= 1e-12 / (t * t));
    CHECK(t < prev);
    CHECK(t <= 2.0 / (s.k() + 2.0) * (1.0 + 1e-15));
  }
}

TEST_CASE("theta_next rejects values outside (0, 1]") {
  CHECK_THROWS_AS(theta_next(0.0), Error);
  CHECK_THROWS_AS(theta_next(-0.1), Error);
  CHECK_THROWS_AS(theta_next(1.5), Error);
}

TEST_CASE("strong_params frozen values") {
  StrongParams p = strong_params(0.01, 100);
  CHECK(p.a == doctest::Approx(9.99000999000999e-4).epsilon(1e-14));
  CHECK(p.b == doctest::Approx(9.99000999000999e-10).epsilon(1e-14));
  CHECK(p.dim == 100);
  CHECK(p.mu == 0.01);
}

TEST_CASE("strong_params contraction inequality a^2 <= (1-a)(a^2+b)") {
  for (double mu : {1e-8, 1e-4, 0.01, 0.3, 1.0}) {
    for (long dim : {1L, 2L, 10L, 1000L}) {
      StrongParams p = strong_params(mu, dim);
      CHECK(p.a > 0.0);
      CHECK(p.a < 1.0);
      CHECK(p.a * p.a <= (1.0 - p.a) * (p.a * p.a + p.b) * (1.0 + 1e-14));
    }
  }
}

TEST_CASE("strong_params rejects bad arguments") {
  CHECK_THROWS_AS(strong_params(0.0, 10), Error);
  CHECK_THROWS_AS(strong_params(1.5, 10), Error);
  CHECK_THROWS_AS(strong_params(0.5, 0), Error);
}

TEST_CASE("weighted norms") {
  Smoothness l((Eigen::VectorXd(2) << 3.0, 4.0).finished());
  Eigen::VectorXd v(2);
  v << 1.0, 2.0;
  CHECK(weighted_norm_sq(v, l) == doctest::Approx(19.0).epsilon(1e-15));
  CHECK(weighted_inv_norm_sq(v, l) ==
        doctest::Approx(1.0 / 3.0 + 1.0).epsilon(1e-15));
  Eigen::VectorXd w(3);
  w.setOnes();
  CHECK_THROWS_AS(weighted_norm_sq(w, l), Error);
}

TEST_CASE("smoothness validates positivity") {
  CHECK_THROWS_AS(Smoothness((Eigen::VectorXd(2) << 1.0, 0.0).finished()),
                  Error);
  CHECK_THROWS_AS(Smoothness((Eigen::VectorXd(1) << -2.0).finished()), Error);
  CHECK_THROWS_AS(Smoothness(Eigen::VectorXd()), Error);
}

TEST_CASE("rng streams are deterministic and seed dependent") {
  Rng a(123), b(123), c(124);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 64; ++i) {
    auto va = a.next_u64();
    all_equal = all_equal && va == b.next_u64();
    any_diff = any_diff || va != c.next_u64();
  }
  CHECK(all_equal);
  CHECK(any_diff);
  Rng z(0);  // seed 0 must still produce a usable stream
  CHECK(z.next_u64() != 0);
}

TEST_CASE("uniform01 stays in [0,1) with a sane mean") {
  Rng r(7);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    double u = r.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 100000 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("normal draws match the documented pairing") {
  Rng a(99), b(99);
  double u1 = b.uniform01();
  double u2 = b.uniform01();
  double rad = std::sqrt(-2.0 * std::log(u1));
  double ang = 2.0 * 3.14159265358979323846 * u2;
  CHECK(a.normal() == rad * std::cos(ang));
  CHECK(a.normal() == rad * std::sin(ang));
}

TEST_CASE("normal moments") {
  Rng r(5);
  double sum = 0.0, sq = 0.0;
  int n = 200000;
  for (int i = 0; i < n; ++i) {
    double x = r.normal();
    sum += x;
    sq += x * x;
  }
  double mean = sum / n;
  CHECK(std::abs(mean) < 0.01);
  CHECK(sq / n - mean * mean == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("uniform_below is in range and roughly uniform") {
  Rng r(11);
  int counts[7] = {0};
  for (int i = 0; i < 70000; ++i) {
    auto v = r.uniform_below(7);
    REQUIRE(v < 7);
    ++counts[v];
  }
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
  CHECK(r.uniform_below(1) == 0);
  CHECK_THROWS_AS(r.uniform_below(0), Error);
}
