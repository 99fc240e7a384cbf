#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "seqent/stats.hpp"
#include "seqent/types.hpp"

using namespace seqent;
using test_helpers::near;

namespace {

// Independent quadrature oracle for I_x(a, b): Simpson's rule after the
// substitution t = sin^2(theta), which removes the endpoint singularity for
// a, b >= 1/2. Good to ~1e-10 with the step used here.
double incomplete_beta_quadrature(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  const double upper = std::asin(std::sqrt(x));
  const int intervals = 20000;  // even
  const double h = upper / intervals;
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    return 2.0 * std::pow(s, 2.0 * a - 1.0) * std::pow(c, 2.0 * b - 1.0);
  };
  double sum = integrand(0.0) + integrand(upper);
  for (int i = 1; i < intervals; ++i)
    sum += integrand(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0 / std::exp(log_beta);
}

}  // namespace

TEST_CASE("regularized incomplete beta against quadrature") {
  const struct {
    double a, b, x;
  } cases[] = {
      {0.5, 0.5, 0.3}, {2.0, 3.0, 0.7},  {4.5, 1.5, 0.2}, {2.0, 0.5, 0.9},
      {1.0, 1.0, 0.42}, {10.0, 0.5, 0.95}, {2.0, 0.5, 0.727272727272727},
      {7.5, 0.5, 0.111}, {0.5, 2.5, 0.05},
  };
  for (const auto& c : cases) {
    const double expected = incomplete_beta_quadrature(c.a, c.b, c.x);
    CHECK_MESSAGE(near(regularized_incomplete_beta(c.a, c.b, c.x), expected, 1e-8),
                  "a=" << c.a << " b=" << c.b << " x=" << c.x);
  }
}

TEST_CASE("incomplete beta edges and symmetry") {
  CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
  for (double x : {0.1, 0.35, 0.5, 0.77}) {
    const double direct = regularized_incomplete_beta(1.5, 2.5, x);
    const double mirrored = 1.0 - regularized_incomplete_beta(2.5, 1.5, 1.0 - x);
    CHECK(near(direct, mirrored, 1e-12));
  }
  CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5), InvalidCount);
  CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, 1.5), InvalidCount);
}

TEST_CASE("student t two-sided p-value") {
  CHECK(student_t_two_sided_p(0.0, 4.0) == 1.0);
  CHECK(student_t_two_sided_p(1.5, 7.0) == student_t_two_sided_p(-1.5, 7.0));
  CHECK(student_t_two_sided_p(50.0, 4.0) < 1e-5);
  // reference value cross-checked with the quadrature oracle
  const double t = 1.224744871391589;
  const double df = 4.0;
  const double expected = incomplete_beta_quadrature(df / 2.0, 0.5, df / (df + t * t));
  CHECK(near(student_t_two_sided_p(t, df), expected, 1e-8));
  CHECK(near(student_t_two_sided_p(t, df), 0.2879, 1e-3));
}

TEST_CASE("histograms") {
  const std::vector<double> values{0.0, 0.1, 0.49, 0.5, 0.99, 1.0};
  const auto hist = make_histogram(values, 0.0, 1.0, 2);
  CHECK(hist.counts == std::vector<std::int64_t>{3, 3});
  CHECK(hist.bin_width() == 0.5);

  const std::vector<double> constant{2.0, 2.0, 2.0};
  const auto degenerate = make_histogram(constant, 4);
  CHECK(degenerate.lo == 2.0);
  CHECK(degenerate.hi == 3.0);
  CHECK(degenerate.counts == std::vector<std::int64_t>{3, 0, 0, 0});

  const std::vector<double> outliers{-5.0, 0.5, 99.0};
  const auto clamped = make_histogram(outliers, 0.0, 1.0, 4);
  CHECK(clamped.counts == std::vector<std::int64_t>{1, 0, 1, 1});

  CHECK_THROWS_AS(make_histogram(values, 1.0, 0.0, 3), InvalidCount);
  CHECK_THROWS_AS(make_histogram(values, 0.0, 1.0, 0), InvalidCount);
}
