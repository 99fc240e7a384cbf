#include "seqent/stats.hpp"

#include <algorithm>
#include <cmath>

#include "seqent/types.hpp"

namespace seqent {

namespace {

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for the incomplete beta, evaluated by the modified
// Lentz algorithm. Converges quickly for x < (a+1)/(a+b+2); the caller uses
// the symmetry relation outside that region.
double beta_continued_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-15;
  constexpr int max_iterations = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iterations; ++m) {
    const int m2 = 2 * m;
    double coeff = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + coeff * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + coeff / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    coeff = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + coeff * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + coeff / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < eps) return h;
  }
  throw NoConvergence("incomplete beta continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw InvalidCount("incomplete beta requires a > 0 and b > 0");
  if (!(x >= 0.0) || !(x <= 1.0))
    throw InvalidCount("incomplete beta requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front =
      std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
  if (!(df > 0.0)) throw InvalidCount("degrees of freedom must be positive");
  if (t == 0.0) return 1.0;
  const double x = df / (df + t * t);
  return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

Histogram make_histogram(std::span<const double> values, double lo, double hi, int bins) {
  if (bins < 1) throw InvalidCount("histogram needs at least one bin");
  if (!(hi > lo)) throw InvalidCount("histogram range must be nonempty");
  Histogram hist;
  hist.lo = lo;
  hist.hi = hi;
  hist.counts.assign(static_cast<std::size_t>(bins), 0);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (double v : values) {
    auto idx = static_cast<std::int64_t>(std::floor((v - lo) / width));
    idx = std::clamp<std::int64_t>(idx, 0, bins - 1);
    ++hist.counts[static_cast<std::size_t>(idx)];
  }
  return hist;
}

Histogram make_histogram(std::span<const double> values, int bins) {
  double lo = 0.0;
  double hi = 1.0;
  if (!values.empty()) {
    const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    lo = *min_it;
    hi = *max_it;
  }
  if (!(hi > lo)) hi = lo + 1.0;
  return make_histogram(values, lo, hi, bins);
}

}  // namespace seqent
