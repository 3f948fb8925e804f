#include "ssq/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "ssq/errors.hpp"

namespace ssq {

double chi_square_statistic(const std::vector<std::int64_t>& observed,
                            const std::vector<double>& expected) {
  if (observed.size() != expected.size() || observed.empty()) {
    throw invalid_input_error("chi-square: mismatched or empty count vectors");
  }
  double stat = 0.0;
  for (size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] <= 0.0) {
      throw invalid_input_error("chi-square: expected counts must be positive");
    }
    const double d = observed[i] - expected[i];
    stat += d * d / expected[i];
  }
  return stat;
}

double chi_square_quantile(int dof, double p) {
  if (dof < 1 || p <= 0.0 || p >= 1.0) {
    throw invalid_input_error("chi-square quantile: bad dof or probability");
  }
  boost::math::chi_squared dist(dof);
  return boost::math::quantile(dist, p);
}

double two_sample_chi_square(const std::vector<std::int64_t>& a,
                             const std::vector<std::int64_t>& b) {
  if (a.size() != b.size() || a.empty()) {
    throw invalid_input_error("chi-square: mismatched or empty count vectors");
  }
  double na = 0, nb = 0;
  for (auto v : a) na += v;
  for (auto v : b) nb += v;
  if (na == 0 || nb == 0) {
    throw invalid_input_error("chi-square: empty sample");
  }
  double stat = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double pooled = (a[i] + b[i]) / (na + nb);
    const double ea = na * pooled;
    const double eb = nb * pooled;
    if (ea > 0) stat += (a[i] - ea) * (a[i] - ea) / ea;
    if (eb > 0) stat += (b[i] - eb) * (b[i] - eb) / eb;
  }
  return stat;
}

double binomial_sigma(std::int64_t n, double p) {
  return std::sqrt(n * p * (1.0 - p));
}

}  // namespace ssq
