#pragma once

#include <cstdint>
#include <vector>

namespace ssq {

// Pearson statistic sum (O-E)^2/E; observed and expected must have equal
// length and positive expected counts.
double chi_square_statistic(const std::vector<std::int64_t>& observed,
                            const std::vector<double>& expected);

// Upper quantile of the chi-squared distribution (significance alpha on the
// right tail: pass p = 1 - alpha).
double chi_square_quantile(int dof, double p);

// Two-sample homogeneity statistic over matched count vectors; dof is
// cells - 1.
double two_sample_chi_square(const std::vector<std::int64_t>& a,
                             const std::vector<std::int64_t>& b);

// Standard deviation of a Binomial(n, p) count.
double binomial_sigma(std::int64_t n, double p);

}  // namespace ssq
