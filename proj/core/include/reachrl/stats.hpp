#pragma once

#include <cstddef>
#include <vector>

namespace reachrl::stats {

double median(std::vector<double> xs);
double mean(const std::vector<double>& xs);

/// Sample Pearson correlation; 0 if either side is constant.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Ranks with ties assigned the average rank (1-based).
std::vector<double> average_ranks(const std::vector<double>& xs);

/// Spearman rank correlation, tie-aware (Pearson on average ranks).
double spearman(const std::vector<double>& x, const std::vector<double>& y);

/// Pearson chi-squared statistic for observed counts against uniform expectation.
double chi_squared_uniform(const std::vector<std::size_t>& counts);

/// Trapezoidal area under a piecewise-linear curve given by (x, y) samples
/// sorted by x.
double trapezoid_auc(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace reachrl::stats
