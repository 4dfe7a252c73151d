#pragma once

// Small statistics toolkit for trend checks on sweep results.

#include <span>
#include <vector>

namespace auit::stats {

/// One-sided 95% standard normal quantile.
inline constexpr double kZ95OneSided = 1.6448536269514722;

/// Ranks starting at 1; tied values share their average rank.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman rank correlation (Pearson correlation of average ranks).
double spearman(std::span<const double> x, std::span<const double> y);

enum class Tail { Greater, Less };

/// Permutation p-value of Spearman's rho against independence. Exact
/// enumeration of all orderings for up to 9 points; larger inputs use the
/// normal approximation rho * sqrt(n - 1).
double spearman_p_value(std::span<const double> x, std::span<const double> y, Tail tail);

/// Upper tail of the standard normal distribution, P(Z > z).
double normal_sf(double z);

}  // namespace auit::stats
