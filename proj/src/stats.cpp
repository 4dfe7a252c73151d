#include "auit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace auit::stats {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double r = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

namespace {
double pearson(std::span<const double> a, std::span<const double> b) {
  const auto n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}
}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("spearman needs two equal-length series of at least 2 points");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double spearman_p_value(std::span<const double> x, std::span<const double> y, Tail tail) {
  const double observed = spearman(x, y);
  const std::size_t n = x.size();
  constexpr double kEps = 1e-12;
  if (n <= 9) {
    const auto rx = average_ranks(x);
    auto ry = average_ranks(y);
    std::sort(ry.begin(), ry.end());
    std::size_t hits = 0;
    std::size_t total = 0;
    do {
      const double rho = pearson(rx, ry);
      ++total;
      if (tail == Tail::Greater ? rho >= observed - kEps : rho <= observed + kEps) ++hits;
    } while (std::next_permutation(ry.begin(), ry.end()));
    // next_permutation skips duplicate orderings of tied ranks; each distinct
    // arrangement is equally likely, so the ratio is still exact.
    return static_cast<double>(hits) / static_cast<double>(total);
  }
  const double z = observed * std::sqrt(static_cast<double>(n) - 1.0);
  return tail == Tail::Greater ? normal_sf(z) : normal_sf(-z);
}

}  // namespace auit::stats
