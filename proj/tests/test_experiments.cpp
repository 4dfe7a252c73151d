#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "auit/experiments.hpp"
#include "auit/stats.hpp"

using namespace auit;

namespace {
SweepDefaults small_defaults(std::size_t episodes = 6) {
  SweepDefaults d;
  d.episodes = episodes;
  d.master_seed = 17;
  return d;
}

// Textbook formula, valid without ties.
double spearman_by_formula(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = stats::average_ranks(x);
  const auto ry = stats::average_ranks(y);
  double d2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  const double n = static_cast<double>(x.size());
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}
}  // namespace

TEST(Stats, AverageRanksWithTies) {
  const std::vector<double> v{3.0, 1.0, 3.0, 2.0};
  EXPECT_EQ(stats::average_ranks(v), (std::vector<double>{3.5, 1.0, 3.5, 2.0}));
}

TEST(Stats, SpearmanAgreesWithFormula) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x(6);
    std::vector<double> y(6);
    for (auto& v : x) v = rng.uniform_real();
    for (auto& v : y) v = rng.uniform_real();
    EXPECT_NEAR(stats::spearman(x, y), spearman_by_formula(x, y), 1e-12);
  }
}

TEST(Stats, ExactPermutationPValues) {
  const std::vector<double> x{1, 2, 3, 4, 5};
  const std::vector<double> up{0.1, 0.2, 0.3, 0.4, 0.5};
  EXPECT_NEAR(stats::spearman_p_value(x, up, stats::Tail::Greater), 1.0 / 120.0, 1e-12);
  EXPECT_NEAR(stats::spearman_p_value(x, up, stats::Tail::Less), 1.0, 1e-12);
  const std::vector<double> one_swap{0.5, 0.3, 0.4, 0.2, 0.1};  // rho = -0.9
  EXPECT_NEAR(stats::spearman(x, one_swap), -0.9, 1e-12);
  EXPECT_NEAR(stats::spearman_p_value(x, one_swap, stats::Tail::Less), 5.0 / 120.0, 1e-12);
  const std::vector<double> x6{1, 2, 3, 4, 5, 6};
  const std::vector<double> y6{1, 2, 3, 4, 5, 6};
  EXPECT_NEAR(stats::spearman_p_value(x6, y6, stats::Tail::Greater), 1.0 / 720.0, 1e-12);
}

TEST(Stats, NormalTail) {
  EXPECT_NEAR(stats::normal_sf(stats::kZ95OneSided), 0.05, 1e-9);
  EXPECT_NEAR(stats::normal_sf(0.0), 0.5, 1e-12);
}

TEST(Sweeps, CompositionRejectsSizeMismatch) {
  EXPECT_THROW(sweep_composition({parse_group("SL20"), parse_group("SL19")}, small_defaults()), ConfigError);
}

TEST(Sweeps, SingleRosterEqualsEvaluate) {
  const auto d = small_defaults();
  const auto r = sweep_composition({parse_group("SL3&O1")}, d);
  EpisodeConfig c = d.base;
  c.roster = make_roster(parse_group("SL3&O1"));
  const auto direct = evaluate(c, d.episodes, d.master_seed);
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_EQ(r.points[0].score.mean, direct.mean);
}

TEST(Sweeps, GroupSizeKeepsRatio) {
  const auto r = sweep_group_size(parse_group("SL9&TL1"), {10, 20}, small_defaults(2));
  EXPECT_EQ(render(r.points[0].group), "SL9&TL1");
  EXPECT_EQ(render(r.points[1].group), "SL18&TL2");
  EXPECT_THROW(sweep_group_size(parse_group("SL9&TL1"), {15}, small_defaults(2)), ConfigError);
}

TEST(Sweeps, EnvironmentRecordsEntropy) {
  const auto r = sweep_environment(parse_group("SL4&O1"), kDefaultGridSides, small_defaults(2));
  ASSERT_EQ(r.points.size(), 5u);
  EXPECT_NEAR(r.points.front().entropy_bits, 13.29, 0.01);
  EXPECT_NEAR(r.points.back().entropy_bits, 19.63, 0.01);
}

TEST(Sweeps, PatternFixedAcrossPointsAndCountsMatch) {
  const auto r = sweep_time(parse_group("IL2&O2"), {10, 20, 50}, small_defaults(3));
  for (const auto& p : r.points) {
    EXPECT_EQ(p.pattern_digest, r.points.front().pattern_digest);
    EXPECT_EQ(p.complexity_bits, r.points.front().complexity_bits);
    EXPECT_EQ(p.score.episode_count, 3u);
  }
  EXPECT_EQ(r.axis_values(), (std::vector<double>{10, 20, 50}));
}

TEST(Sweeps, ReproducibleDigest) {
  const auto a = sweep_time(parse_group("SL3&TL1"), {5, 10}, small_defaults(4));
  const auto b = sweep_time(parse_group("SL3&TL1"), {5, 10}, small_defaults(4));
  EXPECT_EQ(result_digest(a), result_digest(b));
  auto other = small_defaults(4);
  other.master_seed = 18;
  EXPECT_NE(result_digest(a), result_digest(sweep_time(parse_group("SL3&TL1"), {5, 10}, other)));
}

TEST(Sweeps, AxisMustIncrease) {
  EXPECT_THROW(sweep_time(parse_group("R2"), {20, 10}, small_defaults(1)), ConfigError);
  EXPECT_THROW(sweep_environment(parse_group("R2"), {4}, small_defaults(1)), ConfigError);
}

TEST(Compare, HomogeneousRosterHasZeroGain) {
  const auto r = compare_homo_hetero({parse_group("SL20")}, small_defaults(5));
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_EQ(r.points[0].gain(), 0.0);
}

TEST(Compare, DecompositionAndBaseline) {
  const auto r = compare_homo_hetero({parse_group("SL9&O1"), parse_group("SL5&TL5")}, small_defaults(5));
  ASSERT_EQ(r.points.size(), 2u);
  const auto& p = r.points[0];
  ASSERT_EQ(p.subgroups.size(), 2u);
  const double expected =
      (9 * p.subgroups[0].homogeneous.mean + 1 * p.subgroups[1].homogeneous.mean) / 10.0;
  EXPECT_NEAR(*p.baseline, expected, 1e-12);
  EXPECT_GT(p.gain_error(), 0.0);
  EXPECT_EQ(render(composition_of(p.subgroups[0].homogeneous.config.roster)), "SL10");
}

TEST(Axis, ParseNames) {
  EXPECT_EQ(parse_axis("time"), SweepAxis::EvaluationTime);
  EXPECT_EQ(parse_axis("environment"), SweepAxis::EnvironmentComplexity);
  EXPECT_THROW(parse_axis("colour"), ConfigError);
}
