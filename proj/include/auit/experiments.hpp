#pragma once

// Parameter sweeps over one axis at a time, plus the comparison of
// heterogeneous groups against the composition-weighted average of
// same-size homogeneous groups. Every point of a sweep uses the same master
// seed and the same Good/Evil patterns.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "auit/evaluation.hpp"
#include "auit/notation.hpp"

namespace auit {

enum class SweepAxis { Composition, GroupSize, EnvironmentComplexity, EvaluationTime, Comparison };

std::string_view to_string(SweepAxis axis) noexcept;
/// Accepts composition, size, environment, time, compare. Throws ConfigError.
SweepAxis parse_axis(std::string_view text);

inline const std::vector<int> kDefaultGroupSizes{10, 20, 30, 40, 50, 60};
inline const std::vector<int> kDefaultGridSides{10, 15, 20, 25, 30};
inline const std::vector<int> kDefaultIterationCounts{10, 20, 50, 100, 200, 500};

/// Everything a sweep holds fixed. `base.roster` is ignored; each point
/// brings its own group.
struct SweepDefaults {
  EpisodeConfig base;
  std::size_t episodes = kDefaultEpisodes;
  std::uint64_t master_seed = 1;
  unsigned threads = 0;
};

struct SweepSpec {
  SweepAxis axis = SweepAxis::Composition;
  std::vector<double> axis_values;
  std::vector<EpisodeConfig> points;
  std::size_t episodes_per_point = kDefaultEpisodes;
  std::uint64_t master_seed = 1;
  unsigned threads = 0;
};

/// Mean reward of one kind inside a heterogeneous run next to that kind's
/// same-size homogeneous score.
struct SubgroupComparison {
  AgentKind kind;
  SummaryStats in_group;
  GroupScore homogeneous;
};

struct SweepPoint {
  double axis_value = 0.0;
  GroupNotation group;
  GroupScore score;
  double entropy_bits = 0.0;
  double complexity_bits = 0.0;
  std::uint64_t pattern_digest = 0;
  /// Comparison sweeps only.
  std::optional<double> baseline;
  std::optional<double> baseline_error;
  std::vector<SubgroupComparison> subgroups;

  /// score.mean - baseline; requires a baseline.
  double gain() const;
  /// Standard error of gain(), treating the runs as independent.
  double gain_error() const;
};

struct SweepResult {
  SweepAxis axis = SweepAxis::Composition;
  std::uint64_t master_seed = 0;
  std::size_t episodes_per_point = 0;
  std::vector<SweepPoint> points;
  /// Wall-clock metadata, never part of the digest.
  std::string started_at;
  std::string finished_at;

  std::vector<double> axis_values() const;
  std::vector<double> means() const;
};

/// Runs every point of `spec`. Throws ConfigError if the axis values are not
/// strictly increasing or the point count does not match.
SweepResult run_sweep(const SweepSpec& spec);

SweepResult sweep_composition(const std::vector<GroupNotation>& groups, const SweepDefaults& defaults);
SweepResult sweep_group_size(const GroupNotation& ratio, const std::vector<int>& sizes,
                             const SweepDefaults& defaults);
SweepResult sweep_environment(const GroupNotation& group, const std::vector<int>& sides,
                              const SweepDefaults& defaults);
SweepResult sweep_time(const GroupNotation& group, const std::vector<int>& iteration_counts,
                       const SweepDefaults& defaults);
/// For each group, the heterogeneous score, the weighted homogeneous baseline
/// and the per-kind decomposition. Homogeneous runs are shared between groups
/// of equal size.
SweepResult compare_homo_hetero(const std::vector<GroupNotation>& groups, const SweepDefaults& defaults);

/// Joint compressed length of the Good pattern followed by the Evil pattern.
double config_complexity_bits(const EpisodeConfig& config);

/// Digest of every result-bearing field (timestamps excluded).
std::uint64_t result_digest(const SweepResult& result);

}  // namespace auit
