#pragma once

// The evaluation loop: place agents and objects, then per iteration
// observe -> exchange and act -> move Good/Evil -> collect rewards. The group
// score is the mean reward per agent per iteration.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "auit/communication.hpp"
#include "auit/grid_world.hpp"
#include "auit/policies.hpp"

namespace auit {

/// Seed from which the default Good/Evil patterns are generated. Every run
/// that does not override it faces the same task.
inline constexpr std::uint64_t kDefaultPatternSeed = 0x41554954'0000002AULL;
inline constexpr std::size_t kDefaultPatternLength = 64;
inline constexpr std::size_t kDefaultEpisodes = 100;

struct PatternParams {
  std::size_t length = kDefaultPatternLength;
  std::uint64_t seed = kDefaultPatternSeed;

  MovementPattern good() const;
  MovementPattern evil() const;
};

/// Fixed starting positions, bypassing the random placement. `agents` is
/// parallel to the roster. Used by golden-trace tests.
struct Placement {
  Position good;
  Position evil;
  std::vector<Position> agents;
};

struct EpisodeConfig {
  int m = 20;
  std::vector<AgentSpec> roster;
  int iterations = 20;
  PatternParams pattern;
  /// Overrides `pattern` when set.
  std::optional<std::pair<MovementPattern, MovementPattern>> explicit_patterns;
  std::optional<Placement> placement;
  int talking_range = kUnlimitedRange;
  bool random_may_stay = false;
  bool record_trajectory = false;

  /// Throws ConfigError on m < 5, empty roster, iterations < 1, duplicate ids
  /// or a malformed placement.
  void validate() const;

  MovementPattern good_pattern() const;
  MovementPattern evil_pattern() const;
};

struct Trajectory {
  /// positions[i][j]: agent j (roster order) after the move of iteration i.
  std::vector<std::vector<Position>> agents;
  std::vector<Position> good;
  std::vector<Position> evil;
  std::vector<std::vector<Action>> actions;
  Position initial_good;
  Position initial_evil;
  std::vector<Position> initial_agents;
};

struct RewardLog {
  std::vector<std::uint32_t> agent_ids;  // roster order
  std::vector<AgentKind> kinds;          // roster order
  int iterations = 0;
  /// rewards[j * iterations + i] = reward of agent j in iteration i.
  std::vector<double> rewards;
  std::optional<Trajectory> trajectory;

  std::size_t agents() const noexcept { return agent_ids.size(); }
  double at(std::size_t agent, int iteration) const { return rewards.at(agent * iterations + iteration); }

  friend bool operator==(const RewardLog& a, const RewardLog& b) {
    return a.agent_ids == b.agent_ids && a.kinds == b.kinds && a.iterations == b.iterations &&
           a.rewards == b.rewards;
  }
};

struct SummaryStats {
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation
  std::size_t count = 0;

  double std_error() const noexcept;
  static SummaryStats of(std::span<const double> values);
};

struct GroupScore {
  double mean = 0.0;
  double std_dev = 0.0;
  std::size_t episode_count = 0;
  EpisodeConfig config;
  /// Per-episode scores, by episode index.
  std::vector<double> episode_scores;
  /// Mean reward of each kind's subgroup inside the same episodes.
  std::map<AgentKind, SummaryStats> by_kind;

  double std_error() const noexcept;
};

RewardLog run_episode(const EpisodeConfig& config, std::uint64_t seed);

/// Sum of all rewards over (agents x iterations). Summed in ascending agent id
/// order, so roster permutations give bit-identical results.
double group_score(const RewardLog& log);

/// Mean reward of agents of `kind` in `log`; nullopt if the kind is absent.
std::optional<double> kind_score(const RewardLog& log, AgentKind kind);

/// Seed of episode `index` under `master_seed`.
std::uint64_t episode_seed(std::uint64_t master_seed, std::size_t index) noexcept;

/// Runs `episodes` independent episodes. Results are gathered by episode index
/// whatever the thread scheduling; `threads` = 0 picks the hardware count.
GroupScore evaluate(const EpisodeConfig& config, std::size_t episodes, std::uint64_t master_seed,
                    unsigned threads = 0);

class MissingKindError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Composition-weighted mean of same-size homogeneous scores:
/// sum(count_k * score_k) / sum(count_k).
double weighted_average_baseline(const std::map<AgentKind, double>& homogeneous,
                                 std::span<const std::pair<AgentKind, int>> composition);

/// Standard error of the baseline, treating the homogeneous scores as independent.
double weighted_average_baseline_error(const std::map<AgentKind, GroupScore>& homogeneous,
                                       std::span<const std::pair<AgentKind, int>> composition);

}  // namespace auit
