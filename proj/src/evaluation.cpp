#include "auit/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "auit/rng.hpp"

namespace auit {

namespace {
constexpr std::uint64_t kTagObjects = 0x6f626a656374ULL;
constexpr std::uint64_t kTagPlacement = 0x706c616365ULL;
constexpr std::uint64_t kTagStep = 0x73746570ULL;
constexpr std::uint64_t kTagEpisode = 0x657069736f6465ULL;

Position random_cell(Rng& rng, int m) {
  const auto idx = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(m) * m));
  return {idx % m, idx / m};
}

bool canonical(Position p, int m) { return p.x >= 0 && p.x < m && p.y >= 0 && p.y < m; }
}  // namespace

MovementPattern PatternParams::good() const { return MovementPattern::random(length, derive_seed(seed, {1})); }
MovementPattern PatternParams::evil() const { return MovementPattern::random(length, derive_seed(seed, {2})); }

MovementPattern EpisodeConfig::good_pattern() const {
  return explicit_patterns ? explicit_patterns->first : pattern.good();
}
MovementPattern EpisodeConfig::evil_pattern() const {
  return explicit_patterns ? explicit_patterns->second : pattern.evil();
}

void EpisodeConfig::validate() const {
  if (m < kMinGridSide)
    throw ConfigError("grid side must be at least " + std::to_string(kMinGridSide) + ", got " +
                      std::to_string(m));
  if (roster.empty()) throw ConfigError("roster must contain at least one agent");
  if (iterations < 1) throw ConfigError("iterations must be at least 1");
  if (!explicit_patterns && pattern.length == 0)
    throw ConfigError("movement pattern length must be at least 1");
  std::set<std::uint32_t> ids;
  for (const auto& a : roster) {
    if (!ids.insert(a.id).second) throw ConfigError("duplicate agent id " + std::to_string(a.id));
    if (a.policy == Policy::LocalSearch && a.comm == CommMethod::None)
      throw ConfigError("local search agents need a communication method");
  }
  if (placement) {
    if (placement->agents.size() != roster.size())
      throw ConfigError("placement must list one position per agent");
    if (!canonical(placement->good, m) || !canonical(placement->evil, m))
      throw ConfigError("placement puts a special object outside the grid");
    if (placement->good == placement->evil)
      throw ConfigError("Good and Evil must start on different cells");
    for (const auto& p : placement->agents)
      if (!canonical(p, m)) throw ConfigError("placement puts an agent outside the grid");
  }
}

// ---- Episode ---------------------------------------------------------------

RewardLog run_episode(const EpisodeConfig& config, std::uint64_t seed) {
  config.validate();
  const int m = config.m;
  const std::size_t n = config.roster.size();
  const int iters = config.iterations;

  std::vector<AgentState> states(n);
  Position good;
  Position evil;
  if (config.placement) {
    good = config.placement->good;
    evil = config.placement->evil;
    for (std::size_t j = 0; j < n; ++j)
      states[j] = {config.roster[j].id, config.placement->agents[j], Action::Stay};
  } else {
    Rng objects(derive_seed(seed, {kTagObjects}));
    good = random_cell(objects, m);
    do {
      evil = random_cell(objects, m);
    } while (evil == good);
    for (std::size_t j = 0; j < n; ++j) {
      Rng rng(derive_seed(seed, {kTagPlacement, config.roster[j].id}));
      states[j] = {config.roster[j].id, random_cell(rng, m), Action::Stay};
    }
  }
  Environment env(m, good, evil, config.good_pattern(), config.evil_pattern());

  RewardLog log;
  log.iterations = iters;
  log.rewards.assign(n * iters, 0.0);
  for (const auto& a : config.roster) {
    log.agent_ids.push_back(a.id);
    log.kinds.push_back(a.kind());
  }
  if (config.record_trajectory) {
    Trajectory t;
    t.initial_good = good;
    t.initial_evil = evil;
    for (const auto& s : states) t.initial_agents.push_back(s.pos);
    log.trajectory = std::move(t);
  }

  const bool shared_board =
      std::any_of(config.roster.begin(), config.roster.end(), [&](const AgentSpec& a) {
        return a.comm == CommMethod::Stigmergy ||
               (a.comm == CommMethod::Talking && config.talking_range == kUnlimitedRange);
      });

  std::vector<Observation> observations(n);
  std::vector<Action> actions(n);
  std::vector<ObservedCell> view;

  for (int i = 0; i < iters; ++i) {
    // Observation: everyone sees the pre-move snapshot.
    for (std::size_t j = 0; j < n; ++j) observations[j] = observe(env, states[j].pos);

    std::optional<ExchangeBoard> board;
    if (shared_board) board.emplace(observations, m);

    // Exchange and decide; no decision sees another agent's move this round.
    for (std::size_t j = 0; j < n; ++j) {
      const AgentSpec& spec = config.roster[j];
      const AgentState& self = states[j];
      Rng rng(derive_seed(seed, {kTagStep, spec.id, static_cast<std::uint64_t>(i)}));
      Action act = Action::Stay;
      switch (spec.policy) {
        case Policy::Oracle: act = oracle_decide(env, self); break;
        case Policy::Random: act = random_decide(rng, config.random_may_stay); break;
        case Policy::LocalSearch:
          switch (spec.comm) {
            case CommMethod::Talking:
              if (board) {
                act = local_search_decide(board->cells(), self.pos, m, rng);
              } else {
                act = local_search_decide(
                    talking_exchange(observations, j, m, config.talking_range), self, m, rng);
              }
              break;
            case CommMethod::Stigmergy:
              board->stigmergy_view(observations[j], rng, view);
              act = local_search_decide(view, self.pos, m, rng);
              break;
            case CommMethod::Imitation: {
              std::optional<Action> copied;
              if (i > 0) copied = imitation_select(states, j, m, rng);
              act = copied ? *copied
                           : local_search_decide(own_cells_sorted(observations[j], m), self.pos, m, rng);
              break;
            }
            case CommMethod::None:
              act = local_search_decide(own_cells_sorted(observations[j], m), self.pos, m, rng);
              break;
          }
          break;
      }
      actions[j] = act;
    }

    for (std::size_t j = 0; j < n; ++j) {
      states[j].pos = apply_action(states[j].pos, actions[j], m);
      states[j].last_action = actions[j];
    }

    env = step_special_objects(env);

    for (std::size_t j = 0; j < n; ++j) log.rewards[j * iters + i] = reward_at(states[j].pos, env);

    if (log.trajectory) {
      auto& t = *log.trajectory;
      std::vector<Position> pos(n);
      for (std::size_t j = 0; j < n; ++j) pos[j] = states[j].pos;
      t.agents.push_back(std::move(pos));
      t.actions.push_back(actions);
      t.good.push_back(env.good());
      t.evil.push_back(env.evil());
    }
  }
  return log;
}

// ---- Scores ----------------------------------------------------------------

namespace {
std::vector<std::size_t> id_order(const RewardLog& log) {
  std::vector<std::size_t> order(log.agents());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return log.agent_ids[a] < log.agent_ids[b]; });
  return order;
}

double row_sum(const RewardLog& log, std::size_t j) {
  double s = 0.0;
  for (int i = 0; i < log.iterations; ++i) s += log.rewards[j * log.iterations + i];
  return s;
}
}  // namespace

double group_score(const RewardLog& log) {
  if (log.agents() == 0 || log.iterations == 0) throw std::invalid_argument("empty reward log");
  double total = 0.0;
  for (std::size_t j : id_order(log)) total += row_sum(log, j);
  return total / (static_cast<double>(log.agents()) * log.iterations);
}

std::optional<double> kind_score(const RewardLog& log, AgentKind kind) {
  double total = 0.0;
  std::size_t count = 0;
  for (std::size_t j : id_order(log)) {
    if (log.kinds[j] != kind) continue;
    total += row_sum(log, j);
    ++count;
  }
  if (count == 0) return std::nullopt;
  return total / (static_cast<double>(count) * log.iterations);
}

double SummaryStats::std_error() const noexcept {
  return count == 0 ? 0.0 : std_dev / std::sqrt(static_cast<double>(count));
}

SummaryStats SummaryStats::of(std::span<const double> values) {
  SummaryStats s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std_dev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

double GroupScore::std_error() const noexcept {
  return episode_count == 0 ? 0.0 : std_dev / std::sqrt(static_cast<double>(episode_count));
}

std::uint64_t episode_seed(std::uint64_t master_seed, std::size_t index) noexcept {
  return derive_seed(master_seed, {kTagEpisode, static_cast<std::uint64_t>(index)});
}

GroupScore evaluate(const EpisodeConfig& config, std::size_t episodes, std::uint64_t master_seed,
                    unsigned threads) {
  if (episodes < 1) throw ConfigError("episodes must be at least 1");
  config.validate();

  std::vector<AgentKind> kinds;
  for (const auto& a : config.roster) {
    const AgentKind k = a.kind();
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) kinds.push_back(k);
  }

  std::vector<double> scores(episodes);
  std::vector<std::vector<double>> per_kind(kinds.size(), std::vector<double>(episodes));

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t e = first; e < episodes; e += stride) {
      const RewardLog log = run_episode(config, episode_seed(master_seed, e));
      scores[e] = group_score(log);
      for (std::size_t k = 0; k < kinds.size(); ++k) per_kind[k][e] = *kind_score(log, kinds[k]);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, episodes));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  GroupScore out;
  const SummaryStats s = SummaryStats::of(scores);
  out.mean = s.mean;
  out.std_dev = s.std_dev;
  out.episode_count = episodes;
  out.config = config;
  out.episode_scores = std::move(scores);
  for (std::size_t k = 0; k < kinds.size(); ++k) out.by_kind[kinds[k]] = SummaryStats::of(per_kind[k]);
  return out;
}

double weighted_average_baseline(const std::map<AgentKind, double>& homogeneous,
                                 std::span<const std::pair<AgentKind, int>> composition) {
  double weighted = 0.0;
  int total = 0;
  for (const auto& [kind, count] : composition) {
    auto it = homogeneous.find(kind);
    if (it == homogeneous.end())
      throw MissingKindError("no homogeneous score for kind " + std::string(to_string(kind)));
    weighted += count * it->second;
    total += count;
  }
  if (total <= 0) throw ConfigError("composition must contain at least one agent");
  return weighted / total;
}

double weighted_average_baseline_error(const std::map<AgentKind, GroupScore>& homogeneous,
                                       std::span<const std::pair<AgentKind, int>> composition) {
  double var = 0.0;
  int total = 0;
  for (const auto& [kind, count] : composition) {
    auto it = homogeneous.find(kind);
    if (it == homogeneous.end())
      throw MissingKindError("no homogeneous score for kind " + std::string(to_string(kind)));
    const double se = it->second.std_error();
    var += static_cast<double>(count) * count * se * se;
    total += count;
  }
  if (total <= 0) throw ConfigError("composition must contain at least one agent");
  return std::sqrt(var) / total;
}

}  // namespace auit
