#include "auit/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <ctime>

namespace auit {

std::string_view to_string(SweepAxis axis) noexcept {
  switch (axis) {
    case SweepAxis::Composition: return "composition";
    case SweepAxis::GroupSize: return "size";
    case SweepAxis::EnvironmentComplexity: return "environment";
    case SweepAxis::EvaluationTime: return "time";
    case SweepAxis::Comparison: return "compare";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view text) {
  for (SweepAxis a : {SweepAxis::Composition, SweepAxis::GroupSize, SweepAxis::EnvironmentComplexity,
                      SweepAxis::EvaluationTime, SweepAxis::Comparison})
    if (text == to_string(a)) return a;
  throw ConfigError("unknown sweep axis '" + std::string(text) + "'");
}

double SweepPoint::gain() const {
  if (!baseline) throw std::logic_error("sweep point has no baseline");
  return score.mean - *baseline;
}

double SweepPoint::gain_error() const {
  if (!baseline_error) throw std::logic_error("sweep point has no baseline");
  const double se = score.std_error();
  return std::sqrt(se * se + *baseline_error * *baseline_error);
}

std::vector<double> SweepResult::axis_values() const {
  std::vector<double> out;
  for (const auto& p : points) out.push_back(p.axis_value);
  return out;
}

std::vector<double> SweepResult::means() const {
  std::vector<double> out;
  for (const auto& p : points) out.push_back(p.score.mean);
  return out;
}

double config_complexity_bits(const EpisodeConfig& config) {
  const MovementPattern good = config.good_pattern();
  const MovementPattern evil = config.evil_pattern();
  std::vector<Action> joint(good.actions().begin(), good.actions().end());
  joint.insert(joint.end(), evil.actions().begin(), evil.actions().end());
  return complexity_bits(joint);
}

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::uint64_t pattern_digest(const EpisodeConfig& c) {
  return c.good_pattern().digest() * 0x9e3779b97f4a7c15ULL ^ c.evil_pattern().digest();
}

SweepPoint make_point(double axis_value, const EpisodeConfig& config, std::size_t episodes,
                      std::uint64_t seed, unsigned threads) {
  SweepPoint p;
  p.axis_value = axis_value;
  p.group = composition_of(config.roster);
  p.score = evaluate(config, episodes, seed, threads);
  p.entropy_bits = entropy_bits(config.m);
  p.complexity_bits = config_complexity_bits(config);
  p.pattern_digest = pattern_digest(config);
  return p;
}

EpisodeConfig with_group(const SweepDefaults& d, const GroupNotation& g) {
  EpisodeConfig c = d.base;
  c.roster = make_roster(g);
  c.placement.reset();
  return c;
}

SweepSpec spec_from(const SweepDefaults& d, SweepAxis axis) {
  SweepSpec s;
  s.axis = axis;
  s.episodes_per_point = d.episodes;
  s.master_seed = d.master_seed;
  s.threads = d.threads;
  return s;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.points.empty()) throw ConfigError("sweep needs at least one point");
  if (spec.axis_values.size() != spec.points.size())
    throw ConfigError("sweep needs one axis value per point");
  for (std::size_t i = 1; i < spec.axis_values.size(); ++i)
    if (!(spec.axis_values[i] > spec.axis_values[i - 1]))
      throw ConfigError("sweep axis values must be strictly increasing");
  for (const auto& p : spec.points) p.validate();

  SweepResult r;
  r.axis = spec.axis;
  r.master_seed = spec.master_seed;
  r.episodes_per_point = spec.episodes_per_point;
  r.started_at = utc_now();
  for (std::size_t i = 0; i < spec.points.size(); ++i)
    r.points.push_back(make_point(spec.axis_values[i], spec.points[i], spec.episodes_per_point,
                                  spec.master_seed, spec.threads));
  r.finished_at = utc_now();
  return r;
}

SweepResult sweep_composition(const std::vector<GroupNotation>& groups, const SweepDefaults& d) {
  if (groups.empty()) throw ConfigError("composition sweep needs at least one group");
  SweepSpec s = spec_from(d, SweepAxis::Composition);
  const int n = groups.front().total();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].total() != n)
      throw ConfigError("composition sweep groups must have equal size: " + render(groups.front()) +
                        " has " + std::to_string(n) + " agents, " + render(groups[i]) + " has " +
                        std::to_string(groups[i].total()));
    s.axis_values.push_back(static_cast<double>(i));
    s.points.push_back(with_group(d, groups[i]));
  }
  return run_sweep(s);
}

SweepResult sweep_group_size(const GroupNotation& ratio, const std::vector<int>& sizes,
                             const SweepDefaults& d) {
  SweepSpec s = spec_from(d, SweepAxis::GroupSize);
  for (int n : sizes) {
    s.axis_values.push_back(n);
    s.points.push_back(with_group(d, scale_group(ratio, n)));
  }
  return run_sweep(s);
}

SweepResult sweep_environment(const GroupNotation& group, const std::vector<int>& sides,
                              const SweepDefaults& d) {
  SweepSpec s = spec_from(d, SweepAxis::EnvironmentComplexity);
  for (int m : sides) {
    EpisodeConfig c = with_group(d, group);
    c.m = m;
    s.axis_values.push_back(m);
    s.points.push_back(std::move(c));
  }
  return run_sweep(s);
}

SweepResult sweep_time(const GroupNotation& group, const std::vector<int>& iteration_counts,
                       const SweepDefaults& d) {
  SweepSpec s = spec_from(d, SweepAxis::EvaluationTime);
  for (int it : iteration_counts) {
    EpisodeConfig c = with_group(d, group);
    c.iterations = it;
    s.axis_values.push_back(it);
    s.points.push_back(std::move(c));
  }
  return run_sweep(s);
}

SweepResult compare_homo_hetero(const std::vector<GroupNotation>& groups, const SweepDefaults& d) {
  if (groups.empty()) throw ConfigError("comparison needs at least one group");
  SweepResult r;
  r.axis = SweepAxis::Comparison;
  r.master_seed = d.master_seed;
  r.episodes_per_point = d.episodes;
  r.started_at = utc_now();

  std::map<std::pair<AgentKind, int>, GroupScore> homo_cache;
  auto homogeneous = [&](AgentKind kind, int n) -> const GroupScore& {
    auto key = std::make_pair(kind, n);
    auto it = homo_cache.find(key);
    if (it == homo_cache.end()) {
      const EpisodeConfig c = with_group(d, homogeneous_group(kind, n));
      it = homo_cache.emplace(key, evaluate(c, d.episodes, d.master_seed, d.threads)).first;
    }
    return it->second;
  };

  for (std::size_t i = 0; i < groups.size(); ++i) {
    const GroupNotation& g = groups[i];
    const int n = g.total();
    SweepPoint p = make_point(static_cast<double>(i), with_group(d, g), d.episodes, d.master_seed,
                              d.threads);
    std::map<AgentKind, double> homo_means;
    std::map<AgentKind, GroupScore> homo_scores;
    for (const auto& [kind, count] : g.terms) {
      const GroupScore& h = homogeneous(kind, n);
      homo_means[kind] = h.mean;
      homo_scores[kind] = h;
      p.subgroups.push_back({kind, p.score.by_kind.at(kind), h});
    }
    p.baseline = weighted_average_baseline(homo_means, g.terms);
    p.baseline_error = weighted_average_baseline_error(homo_scores, g.terms);
    r.points.push_back(std::move(p));
  }
  r.finished_at = utc_now();
  return r;
}

std::uint64_t result_digest(const SweepResult& result) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed_bytes = [&](const void* data, std::size_t len) {
    const auto* b = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= b[i];
      h *= 0x100000001b3ULL;
    }
  };
  auto feed = [&](auto v) { feed_bytes(&v, sizeof v); };
  feed(static_cast<int>(result.axis));
  feed(result.master_seed);
  feed(result.episodes_per_point);
  for (const auto& p : result.points) {
    feed(p.axis_value);
    const std::string g = render(p.group);
    feed_bytes(g.data(), g.size());
    feed(p.score.config.m);
    feed(p.score.config.iterations);
    for (double s : p.score.episode_scores) feed(s);
    feed(p.score.mean);
    feed(p.score.std_dev);
    feed(p.entropy_bits);
    feed(p.complexity_bits);
    feed(p.pattern_digest);
    if (p.baseline) feed(*p.baseline);
  }
  return h;
}

}  // namespace auit
