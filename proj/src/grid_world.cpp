#include "auit/grid_world.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "auit/rng.hpp"

namespace auit {

Action action_from_offset(int dx, int dy) {
  for (Action a : kAllActions) {
    const Offset o = offset_of(a);
    if (o.dx == dx && o.dy == dy) return a;
  }
  throw std::invalid_argument("offset outside the Moore neighbourhood");
}

Action opposite(Action a) noexcept {
  const Offset o = offset_of(a);
  return action_from_offset(-o.dx, -o.dy);
}

std::string_view to_string(Action a) noexcept {
  switch (a) {
    case Action::Left: return "left";
    case Action::Right: return "right";
    case Action::Up: return "up";
    case Action::Down: return "down";
    case Action::UpLeft: return "up-left";
    case Action::UpRight: return "up-right";
    case Action::DownLeft: return "down-left";
    case Action::DownRight: return "down-right";
    case Action::Stay: return "stay";
  }
  return "?";
}

int torus_delta(int from, int to, int m) noexcept {
  int d = (to - from) % m;
  if (d < 0) d += m;
  // d in [0, m); map to (-m/2, m/2]
  if (2 * d > m) d -= m;
  return d;
}

int torus_chebyshev(Position a, Position b, int m) noexcept {
  const int dx = std::abs(torus_delta(a.x, b.x, m));
  const int dy = std::abs(torus_delta(a.y, b.y, m));
  return std::max(dx, dy);
}

Position apply_action(Position p, Action a, int m) noexcept {
  const Offset o = offset_of(a);
  return wrap(p.x + o.dx, p.y + o.dy, m);
}

double good_shell(int d) noexcept {
  switch (d) {
    case 0: return 1.0;
    case 1: return 0.8;
    case 2: return 0.5;
    case 3: return 0.1;
    default: return 0.0;
  }
}

double evil_shell(int d) noexcept { return -good_shell(d); }

std::vector<double> reward_sum_alphabet() {
  std::vector<double> values;
  for (int g = 0; g <= 4; ++g)
    for (int e = 0; e <= 4; ++e) values.push_back(good_shell(g) + evil_shell(e));
  return values;
}

// ---- MovementPattern -------------------------------------------------------

MovementPattern::MovementPattern(std::vector<Action> actions, std::size_t cursor)
    : actions_(std::move(actions)), cursor_(cursor) {
  if (actions_.empty()) throw ConfigError("movement pattern must contain at least one action");
  if (cursor_ >= actions_.size()) throw ConfigError("movement pattern cursor out of range");
}

MovementPattern MovementPattern::random(std::size_t length, std::uint64_t seed) {
  if (length == 0) throw ConfigError("movement pattern length must be at least 1");
  Rng rng(seed);
  std::vector<Action> actions(length);
  for (auto& a : actions) a = kAllActions[rng.uniform(kAllActions.size())];
  return MovementPattern(std::move(actions));
}

MovementPattern MovementPattern::advanced() const {
  MovementPattern next = *this;
  next.cursor_ = (cursor_ + 1) % actions_.size();
  return next;
}

std::uint64_t MovementPattern::digest() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Action a : actions_) {
    h ^= static_cast<std::uint64_t>(a);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---- Environment -----------------------------------------------------------

Environment::Environment(int m, Position good, Position evil, MovementPattern good_pattern,
                         MovementPattern evil_pattern)
    : Environment(Unchecked{}, m, good, evil, std::move(good_pattern), std::move(evil_pattern)) {
  if (m < kMinGridSide)
    throw ConfigError("grid side must be at least " + std::to_string(kMinGridSide) + ", got " +
                      std::to_string(m));
  if (good_ != wrap(good.x, good.y, m) || evil_ != wrap(evil.x, evil.y, m))
    throw ConfigError("special object position outside the grid");
  if (good_ == evil_) throw ConfigError("Good and Evil must start on different cells");
}

Environment::Environment(Unchecked, int m, Position good, Position evil,
                         MovementPattern good_pattern, MovementPattern evil_pattern)
    : m_(m),
      good_(good),
      evil_(evil),
      good_pattern_(std::move(good_pattern)),
      evil_pattern_(std::move(evil_pattern)) {}

Position Environment::next_good() const noexcept {
  return apply_action(good_, good_pattern_.current(), m_);
}

Environment step_special_objects(const Environment& env) {
  return Environment(Environment::Unchecked{}, env.m_,
                     apply_action(env.good_, env.good_pattern_.current(), env.m_),
                     apply_action(env.evil_, env.evil_pattern_.current(), env.m_),
                     env.good_pattern_.advanced(), env.evil_pattern_.advanced());
}

double reward_at(Position cell, const Environment& env) noexcept {
  const int m = env.side();
  return good_shell(torus_chebyshev(cell, env.good(), m)) +
         evil_shell(torus_chebyshev(cell, env.evil(), m));
}

// ---- Complexity measures ---------------------------------------------------

double entropy_bits(int m) {
  if (m < 1) throw ConfigError("grid side must be positive");
  const double cells = static_cast<double>(m) * m;
  return 2.0 * std::log2(cells);
}

double complexity_bits(std::span<const Action> actions) {
  std::vector<Bytef> input(actions.size());
  std::transform(actions.begin(), actions.end(), input.begin(),
                 [](Action a) { return static_cast<Bytef>('0' + static_cast<int>(a)); });
  uLongf out_len = compressBound(static_cast<uLong>(input.size()));
  std::vector<Bytef> out(out_len);
  const int rc = compress2(out.data(), &out_len, input.data(),
                           static_cast<uLong>(input.size()), Z_BEST_COMPRESSION);
  if (rc != Z_OK) throw std::runtime_error("zlib compress2 failed");
  return 8.0 * static_cast<double>(out_len);
}

double complexity_bits(const MovementPattern& pattern) {
  return complexity_bits(pattern.actions());
}

// ---- Observation -----------------------------------------------------------

Observation observe(const Environment& env, Position p) {
  Observation obs{p, {}};
  const int m = env.side();
  for (std::size_t i = 0; i < kAllActions.size(); ++i) {
    const Position c = apply_action(p, kAllActions[i], m);
    obs.cells[i] = {c, reward_at(c, env)};
  }
  return obs;
}

}  // namespace auit
