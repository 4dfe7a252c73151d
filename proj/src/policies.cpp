#include "auit/policies.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace auit {

std::string_view to_string(AgentKind kind) noexcept {
  switch (kind) {
    case AgentKind::SL: return "SL";
    case AgentKind::TL: return "TL";
    case AgentKind::IL: return "IL";
    case AgentKind::O: return "O";
    case AgentKind::R: return "R";
  }
  return "?";
}

AgentKind AgentSpec::kind() const {
  switch (policy) {
    case Policy::Oracle: return AgentKind::O;
    case Policy::Random: return AgentKind::R;
    case Policy::LocalSearch:
      switch (comm) {
        case CommMethod::Stigmergy: return AgentKind::SL;
        case CommMethod::Talking: return AgentKind::TL;
        case CommMethod::Imitation: return AgentKind::IL;
        case CommMethod::None: break;
      }
  }
  throw std::logic_error("local search agent without a communication method has no kind");
}

AgentSpec AgentSpec::of_kind(AgentKind kind, std::uint32_t id) {
  switch (kind) {
    case AgentKind::SL: return {Policy::LocalSearch, CommMethod::Stigmergy, id};
    case AgentKind::TL: return {Policy::LocalSearch, CommMethod::Talking, id};
    case AgentKind::IL: return {Policy::LocalSearch, CommMethod::Imitation, id};
    case AgentKind::O: return {Policy::Oracle, CommMethod::None, id};
    case AgentKind::R: return {Policy::Random, CommMethod::None, id};
  }
  throw std::logic_error("unknown agent kind");
}

int reward_tenths(double reward) noexcept { return static_cast<int>(std::lround(reward * 10.0)); }

namespace {
int sign(int v) { return (v > 0) - (v < 0); }
}  // namespace

Action greedy_step_toward(Position from, Position to, int m) noexcept {
  const int dx = sign(torus_delta(from.x, to.x, m));
  const int dy = sign(torus_delta(from.y, to.y, m));
  return action_from_offset(dx, dy);
}

Action local_search_decide(std::span<const ObservedCell> known, Position self, int m, Rng& rng) {
  if (known.empty()) return Action::Stay;
  int best = reward_tenths(known.front().reward);
  for (const auto& c : known) best = std::max(best, reward_tenths(c.reward));

  std::vector<Position> ties;
  for (const auto& c : known)
    if (reward_tenths(c.reward) == best) ties.push_back(c.cell);

  const Position target = ties.size() == 1 ? ties.front() : ties[rng.uniform(ties.size())];
  return greedy_step_toward(self, target, m);
}

Action oracle_decide(const Environment& env, const AgentState& self) {
  const int m = env.side();
  const Position target = env.next_good();

  Action best = Action::Stay;
  int best_dist = m + 1;
  int best_reward = -100;
  for (Action a : kAllActions) {
    const Position dest = apply_action(self.pos, a, m);
    const int dist = torus_chebyshev(dest, target, m);
    const int reward = reward_tenths(reward_at(dest, env));
    if (dist < best_dist || (dist == best_dist && reward > best_reward)) {
      best = a;
      best_dist = dist;
      best_reward = reward;
    }
  }
  return best;
}

Action random_decide(Rng& rng, bool allow_stay) {
  if (allow_stay) return kAllActions[rng.uniform(kAllActions.size())];
  return kMoveActions[rng.uniform(kMoveActions.size())];
}

}  // namespace auit
