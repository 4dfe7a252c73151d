#include "auit/communication.hpp"

#include <algorithm>

namespace auit {

namespace {

bool in_neighbourhood(const Observation& obs, Position cell) {
  return std::any_of(obs.cells.begin(), obs.cells.end(),
                     [&](const ObservedCell& c) { return c.cell == cell; });
}

/// Distinct cells observed by the selected peers, minus the receiver's own
/// cells, ascending cell_index.
std::vector<ObservedCell> peer_union(std::span<const Observation> observations,
                                     std::size_t receiver, int m, int range) {
  const Observation& own = observations[receiver];
  std::vector<char> seen(static_cast<std::size_t>(m) * m, 0);
  for (const auto& c : own.cells) seen[cell_index(c.cell, m)] = 1;

  std::vector<ObservedCell> out;
  for (std::size_t j = 0; j < observations.size(); ++j) {
    if (j == receiver) continue;
    if (range != kUnlimitedRange && torus_chebyshev(observations[j].origin, own.origin, m) > range)
      continue;
    for (const auto& c : observations[j].cells) {
      auto& flag = seen[cell_index(c.cell, m)];
      if (flag) continue;
      flag = 1;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), [m](const ObservedCell& a, const ObservedCell& b) {
    return cell_index(a.cell, m) < cell_index(b.cell, m);
  });
  return out;
}

}  // namespace

double fake_reward(Rng& rng) noexcept { return kFakeRewardValues[rng.uniform(kFakeRewardValues.size())]; }

SharedInfo talking_exchange(std::span<const Observation> observations, std::size_t receiver,
                            int m, int range) {
  return {observations[receiver], peer_union(observations, receiver, m, range), {}};
}

SharedInfo stigmergy_exchange(std::span<const Observation> observations, std::size_t receiver,
                              int m, Rng& rng) {
  SharedInfo info{observations[receiver], peer_union(observations, receiver, m, kUnlimitedRange), {}};
  for (auto& c : info.peer_cells) c.reward = fake_reward(rng);
  return info;
}

std::vector<std::pair<std::uint32_t, Action>> visible_agents(std::span<const AgentState> states,
                                                             std::size_t receiver, int m) {
  std::vector<std::pair<std::uint32_t, Action>> out;
  const AgentState& self = states[receiver];
  for (std::size_t j = 0; j < states.size(); ++j) {
    if (j == receiver) continue;
    if (torus_chebyshev(states[j].pos, self.pos, m) <= 1)
      out.emplace_back(states[j].id, states[j].last_action);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::optional<Action> imitation_select(std::span<const AgentState> states, std::size_t receiver,
                                       int m, Rng& rng) {
  const auto visible = visible_agents(states, receiver, m);
  if (visible.empty()) return std::nullopt;
  if (visible.size() == 1) return visible.front().second;
  return visible[rng.uniform(visible.size())].second;
}

std::vector<ObservedCell> own_cells_sorted(const Observation& obs, int m) {
  std::vector<ObservedCell> out(obs.cells.begin(), obs.cells.end());
  std::sort(out.begin(), out.end(), [m](const ObservedCell& a, const ObservedCell& b) {
    return cell_index(a.cell, m) < cell_index(b.cell, m);
  });
  // m >= 3 keeps the nine cells distinct; smaller grids are rejected upstream.
  return out;
}

std::vector<ObservedCell> known_cells(const SharedInfo& info, int m) {
  const auto own = own_cells_sorted(info.own, m);
  std::vector<ObservedCell> out;
  out.reserve(own.size() + info.peer_cells.size());
  std::merge(own.begin(), own.end(), info.peer_cells.begin(), info.peer_cells.end(),
             std::back_inserter(out), [m](const ObservedCell& a, const ObservedCell& b) {
               return cell_index(a.cell, m) < cell_index(b.cell, m);
             });
  return out;
}

Action local_search_decide(const SharedInfo& info, const AgentState& self, int m, Rng& rng) {
  const auto known = known_cells(info, m);
  return local_search_decide(known, self.pos, m, rng);
}

// ---- ExchangeBoard ---------------------------------------------------------

ExchangeBoard::ExchangeBoard(std::span<const Observation> observations, int m) : m_(m) {
  std::vector<char> seen(static_cast<std::size_t>(m) * m, 0);
  for (const auto& obs : observations) {
    for (const auto& c : obs.cells) {
      auto& flag = seen[cell_index(c.cell, m)];
      if (flag) continue;
      flag = 1;
      cells_.push_back(c);
    }
  }
  std::sort(cells_.begin(), cells_.end(), [m](const ObservedCell& a, const ObservedCell& b) {
    return cell_index(a.cell, m) < cell_index(b.cell, m);
  });
}

void ExchangeBoard::stigmergy_view(const Observation& own, Rng& rng,
                                   std::vector<ObservedCell>& out) const {
  out.assign(cells_.begin(), cells_.end());
  for (auto& c : out)
    if (!in_neighbourhood(own, c.cell)) c.reward = fake_reward(rng);
}

}  // namespace auit
