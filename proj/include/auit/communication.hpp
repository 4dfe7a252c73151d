#pragma once

// Per-iteration information exchange. Every function here reads a frozen
// snapshot taken at the start of the iteration, so the order in which
// receivers are processed cannot change what any of them sees.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "auit/grid_world.hpp"
#include "auit/policies.hpp"
#include "auit/rng.hpp"

namespace auit {

/// The nine values a fake reward is drawn from (the shell values of both objects).
inline constexpr std::array<double, 9> kFakeRewardValues{-1.0, -0.8, -0.5, -0.1, 0.0,
                                                         0.1,  0.5,  0.8,  1.0};

struct SharedInfo {
  /// Always the exact observation of the receiver.
  Observation own;
  /// Cells seen by other agents, ascending cell_index, excluding the receiver's
  /// own nine cells (the exact own value wins).
  std::vector<ObservedCell> peer_cells;
  /// (agent id, previous action) of visible agents, ascending id. Imitation only.
  std::vector<std::pair<std::uint32_t, Action>> peer_actions;
};

/// Unlimited range means every other agent is a peer.
inline constexpr int kUnlimitedRange = -1;

double fake_reward(Rng& rng) noexcept;

/// Exact observations of all peers (agents whose observation origin lies within
/// `range` chessboard steps of the receiver, or everyone when unlimited).
SharedInfo talking_exchange(std::span<const Observation> observations, std::size_t receiver,
                            int m, int range = kUnlimitedRange);

/// Peer cells with each reward replaced by an independent fake draw. One draw
/// per distinct cell, taken in ascending cell_index order from `rng`.
SharedInfo stigmergy_exchange(std::span<const Observation> observations, std::size_t receiver,
                              int m, Rng& rng);

/// Agents other than the receiver whose cell is in the receiver's Moore
/// neighbourhood, with their previous action, ascending id.
std::vector<std::pair<std::uint32_t, Action>> visible_agents(std::span<const AgentState> states,
                                                             std::size_t receiver, int m);

/// The previous action of one uniformly chosen visible agent, or nullopt when
/// nobody is in range (the caller then falls back to plain local search).
std::optional<Action> imitation_select(std::span<const AgentState> states, std::size_t receiver,
                                       int m, Rng& rng);

/// Own and peer cells merged, ascending cell_index, each cell once.
std::vector<ObservedCell> known_cells(const SharedInfo& info, int m);

Action local_search_decide(const SharedInfo& info, const AgentState& self, int m, Rng& rng);

/// Own observation only, in the ascending order local_search_decide expects.
std::vector<ObservedCell> own_cells_sorted(const Observation& obs, int m);

/// Union of every agent's observed cells for one iteration, built once and
/// shared by all receivers when the talking range is unlimited. Produces the
/// same known-cell lists (and consumes the same random draws) as the
/// per-receiver exchange functions above.
class ExchangeBoard {
 public:
  ExchangeBoard(std::span<const Observation> observations, int m);

  /// All observed cells with exact rewards, ascending cell_index.
  std::span<const ObservedCell> cells() const noexcept { return cells_; }

  /// Known cells of a stigmergy receiver: exact inside its own neighbourhood,
  /// fake elsewhere. `out` is overwritten.
  void stigmergy_view(const Observation& own, Rng& rng, std::vector<ObservedCell>& out) const;

 private:
  int m_;
  std::vector<ObservedCell> cells_;
};

}  // namespace auit
