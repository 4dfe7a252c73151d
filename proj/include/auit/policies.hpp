#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "auit/grid_world.hpp"
#include "auit/rng.hpp"

namespace auit {

enum class Policy : std::uint8_t { LocalSearch, Oracle, Random };

/// How an agent receives information from the rest of the group. Oracle and
/// Random agents have none of their own; they donate observations and actions
/// through whichever method the receiving agent uses.
enum class CommMethod : std::uint8_t { None, Talking, Stigmergy, Imitation };

/// The five agent kinds of the group notation.
enum class AgentKind : std::uint8_t { SL, TL, IL, O, R };

inline constexpr std::array<AgentKind, 5> kAllKinds{AgentKind::SL, AgentKind::TL, AgentKind::IL,
                                                    AgentKind::O, AgentKind::R};

std::string_view to_string(AgentKind kind) noexcept;

struct AgentSpec {
  Policy policy = Policy::LocalSearch;
  CommMethod comm = CommMethod::None;
  /// Stable identity. Random streams are keyed on it, never on roster index.
  std::uint32_t id = 0;

  AgentKind kind() const;
  static AgentSpec of_kind(AgentKind kind, std::uint32_t id);

  friend bool operator==(const AgentSpec&, const AgentSpec&) = default;
};

struct AgentState {
  std::uint32_t id = 0;
  Position pos;
  Action last_action = Action::Stay;
};

/// Rewards compared at the resolution of the reward tables (tenths), so that
/// e.g. 0.8 - 0.1 and 0.7 count as a tie.
int reward_tenths(double reward) noexcept;

/// An action that brings `from` one chessboard step closer to `to`, or Stay
/// when they coincide. Each axis moves along the shorter way round.
Action greedy_step_toward(Position from, Position to, int m) noexcept;

/// Local search over the cells an agent knows about. `known` must hold each
/// cell at most once, in ascending cell_index order. The best cell is chosen
/// uniformly among exact ties and the agent steps greedily toward it.
Action local_search_decide(std::span<const ObservedCell> known, Position self, int m, Rng& rng);

/// Steps toward Good's next position. Among equally close moves it prefers the
/// destination with the higher currently observed reward, then kAllActions
/// order. Evil is not pursued or avoided.
Action oracle_decide(const Environment& env, const AgentState& self);

/// A uniformly random neighbour cell; Stay joins the draw only if `allow_stay`.
Action random_decide(Rng& rng, bool allow_stay = false);

}  // namespace auit
