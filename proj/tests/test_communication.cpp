#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "auit/communication.hpp"

using namespace auit;

namespace {
Environment test_env(int m = 20) {
  return Environment(m, {10, 10}, {14, 3}, MovementPattern{}, MovementPattern{});
}

std::vector<Observation> observe_all(const Environment& env, const std::vector<Position>& at) {
  std::vector<Observation> out;
  for (auto p : at) out.push_back(observe(env, p));
  return out;
}
}  // namespace

TEST(Talking, SingleAgentHasNoPeers) {
  const auto env = test_env();
  const auto obs = observe_all(env, {{3, 3}});
  EXPECT_TRUE(talking_exchange(obs, 0, env.side()).peer_cells.empty());
}

TEST(Talking, DisjointPairKnowsEighteenExactCells) {
  const auto env = test_env();
  const int m = env.side();
  const auto obs = observe_all(env, {{9, 9}, {12, 11}});
  const auto info = talking_exchange(obs, 0, m);
  const auto known = known_cells(info, m);
  EXPECT_EQ(known.size(), 18u);
  for (const auto& c : known) EXPECT_DOUBLE_EQ(c.reward, reward_at(c.cell, env));
}

TEST(Talking, CoLocatedPairAddsNothing) {
  const auto env = test_env();
  const auto obs = observe_all(env, {{5, 5}, {5, 5}});
  const auto info = talking_exchange(obs, 0, env.side());
  EXPECT_TRUE(info.peer_cells.empty());
  EXPECT_EQ(known_cells(info, env.side()).size(), 9u);
}

TEST(Talking, RangeLimitDropsFarPeers) {
  const auto env = test_env();
  const auto obs = observe_all(env, {{2, 2}, {4, 2}, {12, 12}});
  EXPECT_EQ(talking_exchange(obs, 0, env.side(), 2).peer_cells.size(), 6u);
  EXPECT_EQ(talking_exchange(obs, 0, env.side()).peer_cells.size(), 15u);
}

TEST(Talking, NeverAltersRewards) {
  const auto env = test_env(15);
  Rng rng(8);
  std::vector<Position> at;
  for (int i = 0; i < 12; ++i) at.push_back({static_cast<int>(rng.uniform(15)), static_cast<int>(rng.uniform(15))});
  const auto obs = observe_all(env, at);
  for (std::size_t r = 0; r < at.size(); ++r)
    for (const auto& c : talking_exchange(obs, r, 15).peer_cells)
      ASSERT_DOUBLE_EQ(c.reward, reward_at(c.cell, env));
}

TEST(Stigmergy, SingleAgentMatchesNoCommunication) {
  const auto env = test_env();
  const auto obs = observe_all(env, {{9, 10}});
  Rng rng(1);
  const auto info = stigmergy_exchange(obs, 0, env.side(), rng);
  EXPECT_TRUE(info.peer_cells.empty());
  const auto known = known_cells(info, env.side());
  EXPECT_EQ(known.size(), 9u);
  for (const auto& c : known) EXPECT_DOUBLE_EQ(c.reward, reward_at(c.cell, env));
}

TEST(Stigmergy, OwnObservationStaysExact) {
  const auto env = test_env();
  const auto obs = observe_all(env, {{9, 10}, {10, 11}, {3, 3}});
  Rng rng(2);
  const auto info = stigmergy_exchange(obs, 0, env.side(), rng);
  for (const auto& c : info.own.cells) EXPECT_DOUBLE_EQ(c.reward, reward_at(c.cell, env));
  for (const auto& c : info.peer_cells)
    EXPECT_GT(torus_chebyshev(c.cell, obs[0].origin, env.side()), 1);
}

TEST(Stigmergy, FakeRewardsAreMeanZero) {
  Rng rng(31337);
  const int draws = 1'000'000;
  double sum = 0.0;
  std::map<double, int> counts;
  for (int i = 0; i < draws; ++i) {
    const double v = fake_reward(rng);
    sum += v;
    ++counts[v];
  }
  EXPECT_NEAR(sum / draws, 0.0, 0.01);
  EXPECT_EQ(counts.size(), kFakeRewardValues.size());
}

TEST(Stigmergy, SameSeedSameFakes) {
  const auto env = test_env();
  const auto obs = observe_all(env, {{1, 1}, {6, 6}, {12, 2}});
  Rng a(77);
  Rng b(77);
  const auto x = stigmergy_exchange(obs, 1, env.side(), a);
  const auto y = stigmergy_exchange(obs, 1, env.side(), b);
  ASSERT_EQ(x.peer_cells.size(), y.peer_cells.size());
  for (std::size_t i = 0; i < x.peer_cells.size(); ++i)
    EXPECT_EQ(x.peer_cells[i].reward, y.peer_cells[i].reward);
}

TEST(ExchangeBoard, MatchesPerReceiverExchanges) {
  const int m = 12;
  const auto env = Environment(m, {3, 4}, {8, 9}, MovementPattern{}, MovementPattern{});
  Rng place(4);
  std::vector<Position> at;
  for (int i = 0; i < 9; ++i) at.push_back({static_cast<int>(place.uniform(m)), static_cast<int>(place.uniform(m))});
  const auto obs = observe_all(env, at);
  const ExchangeBoard board(obs, m);

  for (std::size_t r = 0; r < at.size(); ++r) {
    const auto talk = known_cells(talking_exchange(obs, r, m), m);
    ASSERT_EQ(talk.size(), board.cells().size());
    for (std::size_t i = 0; i < talk.size(); ++i) ASSERT_EQ(talk[i].cell, board.cells()[i].cell);

    Rng a(1000 + r);
    Rng b(1000 + r);
    const auto stig = known_cells(stigmergy_exchange(obs, r, m, a), m);
    std::vector<ObservedCell> view;
    board.stigmergy_view(obs[r], b, view);
    ASSERT_EQ(stig.size(), view.size());
    for (std::size_t i = 0; i < view.size(); ++i) {
      ASSERT_EQ(stig[i].cell, view[i].cell);
      ASSERT_EQ(stig[i].reward, view[i].reward);
    }
    ASSERT_EQ(local_search_decide(stig, at[r], m, a), local_search_decide(view, at[r], m, b));
  }
}

TEST(Imitation, NobodyInRange) {
  std::vector<AgentState> states{{0, {1, 1}, Action::Up}, {1, {5, 5}, Action::Down}};
  Rng rng(1);
  EXPECT_FALSE(imitation_select(states, 0, 10, rng).has_value());
}

TEST(Imitation, SingleVisibleAgentIsCopied) {
  std::vector<AgentState> states{{0, {1, 1}, Action::Stay}, {1, {2, 2}, Action::Up}};
  Rng rng(1);
  EXPECT_EQ(imitation_select(states, 0, 10, rng), Action::Up);
}

TEST(Imitation, WrapsAroundTheTorus) {
  std::vector<AgentState> states{{0, {0, 0}, Action::Stay}, {1, {9, 9}, Action::Left}};
  Rng rng(1);
  EXPECT_EQ(imitation_select(states, 0, 10, rng), Action::Left);
}

TEST(Imitation, ThreeVisibleAgentsChosenUniformly) {
  std::vector<AgentState> states{{0, {4, 4}, Action::Stay},
                                 {1, {3, 3}, Action::Up},
                                 {2, {4, 5}, Action::Left},
                                 {3, {5, 4}, Action::DownRight},
                                 {4, {8, 8}, Action::Right}};
  std::map<Action, int> counts;
  const int trials = 100'000;
  for (int t = 0; t < trials; ++t) {
    Rng rng(static_cast<std::uint64_t>(t) * 7919);
    ++counts[*imitation_select(states, 0, 10, rng)];
  }
  ASSERT_EQ(counts.size(), 3u);
  for (const auto& [a, c] : counts) EXPECT_NEAR(c / static_cast<double>(trials), 1.0 / 3.0, 0.01);
}

TEST(Imitation, ReceiverOrderDoesNotMatter) {
  std::vector<AgentState> states{{10, {4, 4}, Action::Stay},
                                 {3, {3, 3}, Action::Up},
                                 {7, {4, 5}, Action::Left}};
  std::vector<AgentState> shuffled{states[2], states[0], states[1]};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng a(seed);
    Rng b(seed);
    EXPECT_EQ(imitation_select(states, 0, 10, a), imitation_select(shuffled, 1, 10, b));
  }
}
