#pragma once

// The toroidal grid world: geometry, the reward field of the Good and Evil
// objects, their movement patterns, and the two complexity measures.
//
// Axis convention: x is the column, y is the row. "up" decrements y and
// "left" decrements x. Coordinates are 0-based and always reduced mod m.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace auit {

/// Raised for invalid parameters (grid too small, empty roster, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest side for which the radius-3 reward shells are well formed.
inline constexpr int kMinGridSide = 5;

struct Position {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(const Position&, const Position&) = default;
};

/// Reduces any integer coordinate pair onto the m x m torus.
constexpr Position wrap(int x, int y, int m) noexcept {
  x %= m;
  y %= m;
  if (x < 0) x += m;
  if (y < 0) y += m;
  return {x, y};
}

/// Row-major cell index, y * m + x.
constexpr int cell_index(Position p, int m) noexcept { return p.y * m + p.x; }

enum class Action : std::uint8_t {
  Left,
  Right,
  Up,
  Down,
  UpLeft,
  UpRight,
  DownLeft,
  DownRight,
  Stay,
};

inline constexpr std::array<Action, 9> kAllActions{
    Action::Left,     Action::Right,     Action::Up,   Action::Down, Action::UpLeft,
    Action::UpRight,  Action::DownLeft,  Action::DownRight, Action::Stay};

/// The eight moves to a neighbouring cell (everything except Stay).
inline constexpr std::array<Action, 8> kMoveActions{
    Action::Left,    Action::Right,    Action::Up,       Action::Down,
    Action::UpLeft,  Action::UpRight,  Action::DownLeft, Action::DownRight};

struct Offset {
  int dx = 0;
  int dy = 0;
};

constexpr Offset offset_of(Action a) noexcept {
  switch (a) {
    case Action::Left: return {-1, 0};
    case Action::Right: return {1, 0};
    case Action::Up: return {0, -1};
    case Action::Down: return {0, 1};
    case Action::UpLeft: return {-1, -1};
    case Action::UpRight: return {1, -1};
    case Action::DownLeft: return {-1, 1};
    case Action::DownRight: return {1, 1};
    case Action::Stay: return {0, 0};
  }
  return {0, 0};
}

/// The action whose offset is (dx, dy); both components must be in {-1,0,1}.
Action action_from_offset(int dx, int dy);

Action opposite(Action a) noexcept;

std::string_view to_string(Action a) noexcept;

/// Toroidal chessboard distance: max over axes of min(|d|, m - |d|).
int torus_chebyshev(Position a, Position b, int m) noexcept;

/// Shortest signed displacement from `from` to `to` along one axis, in
/// (-m/2, m/2]. Ties at exactly m/2 resolve to the positive direction.
int torus_delta(int from, int to, int m) noexcept;

Position apply_action(Position p, Action a, int m) noexcept;

/// Reward contributed by Good at chessboard distance d: 1, .8, .5, .1, 0.
double good_shell(int d) noexcept;
/// Reward contributed by Evil at chessboard distance d: -1, -.8, -.5, -.1, 0.
double evil_shell(int d) noexcept;

/// Every value reward_at can take: the 25 pairwise sums of the two shells.
std::vector<double> reward_sum_alphabet();

/// A looping sequence of actions with a cursor.
class MovementPattern {
 public:
  MovementPattern() : actions_{Action::Stay} {}
  explicit MovementPattern(std::vector<Action> actions, std::size_t cursor = 0);

  /// `length` actions drawn uniformly from all nine, from a fixed seed.
  static MovementPattern random(std::size_t length, std::uint64_t seed);

  Action current() const noexcept { return actions_[cursor_]; }
  std::size_t cursor() const noexcept { return cursor_; }
  std::size_t size() const noexcept { return actions_.size(); }
  std::span<const Action> actions() const noexcept { return actions_; }

  /// Copy with the cursor moved one place, wrapping to 0 after the end.
  MovementPattern advanced() const;

  /// Stable 64-bit digest of the action sequence (cursor excluded).
  std::uint64_t digest() const noexcept;

  friend bool operator==(const MovementPattern&, const MovementPattern&) = default;

 private:
  std::vector<Action> actions_;
  std::size_t cursor_ = 0;
};

/// Immutable snapshot of the world: grid side, object positions, patterns.
class Environment {
 public:
  /// Throws ConfigError when m < kMinGridSide or good == evil.
  Environment(int m, Position good, Position evil, MovementPattern good_pattern,
              MovementPattern evil_pattern);

  int side() const noexcept { return m_; }
  Position good() const noexcept { return good_; }
  Position evil() const noexcept { return evil_; }
  const MovementPattern& good_pattern() const noexcept { return good_pattern_; }
  const MovementPattern& evil_pattern() const noexcept { return evil_pattern_; }

  /// Where Good will be after the next step.
  Position next_good() const noexcept;

 private:
  friend Environment step_special_objects(const Environment& env);
  struct Unchecked {};
  Environment(Unchecked, int m, Position good, Position evil, MovementPattern good_pattern,
              MovementPattern evil_pattern);

  int m_;
  Position good_;
  Position evil_;
  MovementPattern good_pattern_;
  MovementPattern evil_pattern_;
};

/// Both objects take their pattern's current action; both cursors advance.
/// Objects may coincide after stepping; only the initial state keeps them apart.
Environment step_special_objects(const Environment& env);

double reward_at(Position cell, const Environment& env) noexcept;

/// Search-space complexity in bits: 2 * log2(m^2), the entropy of two
/// independent uniformly placed objects.
double entropy_bits(int m);

/// Compressed length in bits of the pattern's action sequence (zlib, level 9).
/// An upper-bound proxy for the Kolmogorov complexity of the pattern.
double complexity_bits(const MovementPattern& pattern);
/// Same proxy over a raw action sequence; used for the combined two-object K.
double complexity_bits(std::span<const Action> actions);

struct ObservedCell {
  Position cell;
  double reward = 0.0;
};

/// The radius-1 Moore neighbourhood of an agent with current rewards.
struct Observation {
  Position origin;
  std::array<ObservedCell, 9> cells;
};

/// Cells are listed in the order of kAllActions offsets (centre last).
Observation observe(const Environment& env, Position p);

}  // namespace auit
