#pragma once

// Group notation: "SL10" is ten stigmergy local-search agents, "SL9&O1" is
// nine of those plus one oracle. Tokens are SL, TL, IL, O and R.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "auit/policies.hpp"

namespace auit {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Byte offset into the input where the problem was found.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct GroupNotation {
  std::vector<std::pair<AgentKind, int>> terms;

  int total() const noexcept;
  bool homogeneous() const noexcept { return terms.size() == 1; }
  friend bool operator==(const GroupNotation&, const GroupNotation&) = default;
};

GroupNotation parse_group(std::string_view text);
std::string render(const GroupNotation& group);

/// Expands a notation into agent specs. Ids are assigned per kind in the fixed
/// order SL, TL, IL, O, R, so the term order of the notation never changes
/// which id (and random stream) an agent gets. The roster follows term order.
std::vector<AgentSpec> make_roster(const GroupNotation& group);

/// Counts per kind, in order of first appearance.
GroupNotation composition_of(std::span<const AgentSpec> roster);

/// Same kinds, scaled so the total is `size`, keeping the ratio exactly.
/// Throws ConfigError when the ratio cannot be met with whole agents.
GroupNotation scale_group(const GroupNotation& group, int size);

/// Homogeneous group of one kind with `size` agents.
GroupNotation homogeneous_group(AgentKind kind, int size);

}  // namespace auit
