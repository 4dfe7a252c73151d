#include "auit/notation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "auit/grid_world.hpp"

namespace auit {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

int GroupNotation::total() const noexcept {
  int n = 0;
  for (const auto& t : terms) n += t.second;
  return n;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupNotation parse() {
    if (text_.empty()) throw ParseError("empty group notation", 0);
    GroupNotation out;
    for (;;) {
      const std::size_t term_start = pos_;
      const AgentKind kind = kind_token();
      const int count = number();
      for (const auto& t : out.terms)
        if (t.first == kind)
          throw ParseError("duplicate kind " + std::string(to_string(kind)), term_start);
      out.terms.emplace_back(kind, count);
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '&') throw ParseError("expected '&' or end of input", pos_);
      ++pos_;
    }
    return out;
  }

 private:
  AgentKind kind_token() {
    // Two-letter tokens first so "SL" is not read as an unknown "S".
    static constexpr std::pair<std::string_view, AgentKind> kTokens[] = {
        {"SL", AgentKind::SL}, {"TL", AgentKind::TL}, {"IL", AgentKind::IL},
        {"O", AgentKind::O},   {"R", AgentKind::R}};
    const std::string_view rest = text_.substr(pos_);
    for (const auto& [token, kind] : kTokens) {
      if (rest.starts_with(token)) {
        pos_ += token.size();
        return kind;
      }
    }
    throw ParseError("unknown agent kind", pos_);
  }

  int number() {
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) throw ParseError("count too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a count", start);
    if (value == 0) throw ParseError("count must be at least 1", start);
    return static_cast<int>(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t kind_rank(AgentKind k) {
  return static_cast<std::size_t>(std::find(kAllKinds.begin(), kAllKinds.end(), k) - kAllKinds.begin());
}

}  // namespace

GroupNotation parse_group(std::string_view text) { return Parser(text).parse(); }

std::string render(const GroupNotation& group) {
  std::string out;
  for (const auto& [kind, count] : group.terms) {
    if (!out.empty()) out += '&';
    out += to_string(kind);
    out += std::to_string(count);
  }
  return out;
}

std::vector<AgentSpec> make_roster(const GroupNotation& group) {
  // Base id per kind, by the fixed kind order.
  std::vector<std::uint32_t> base(kAllKinds.size(), 0);
  std::uint32_t next = 0;
  for (AgentKind k : kAllKinds) {
    base[kind_rank(k)] = next;
    for (const auto& t : group.terms)
      if (t.first == k) next += static_cast<std::uint32_t>(t.second);
  }
  std::vector<AgentSpec> roster;
  roster.reserve(static_cast<std::size_t>(group.total()));
  for (const auto& [kind, count] : group.terms)
    for (int c = 0; c < count; ++c)
      roster.push_back(AgentSpec::of_kind(kind, base[kind_rank(kind)] + static_cast<std::uint32_t>(c)));
  return roster;
}

GroupNotation composition_of(std::span<const AgentSpec> roster) {
  GroupNotation out;
  for (const auto& a : roster) {
    const AgentKind k = a.kind();
    auto it = std::find_if(out.terms.begin(), out.terms.end(),
                           [k](const auto& t) { return t.first == k; });
    if (it == out.terms.end())
      out.terms.emplace_back(k, 1);
    else
      ++it->second;
  }
  return out;
}

GroupNotation scale_group(const GroupNotation& group, int size) {
  const int total = group.total();
  if (total <= 0 || size <= 0) throw ConfigError("group size must be positive");
  int g = 0;
  for (const auto& t : group.terms) g = std::gcd(g, t.second);
  const int unit = total / g;  // agents in the reduced ratio
  if (size % unit != 0)
    throw ConfigError("ratio " + render(group) + " cannot be realised with " + std::to_string(size) +
                      " agents");
  GroupNotation out;
  for (const auto& [kind, count] : group.terms) out.terms.emplace_back(kind, count / g * (size / unit));
  return out;
}

GroupNotation homogeneous_group(AgentKind kind, int size) {
  if (size < 1) throw ConfigError("group size must be positive");
  return GroupNotation{{{kind, size}}};
}

}  // namespace auit
