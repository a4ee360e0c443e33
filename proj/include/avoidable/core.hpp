#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace avoidable {

/// Stable vertex identifier. Derived graphs never hand out an id that was
/// used earlier in the same derivation chain.
struct VertexId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

constexpr VertexId vid(std::uint32_t v) { return VertexId{v}; }
constexpr EdgeId eid(std::uint32_t e) { return EdgeId{e}; }

using Distance = std::size_t;
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

/// Walk types, ordered from the most permissive to the most restrictive.
enum class WalkKind { wlk, trl, pth, ind, iso };

inline constexpr WalkKind kAllKinds[] = {WalkKind::wlk, WalkKind::trl, WalkKind::pth,
                                         WalkKind::ind, WalkKind::iso};

inline std::string_view to_string(WalkKind k) {
  switch (k) {
    case WalkKind::wlk: return "wlk";
    case WalkKind::trl: return "trl";
    case WalkKind::pth: return "pth";
    case WalkKind::ind: return "ind";
    case WalkKind::iso: return "iso";
  }
  return "?";
}

inline std::optional<WalkKind> parse_walk_kind(std::string_view s) {
  for (WalkKind k : kAllKinds)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

/// Closability evaluation strategy. `fast` uses per-kind reductions,
/// `oracle` searches closed walks exhaustively.
enum class Mode { fast, oracle };

/// Invalid input: unknown identifiers, malformed walks, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bounded search ran out of budget. Never reported as a wrong answer.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t used)
      : std::runtime_error(what), used_(used) {}
  std::size_t used() const noexcept { return used_; }

 private:
  std::size_t used_;
};

/// Counts search nodes against a limit; throws BudgetExceeded when spent.
class SearchBudget {
 public:
  static constexpr std::size_t kDefaultLimit = 10'000'000;

  explicit SearchBudget(std::size_t limit = kDefaultLimit) : limit_(limit) {}

  void spend(std::size_t n = 1) {
    used_ += n;
    if (used_ > limit_)
      throw BudgetExceeded("search budget of " + std::to_string(limit_) + " nodes exceeded",
                           used_);
  }
  std::size_t used() const noexcept { return used_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

}  // namespace avoidable

template <>
struct std::hash<avoidable::VertexId> {
  std::size_t operator()(avoidable::VertexId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};

template <>
struct std::hash<avoidable::EdgeId> {
  std::size_t operator()(avoidable::EdgeId e) const noexcept {
    return std::hash<std::uint32_t>{}(e.value);
  }
};
