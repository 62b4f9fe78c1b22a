#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace insider {

using LocIndex = std::size_t;
using IdIndex = std::size_t;

enum class Action : std::uint8_t { get = 0, move = 1, eval = 2, put = 3 };

std::string_view to_string(Action a);
std::optional<Action> parse_action(std::string_view text);

/// Small bitmask over the four actions.
class ActionSet {
 public:
  constexpr ActionSet() = default;
  constexpr ActionSet(std::initializer_list<Action> actions) {
    for (Action a : actions) insert(a);
  }

  constexpr void insert(Action a) { bits_ |= bit(a); }
  constexpr bool contains(Action a) const { return (bits_ & bit(a)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool only(Action a) const { return bits_ == bit(a); }
  constexpr std::uint8_t bits() const { return bits_; }

  friend constexpr bool operator==(ActionSet, ActionSet) = default;

 private:
  static constexpr std::uint8_t bit(Action a) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(a));
  }
  std::uint8_t bits_ = 0;
};

/// Equivalence class of identities under the insider identification. The
/// representative is the least identity index of the class.
struct ActorClassId {
  IdIndex representative = 0;
  friend auto operator<=>(const ActorClassId&, const ActorClassId&) = default;
};

/// Raised for malformed or inconsistent models.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the checker (unknown predicate, state cap, bad trace request).
class CheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace insider
