#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace insider::door {

enum class Mode { normal, unlocked, locked };

std::string_view to_string(Mode m);

// Timing of the cockpit door lock, in seconds.
inline constexpr double kOpenDelay = 30.0;   // buzzer phase after a correct PIN
inline constexpr double kOpenWindow = 5.0;   // door releases for this long
inline constexpr double kLockPeriod = 300.0; // keypad disabled after a lock

struct DoorState {
  Mode mode = Mode::normal;
  double clock = 0.0;                // seconds since the current mode was entered
  std::optional<double> pin_timer;   // seconds since a correct PIN, normal mode only

  friend bool operator==(const DoorState&, const DoorState&) = default;
};

/// The door can be opened from the cabin: normal mode, PIN accepted
/// 30 seconds ago or more, and the five-second window not yet over.
bool is_open(const DoorState& s);

struct DoorEvent {
  enum class Kind { lock, unlock, pin_correct, pin_incorrect, wait };
  Kind kind = Kind::wait;
  double dt = 0.0;  // wait only, > 0

  static DoorEvent lock() { return {Kind::lock, 0.0}; }
  static DoorEvent unlock() { return {Kind::unlock, 0.0}; }
  static DoorEvent pin_correct() { return {Kind::pin_correct, 0.0}; }
  static DoorEvent pin_incorrect() { return {Kind::pin_incorrect, 0.0}; }
  /// Throws std::invalid_argument unless dt > 0.
  static DoorEvent wait(double dt);

  friend bool operator==(const DoorEvent&, const DoorEvent&) = default;
};

std::string describe(const DoorEvent& e);

DoorState door_step(const DoorState& s, const DoorEvent& e);

struct TraceRow {
  DoorEvent event;
  DoorState state;
  bool open = false;
};

/// Runs `script` from a fresh normal-mode door.
std::vector<TraceRow> door_run(const std::vector<DoorEvent>& script);

}  // namespace insider::door
