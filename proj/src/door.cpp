#include "insider/door.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace insider::door {

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::normal:
      return "Normal";
    case Mode::unlocked:
      return "Unlocked";
    case Mode::locked:
      return "Locked";
  }
  return "Normal";
}

bool is_open(const DoorState& s) {
  return s.mode == Mode::normal && s.pin_timer.has_value() && *s.pin_timer >= kOpenDelay &&
         *s.pin_timer < kOpenDelay + kOpenWindow;
}

DoorEvent DoorEvent::wait(double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("wait needs a positive duration");
  return {Kind::wait, dt};
}

std::string describe(const DoorEvent& e) {
  switch (e.kind) {
    case DoorEvent::Kind::lock:
      return "lock";
    case DoorEvent::Kind::unlock:
      return "unlock";
    case DoorEvent::Kind::pin_correct:
      return "pin_ok";
    case DoorEvent::Kind::pin_incorrect:
      return "pin_bad";
    case DoorEvent::Kind::wait: {
      std::array<char, 64> buf{};
      auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), e.dt);
      return "wait " + std::string(buf.data(), ec == std::errc() ? end : buf.data());
    }
  }
  return {};
}

DoorState door_step(const DoorState& s, const DoorEvent& e) {
  using K = DoorEvent::Kind;
  switch (e.kind) {
    case K::lock:
      return {Mode::locked, 0.0, std::nullopt};
    case K::unlock:
      return {Mode::unlocked, 0.0, std::nullopt};
    case K::pin_correct: {
      DoorState out = s;
      // A second correct PIN keeps the running timer.
      if (out.mode == Mode::normal && !out.pin_timer) out.pin_timer = 0.0;
      return out;
    }
    case K::pin_incorrect:
      return s;
    case K::wait: {
      DoorState out = s;
      out.clock += e.dt;
      if (out.pin_timer) {
        *out.pin_timer += e.dt;
        if (*out.pin_timer >= kOpenDelay + kOpenWindow) out.pin_timer.reset();
      }
      if (out.mode == Mode::locked && out.clock >= kLockPeriod) out = DoorState{};
      return out;
    }
  }
  return s;
}

std::vector<TraceRow> door_run(const std::vector<DoorEvent>& script) {
  std::vector<TraceRow> trace;
  trace.reserve(script.size());
  DoorState state;
  for (const auto& e : script) {
    state = door_step(state, e);
    trace.push_back({e, state, is_open(state)});
  }
  return trace;
}

}  // namespace insider::door
