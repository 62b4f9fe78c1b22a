#include "insider/types.hpp"

#include <array>

namespace insider {

namespace {
constexpr std::array<std::string_view, 4> kActionNames = {"get", "move", "eval", "put"};
}

std::string_view to_string(Action a) { return kActionNames.at(static_cast<std::size_t>(a)); }

std::optional<Action> parse_action(std::string_view text) {
  for (std::size_t i = 0; i < kActionNames.size(); ++i)
    if (kActionNames[i] == text) return static_cast<Action>(i);
  return std::nullopt;
}

}  // namespace insider
