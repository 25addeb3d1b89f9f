#include "circlet/caps.hpp"

#include <charconv>
#include <cstdlib>

namespace circlet {

std::optional<Caps> Caps::parse(std::string_view spec) {
  Caps caps;
  int* fields[] = {&caps.enumeration, &caps.dp, &caps.rank};
  int index = 0;
  while (!spec.empty()) {
    if (index == 3) return std::nullopt;
    const auto slash = spec.find('/');
    const std::string_view token = spec.substr(0, slash);
    int value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size() || value < 1)
      return std::nullopt;
    *fields[index++] = value;
    if (slash == std::string_view::npos) break;
    spec.remove_prefix(slash + 1);
    if (spec.empty()) return std::nullopt;
  }
  return caps;
}

Caps Caps::from_env() {
  const char* raw = std::getenv("CIRCLET_CAPS");
  if (raw == nullptr) return Caps{};
  return parse(raw).value_or(Caps{});
}

}  // namespace circlet
