#include "rrmon/spec_type.hpp"

#include <cctype>

namespace rrmon {

std::string_view to_string(SpecType s) noexcept {
  static constexpr std::array<std::string_view, 6> names{"RR1", "RR2", "RR3", "RR4", "RR5", "RR6"};
  return names[static_cast<std::size_t>(s)];
}

std::optional<SpecType> parse_spec_type(std::string_view name) noexcept {
  if (name.size() != 3 || std::toupper(static_cast<unsigned char>(name[0])) != 'R' ||
      std::toupper(static_cast<unsigned char>(name[1])) != 'R')
    return std::nullopt;
  if (name[2] < '1' || name[2] > '6')
    return std::nullopt;
  return static_cast<SpecType>(name[2] - '1');
}

} // namespace rrmon
