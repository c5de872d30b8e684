#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace rrmon {

/// The six request-response specification types.
enum class SpecType : std::uint8_t { rr1, rr2, rr3, rr4, rr5, rr6 };

inline constexpr std::array<SpecType, 6> all_spec_types{SpecType::rr1, SpecType::rr2, SpecType::rr3,
                                                        SpecType::rr4, SpecType::rr5, SpecType::rr6};

/// "RR1" .. "RR6".
std::string_view to_string(SpecType s) noexcept;

/// Accepts "RR1".."RR6" in any letter case.
std::optional<SpecType> parse_spec_type(std::string_view name) noexcept;

/// RR3 and RR4 are the counting (non-regular) types.
constexpr bool is_regular(SpecType s) noexcept { return s != SpecType::rr3 && s != SpecType::rr4; }

} // namespace rrmon
