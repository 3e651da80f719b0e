#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace trafsig {

// The six observable device events signatures are mined for.
enum class event_class : std::uint8_t {
    automated_cleaning,
    app_triggered_cleaning,
    scheduled_cleaning,
    physical_triggered_cleaning,
    app_engagement,
    bin_removal,
};

inline constexpr std::array<event_class, 6> all_events = {
    event_class::automated_cleaning,   event_class::app_triggered_cleaning,
    event_class::scheduled_cleaning,   event_class::physical_triggered_cleaning,
    event_class::app_engagement,       event_class::bin_removal,
};

std::string_view event_name(event_class ev);
event_class event_from_name(std::string_view name);  // throws data_error

}  // namespace trafsig
