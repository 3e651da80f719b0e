#include "trafsig/event.hpp"

#include "trafsig/error.hpp"

namespace trafsig {

std::string_view event_name(event_class ev) {
    switch (ev) {
        case event_class::automated_cleaning: return "automated_cleaning";
        case event_class::app_triggered_cleaning: return "app_triggered_cleaning";
        case event_class::scheduled_cleaning: return "scheduled_cleaning";
        case event_class::physical_triggered_cleaning: return "physical_triggered_cleaning";
        case event_class::app_engagement: return "app_engagement";
        case event_class::bin_removal: return "bin_removal";
    }
    throw data_error("invalid event class");
}

event_class event_from_name(std::string_view name) {
    for (event_class ev : all_events)
        if (event_name(ev) == name) return ev;
    throw data_error("unknown event '" + std::string(name) + "'");
}

}  // namespace trafsig
