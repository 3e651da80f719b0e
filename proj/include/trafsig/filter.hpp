#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trafsig/packet.hpp"

namespace trafsig {

// The relevance filter: drops infrastructure protocols, AP-generated DNS,
// TCP keep-alive pairs, small frames, and frames without a device endpoint.
struct filter_config {
    std::set<protocol_class> excluded_protocols = {protocol_class::arp, protocol_class::dhcp,
                                                   protocol_class::ntp};
    bool exclude_ap_dns = true;
    bool exclude_keepalive = true;
    std::uint32_t min_size_bytes = 98;  // keep frames larger than 97 bytes
    device_profile profile;
};

// Removal attribution uses the first matching rule in this fixed order, so
// reports are deterministic.
namespace filter_rule {
inline constexpr const char* protocol = "protocol";
inline constexpr const char* ap_dns = "ap_dns";
inline constexpr const char* keepalive = "keepalive";
inline constexpr const char* min_size = "min_size";
inline constexpr const char* not_device = "not_device";
}  // namespace filter_rule

struct filter_report {
    std::uint64_t input_count = 0;
    std::uint64_t output_count = 0;
    std::map<std::string, std::uint64_t> removed_by_rule;
    double retention_ratio = 1.0;
};

// Order-preserving: the output trace is a subsequence of the input.
// Keep-alive flows are tracked within this one trace only.
std::pair<packet_trace, filter_report> apply_filter(const packet_trace& trace,
                                                    const filter_config& config);

// Per-protocol records count and fraction of the trace.
std::map<protocol_class, std::pair<std::uint64_t, double>> protocol_summary(
    const packet_trace& trace);

// One (direction, size) token per record, in trace order. Throws
// contract_violation if a record still lacks a direction, which means the
// relevance filter was skipped.
std::vector<size_token> tokenize(const packet_trace& trace);

}  // namespace trafsig
