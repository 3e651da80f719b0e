#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "trafsig/token.hpp"

namespace trafsig {

enum class protocol_class : std::uint8_t {
    dns,
    arp,
    dhcp,
    ntp,
    tcp,
    tls_over_tcp,
    other_udp,
    other,
};

std::string_view protocol_name(protocol_class p);
protocol_class protocol_from_name(std::string_view name);  // throws data_error

// Header fields relevant to protocol classification. Ports are absent for
// non-TCP/UDP frames, ip_protocol for non-IPv4 frames.
struct header_fields {
    std::uint16_t ethertype = 0;
    std::optional<std::uint8_t> ip_protocol;
    std::optional<std::uint16_t> src_port;
    std::optional<std::uint16_t> dst_port;
};

// Total and deterministic: every frame maps to exactly one class.
protocol_class classify_protocol(const header_fields& h);

// TCP fields kept for keep-alive detection. Ports complete the 4-tuple;
// the addresses live on the record itself.
struct tcp_meta {
    std::uint32_t seq = 0;
    std::uint32_t ack = 0;
    std::uint32_t payload_len = 0;
    std::uint8_t flags = 0;  // raw TCP flag byte
    std::uint16_t src_port = 0;
    std::uint16_t dst_port = 0;

    static constexpr std::uint8_t fin = 0x01;
    static constexpr std::uint8_t syn = 0x02;
    static constexpr std::uint8_t rst = 0x04;
    static constexpr std::uint8_t ack_flag = 0x10;
};

// One captured frame. `size` is the pcap original-length field (frame length
// on the wire). `dir` is empty for frames with no device endpoint; such
// records are carried through parsing but excluded by the relevance filter.
struct packet_record {
    std::size_t index = 0;
    std::uint32_t ts_sec = 0;
    std::uint32_t ts_usec = 0;
    std::uint32_t size = 0;
    protocol_class protocol = protocol_class::other;
    std::optional<direction> dir;
    std::string src_addr;  // IPv4 dotted quad, or MAC text for non-IP frames
    std::string dst_addr;
    std::optional<std::string> dns_query_name;  // set only on DNS responses
    std::optional<tcp_meta> tcp;
};

// Ordered frames from one capture. Indices increase strictly; parsing never
// reorders records.
struct packet_trace {
    std::vector<packet_record> records;
    std::string source_label;
};

// The monitored device plus infrastructure whose DNS traffic is noise.
// Addresses are matched as text against a record's src/dst fields.
struct device_profile {
    std::set<std::string> device_addresses;
    std::set<std::string> ap_addresses;

    void validate() const;  // nonempty device set, disjoint from AP set
    bool is_device(const std::string& addr) const { return device_addresses.count(addr) > 0; }
    bool is_ap(const std::string& addr) const { return ap_addresses.count(addr) > 0; }
};

// from_device when src is the device, to_device when dst is; nullopt when
// neither endpoint belongs to it. Throws data_error if both do.
std::optional<direction> resolve_direction(const std::string& src, const std::string& dst,
                                           const device_profile& profile);

}  // namespace trafsig
