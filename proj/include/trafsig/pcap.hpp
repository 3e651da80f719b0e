#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "trafsig/packet.hpp"

namespace trafsig {

// Classic pcap only: 24-byte global header (magic 0xA1B2C3D4, native or
// byte-swapped), 16-byte record headers, Ethernet link type (1). pcapng and
// nanosecond captures are rejected with a format_error.
struct pcap_parse_result {
    packet_trace trace;
    std::uint32_t truncated_tail = 0;    // 1 if the capture ends mid-record
    std::uint32_t malformed_frames = 0;  // device-to-device and similar oddities
};

pcap_parse_result parse_pcap(std::span<const std::uint8_t> bytes, const device_profile& profile,
                             std::string source_label = {});

pcap_parse_result parse_pcap_file(const std::string& path, const device_profile& profile);

}  // namespace trafsig
