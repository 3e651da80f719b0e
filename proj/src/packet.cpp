#include "trafsig/packet.hpp"

#include "trafsig/error.hpp"

namespace trafsig {

std::string_view protocol_name(protocol_class p) {
    switch (p) {
        case protocol_class::dns: return "DNS";
        case protocol_class::arp: return "ARP";
        case protocol_class::dhcp: return "DHCP";
        case protocol_class::ntp: return "NTP";
        case protocol_class::tcp: return "TCP";
        case protocol_class::tls_over_tcp: return "TLS-over-TCP";
        case protocol_class::other_udp: return "OtherUDP";
        case protocol_class::other: return "Other";
    }
    throw data_error("invalid protocol class");
}

protocol_class protocol_from_name(std::string_view name) {
    for (auto p : {protocol_class::dns, protocol_class::arp, protocol_class::dhcp,
                   protocol_class::ntp, protocol_class::tcp, protocol_class::tls_over_tcp,
                   protocol_class::other_udp, protocol_class::other})
        if (protocol_name(p) == name) return p;
    throw data_error("unknown protocol '" + std::string(name) + "'");
}

namespace {

bool either_port(const header_fields& h, std::uint16_t port) {
    return (h.src_port && *h.src_port == port) || (h.dst_port && *h.dst_port == port);
}

}  // namespace

protocol_class classify_protocol(const header_fields& h) {
    if (h.ethertype == 0x0806) return protocol_class::arp;
    if (!h.ip_protocol) return protocol_class::other;
    if (*h.ip_protocol == 17) {  // UDP
        if (either_port(h, 53)) return protocol_class::dns;
        if (either_port(h, 67) || either_port(h, 68)) return protocol_class::dhcp;
        if (either_port(h, 123)) return protocol_class::ntp;
        return protocol_class::other_udp;
    }
    if (*h.ip_protocol == 6) {  // TCP
        if (either_port(h, 443) || either_port(h, 8883)) return protocol_class::tls_over_tcp;
        return protocol_class::tcp;
    }
    return protocol_class::other;
}

void device_profile::validate() const {
    if (device_addresses.empty()) throw data_error("device profile has no device addresses");
    for (const auto& a : device_addresses)
        if (ap_addresses.count(a) > 0)
            throw data_error("address '" + a + "' is both device and AP");
}

std::optional<direction> resolve_direction(const std::string& src, const std::string& dst,
                                           const device_profile& profile) {
    bool s = profile.is_device(src);
    bool d = profile.is_device(dst);
    if (s && d) throw data_error("malformed frame: device is both source and destination");
    if (s) return direction::from_device;
    if (d) return direction::to_device;
    return std::nullopt;
}

}  // namespace trafsig
