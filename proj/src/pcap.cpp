#include "trafsig/pcap.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

#include "trafsig/error.hpp"

namespace trafsig {

namespace {

constexpr std::uint32_t magic_native = 0xA1B2C3D4;
constexpr std::uint32_t magic_swapped = 0xD4C3B2A1;
constexpr std::uint32_t magic_nanosec = 0xA1B23C4D;
constexpr std::uint32_t magic_nanosec_swapped = 0x4D3CB2A1;
constexpr std::uint32_t magic_pcapng = 0x0A0D0D0A;
constexpr std::uint32_t linktype_ethernet = 1;

struct reader {
    std::span<const std::uint8_t> bytes;
    bool swap = false;

    std::uint32_t u32_file(std::size_t off) const {
        std::uint32_t v;
        std::memcpy(&v, bytes.data() + off, 4);
        if (swap) v = __builtin_bswap32(v);
        return v;
    }
    std::uint16_t u16_be(std::size_t off) const {
        return static_cast<std::uint16_t>(bytes[off] << 8 | bytes[off + 1]);
    }
    std::uint32_t u32_be(std::size_t off) const {
        return static_cast<std::uint32_t>(bytes[off]) << 24 | static_cast<std::uint32_t>(bytes[off + 1]) << 16 |
               static_cast<std::uint32_t>(bytes[off + 2]) << 8 | static_cast<std::uint32_t>(bytes[off + 3]);
    }
};

std::string mac_text(const std::uint8_t* p) {
    char buf[18];
    std::snprintf(buf, sizeof(buf), "%02x:%02x:%02x:%02x:%02x:%02x", p[0], p[1], p[2], p[3], p[4],
                  p[5]);
    return buf;
}

std::string ipv4_text(const std::uint8_t* p) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%u.%u.%u.%u", p[0], p[1], p[2], p[3]);
    return buf;
}

// First question name of a DNS message, as dot-joined labels without the
// trailing dot. Question names are never compressed.
std::optional<std::string> dns_question_name(std::span<const std::uint8_t> msg) {
    if (msg.size() < 12) return std::nullopt;
    std::uint16_t qdcount = static_cast<std::uint16_t>(msg[4] << 8 | msg[5]);
    if (qdcount == 0) return std::nullopt;
    std::string name;
    std::size_t off = 12;
    while (true) {
        if (off >= msg.size()) return std::nullopt;
        std::uint8_t len = msg[off];
        if (len == 0) break;
        if ((len & 0xC0) != 0) return std::nullopt;  // compression pointer: malformed question
        if (off + 1 + len > msg.size()) return std::nullopt;
        if (!name.empty()) name += '.';
        name.append(reinterpret_cast<const char*>(msg.data() + off + 1), len);
        off += 1 + len;
    }
    return name;
}

// Fills protocol/addresses/ports/tcp/dns fields of `rec` from one Ethernet
// frame. Degrades to coarser classes when the frame is shorter than its
// headers claim.
void parse_frame(std::span<const std::uint8_t> frame, packet_record& rec) {
    header_fields hf;
    if (frame.size() < 14) {
        rec.protocol = classify_protocol(hf);
        return;
    }
    rec.dst_addr = mac_text(frame.data());
    rec.src_addr = mac_text(frame.data() + 6);
    hf.ethertype = static_cast<std::uint16_t>(frame[12] << 8 | frame[13]);
    auto l3 = frame.subspan(14);

    if (hf.ethertype == 0x0800 && l3.size() >= 20) {  // IPv4
        std::size_t ihl = (l3[0] & 0x0F) * std::size_t{4};
        if (ihl >= 20 && l3.size() >= ihl) {
            hf.ip_protocol = l3[9];
            rec.src_addr = ipv4_text(l3.data() + 12);
            rec.dst_addr = ipv4_text(l3.data() + 16);
            std::uint16_t total_len = static_cast<std::uint16_t>(l3[2] << 8 | l3[3]);
            auto l4 = l3.subspan(ihl);

            if (*hf.ip_protocol == 17 && l4.size() >= 8) {  // UDP
                hf.src_port = static_cast<std::uint16_t>(l4[0] << 8 | l4[1]);
                hf.dst_port = static_cast<std::uint16_t>(l4[2] << 8 | l4[3]);
                auto payload = l4.subspan(8);
                if (*hf.src_port == 53 || *hf.dst_port == 53) {
                    if (payload.size() >= 12 && (payload[2] & 0x80) != 0)  // QR bit: response
                        rec.dns_query_name = dns_question_name(payload);
                }
            } else if (*hf.ip_protocol == 6 && l4.size() >= 20) {  // TCP
                tcp_meta tm;
                tm.src_port = static_cast<std::uint16_t>(l4[0] << 8 | l4[1]);
                tm.dst_port = static_cast<std::uint16_t>(l4[2] << 8 | l4[3]);
                tm.seq = static_cast<std::uint32_t>(l4[4]) << 24 | static_cast<std::uint32_t>(l4[5]) << 16 |
                         static_cast<std::uint32_t>(l4[6]) << 8 | static_cast<std::uint32_t>(l4[7]);
                tm.ack = static_cast<std::uint32_t>(l4[8]) << 24 | static_cast<std::uint32_t>(l4[9]) << 16 |
                         static_cast<std::uint32_t>(l4[10]) << 8 | static_cast<std::uint32_t>(l4[11]);
                std::size_t tcp_hdr = (l4[12] >> 4) * std::size_t{4};
                tm.flags = l4[13];
                // payload from the IP total length, not the capture length:
                // Ethernet padding must not count as data
                if (total_len >= ihl + tcp_hdr)
                    tm.payload_len = static_cast<std::uint32_t>(total_len - ihl - tcp_hdr);
                hf.src_port = tm.src_port;
                hf.dst_port = tm.dst_port;
                rec.tcp = tm;
            }
        }
    }
    rec.protocol = classify_protocol(hf);
}

}  // namespace

pcap_parse_result parse_pcap(std::span<const std::uint8_t> bytes, const device_profile& profile,
                             std::string source_label) {
    // direction resolution is best-effort here, so an empty device set is
    // allowed; the relevance filter enforces the full profile invariant
    for (const auto& a : profile.device_addresses)
        if (profile.ap_addresses.count(a) > 0)
            throw data_error("address '" + a + "' is both device and AP");
    if (bytes.size() >= 4) {
        std::uint32_t raw;
        std::memcpy(&raw, bytes.data(), 4);
        if (raw == magic_pcapng || __builtin_bswap32(raw) == magic_pcapng)
            throw format_error("unsupported capture format: pcapng (convert to classic pcap)");
    }
    if (bytes.size() < 24) throw format_error("unsupported capture format: file shorter than the 24-byte header");

    reader rd{bytes, false};
    std::uint32_t magic = rd.u32_file(0);
    if (magic == magic_swapped) {
        rd.swap = true;
    } else if (magic == magic_nanosec || magic == magic_nanosec_swapped) {
        throw format_error("unsupported capture format: nanosecond pcap");
    } else if (magic != magic_native) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "unsupported capture format: bad magic 0x%08X at offset 0", magic);
        throw format_error(buf);
    }
    std::uint32_t linktype = rd.u32_file(20);
    if (linktype != linktype_ethernet)
        throw format_error("unsupported link type " + std::to_string(linktype) +
                           " (only Ethernet, type 1)");

    pcap_parse_result result;
    result.trace.source_label = std::move(source_label);

    std::size_t off = 24;
    std::size_t index = 0;
    while (off < bytes.size()) {
        if (off + 16 > bytes.size()) {
            result.truncated_tail = 1;
            break;
        }
        packet_record rec;
        rec.index = index;
        rec.ts_sec = rd.u32_file(off);
        rec.ts_usec = rd.u32_file(off + 4);
        std::uint32_t incl_len = rd.u32_file(off + 8);
        rec.size = rd.u32_file(off + 12);  // orig_len: length on the wire
        off += 16;
        if (off + incl_len > bytes.size()) {
            result.truncated_tail = 1;
            break;
        }
        parse_frame(bytes.subspan(off, incl_len), rec);
        off += incl_len;

        try {
            rec.dir = resolve_direction(rec.src_addr, rec.dst_addr, profile);
        } catch (const data_error&) {
            ++result.malformed_frames;
            rec.dir = std::nullopt;
        }
        result.trace.records.push_back(std::move(rec));
        ++index;
    }
    return result;
}

pcap_parse_result parse_pcap_file(const std::string& path, const device_profile& profile) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open capture file '" + path + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return parse_pcap(bytes, profile, path);
}

}  // namespace trafsig
