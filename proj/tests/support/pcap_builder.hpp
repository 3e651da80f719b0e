#pragma once

// Hand-assembled capture bytes for parser tests. Every field is written
// out explicitly from the classic-pcap, Ethernet, IPv4, UDP, TCP and DNS
// wire layouts so the tests stay independent of the parser under test.

#include <cstdint>
#include <string>
#include <vector>

namespace testsupport {

inline void put_u16_be(std::vector<std::uint8_t>& v, std::uint16_t x) {
    v.push_back(static_cast<std::uint8_t>(x >> 8));
    v.push_back(static_cast<std::uint8_t>(x & 0xFF));
}

inline void put_u32_be(std::vector<std::uint8_t>& v, std::uint32_t x) {
    v.push_back(static_cast<std::uint8_t>(x >> 24));
    v.push_back(static_cast<std::uint8_t>(x >> 16));
    v.push_back(static_cast<std::uint8_t>(x >> 8));
    v.push_back(static_cast<std::uint8_t>(x & 0xFF));
}

inline void put_u32_le(std::vector<std::uint8_t>& v, std::uint32_t x) {
    v.push_back(static_cast<std::uint8_t>(x & 0xFF));
    v.push_back(static_cast<std::uint8_t>(x >> 8));
    v.push_back(static_cast<std::uint8_t>(x >> 16));
    v.push_back(static_cast<std::uint8_t>(x >> 24));
}

inline void put_u16_le(std::vector<std::uint8_t>& v, std::uint16_t x) {
    v.push_back(static_cast<std::uint8_t>(x & 0xFF));
    v.push_back(static_cast<std::uint8_t>(x >> 8));
}

// dotted quad -> 4 raw bytes
inline std::vector<std::uint8_t> ip_bytes(const std::string& dotted) {
    std::vector<std::uint8_t> out;
    std::uint32_t acc = 0;
    for (char c : dotted) {
        if (c == '.') {
            out.push_back(static_cast<std::uint8_t>(acc));
            acc = 0;
        } else {
            acc = acc * 10 + static_cast<std::uint32_t>(c - '0');
        }
    }
    out.push_back(static_cast<std::uint8_t>(acc));
    return out;
}

struct pcap_builder {
    std::vector<std::uint8_t> bytes;
    bool big_endian = false;

    explicit pcap_builder(std::uint32_t linktype = 1, bool swapped = false) : big_endian(swapped) {
        put32(0xA1B2C3D4);  // magic, file byte order
        put16(2);           // version major
        put16(4);           // version minor
        put32(0);           // thiszone
        put32(0);           // sigfigs
        put32(65535);       // snaplen
        put32(linktype);
    }

    void put16(std::uint16_t x) { big_endian ? put_u16_be(bytes, x) : put_u16_le(bytes, x); }
    void put32(std::uint32_t x) { big_endian ? put_u32_be(bytes, x) : put_u32_le(bytes, x); }

    void add_record(const std::vector<std::uint8_t>& frame, std::uint32_t orig_len = 0,
                    std::uint32_t ts_sec = 0, std::uint32_t ts_usec = 0) {
        put32(ts_sec);
        put32(ts_usec);
        put32(static_cast<std::uint32_t>(frame.size()));                  // incl_len
        put32(orig_len ? orig_len : static_cast<std::uint32_t>(frame.size()));  // orig_len
        bytes.insert(bytes.end(), frame.begin(), frame.end());
    }
};

inline std::vector<std::uint8_t> ethernet(std::uint16_t ethertype,
                                          const std::vector<std::uint8_t>& payload,
                                          std::uint8_t dst_last = 0x01, std::uint8_t src_last = 0x02) {
    std::vector<std::uint8_t> f = {0xaa, 0xaa, 0xaa, 0xaa, 0xaa, dst_last,
                                   0xbb, 0xbb, 0xbb, 0xbb, 0xbb, src_last};
    put_u16_be(f, ethertype);
    f.insert(f.end(), payload.begin(), payload.end());
    return f;
}

inline std::vector<std::uint8_t> ipv4(const std::string& src, const std::string& dst,
                                      std::uint8_t protocol,
                                      const std::vector<std::uint8_t>& payload) {
    std::vector<std::uint8_t> h;
    h.push_back(0x45);  // version 4, IHL 5
    h.push_back(0x00);
    put_u16_be(h, static_cast<std::uint16_t>(20 + payload.size()));  // total length
    put_u16_be(h, 0x1234);                                           // id
    put_u16_be(h, 0x4000);                                           // DF
    h.push_back(64);                                                 // ttl
    h.push_back(protocol);
    put_u16_be(h, 0);  // checksum, unvalidated
    auto s = ip_bytes(src), d = ip_bytes(dst);
    h.insert(h.end(), s.begin(), s.end());
    h.insert(h.end(), d.begin(), d.end());
    h.insert(h.end(), payload.begin(), payload.end());
    return h;
}

inline std::vector<std::uint8_t> udp(std::uint16_t sport, std::uint16_t dport,
                                     const std::vector<std::uint8_t>& payload) {
    std::vector<std::uint8_t> h;
    put_u16_be(h, sport);
    put_u16_be(h, dport);
    put_u16_be(h, static_cast<std::uint16_t>(8 + payload.size()));
    put_u16_be(h, 0);  // checksum
    h.insert(h.end(), payload.begin(), payload.end());
    return h;
}

inline std::vector<std::uint8_t> tcp(std::uint16_t sport, std::uint16_t dport, std::uint32_t seq,
                                     std::uint32_t ack, std::uint8_t flags,
                                     const std::vector<std::uint8_t>& payload) {
    std::vector<std::uint8_t> h;
    put_u16_be(h, sport);
    put_u16_be(h, dport);
    put_u32_be(h, seq);
    put_u32_be(h, ack);
    h.push_back(0x50);  // data offset 5 words
    h.push_back(flags);
    put_u16_be(h, 512);  // window
    put_u16_be(h, 0);    // checksum
    put_u16_be(h, 0);    // urgent
    h.insert(h.end(), payload.begin(), payload.end());
    return h;
}

// minimal DNS message with one question; response when `response` is set
inline std::vector<std::uint8_t> dns_message(const std::string& qname, bool response) {
    std::vector<std::uint8_t> m;
    put_u16_be(m, 0x1234);                       // id
    put_u16_be(m, response ? 0x8180 : 0x0100);   // flags: QR/RD/RA vs RD
    put_u16_be(m, 1);                            // qdcount
    put_u16_be(m, 0);
    put_u16_be(m, 0);
    put_u16_be(m, 0);
    std::size_t label_start = 0;
    auto flush = [&](std::size_t end) {
        m.push_back(static_cast<std::uint8_t>(end - label_start));
        for (std::size_t i = label_start; i < end; ++i)
            m.push_back(static_cast<std::uint8_t>(qname[i]));
    };
    for (std::size_t i = 0; i <= qname.size(); ++i) {
        if (i == qname.size() || qname[i] == '.') {
            flush(i);
            label_start = i + 1;
        }
    }
    m.push_back(0);     // root label
    put_u16_be(m, 1);   // qtype A
    put_u16_be(m, 1);   // qclass IN
    return m;
}

}  // namespace testsupport
