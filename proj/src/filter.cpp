#include "trafsig/filter.hpp"

#include <map>
#include <tuple>

#include "trafsig/error.hpp"

namespace trafsig {

namespace {

using flow_key = std::tuple<std::string, std::uint16_t, std::string, std::uint16_t>;

// Marks TCP keep-alive probes and the pure ACKs answering them.
//
// A probe is a segment with at most one payload byte whose sequence number
// sits one before the highest sequence the peer has acknowledged; the
// answer is the reverse-direction payloadless ACK for probe.seq + 1.
// Sequence arithmetic wraps mod 2^32. Flow state lives only within the
// trace at hand.
std::vector<bool> find_keepalives(const packet_trace& trace) {
    std::vector<bool> ka(trace.records.size(), false);
    std::map<flow_key, std::uint32_t> last_ack;      // highest ack sent on a directed flow
    std::map<flow_key, std::uint32_t> pending_answer;  // expected ack of an outstanding probe

    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const auto& rec = trace.records[i];
        if (!rec.tcp) continue;
        const tcp_meta& t = *rec.tcp;
        flow_key fwd{rec.src_addr, t.src_port, rec.dst_addr, t.dst_port};
        flow_key rev{rec.dst_addr, t.dst_port, rec.src_addr, t.src_port};

        bool pure_ack = t.payload_len == 0 && (t.flags & tcp_meta::ack_flag) &&
                        !(t.flags & (tcp_meta::syn | tcp_meta::fin | tcp_meta::rst));

        if (pure_ack) {
            auto pend = pending_answer.find(fwd);
            if (pend != pending_answer.end() && pend->second == t.ack) {
                ka[i] = true;
                pending_answer.erase(pend);
            }
        }
        if (!ka[i] && t.payload_len <= 1 && !(t.flags & (tcp_meta::syn | tcp_meta::fin | tcp_meta::rst))) {
            auto peer = last_ack.find(rev);
            if (peer != last_ack.end() && t.seq == peer->second - 1) {
                ka[i] = true;
                pending_answer[rev] = t.seq + 1;
            }
        }
        if (t.flags & tcp_meta::ack_flag) {
            auto [it, inserted] = last_ack.try_emplace(fwd, t.ack);
            if (!inserted && static_cast<std::int32_t>(t.ack - it->second) > 0) it->second = t.ack;
        }
    }
    return ka;
}

}  // namespace

std::pair<packet_trace, filter_report> apply_filter(const packet_trace& trace,
                                                    const filter_config& config) {
    config.profile.validate();
    filter_report report;
    report.input_count = trace.records.size();
    report.removed_by_rule = {{filter_rule::protocol, 0},
                              {filter_rule::ap_dns, 0},
                              {filter_rule::keepalive, 0},
                              {filter_rule::min_size, 0},
                              {filter_rule::not_device, 0}};

    std::vector<bool> keepalive;
    if (config.exclude_keepalive) keepalive = find_keepalives(trace);

    packet_trace out;
    out.source_label = trace.source_label;
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const auto& rec = trace.records[i];
        const char* removed = nullptr;
        if (config.excluded_protocols.count(rec.protocol) > 0)
            removed = filter_rule::protocol;
        else if (config.exclude_ap_dns && rec.protocol == protocol_class::dns &&
                 (config.profile.is_ap(rec.src_addr) || config.profile.is_ap(rec.dst_addr)))
            removed = filter_rule::ap_dns;
        else if (config.exclude_keepalive && keepalive[i])
            removed = filter_rule::keepalive;
        else if (rec.size < config.min_size_bytes)
            removed = filter_rule::min_size;
        else if (!rec.dir)
            removed = filter_rule::not_device;

        if (removed)
            ++report.removed_by_rule[removed];
        else
            out.records.push_back(rec);
    }
    report.output_count = out.records.size();
    report.retention_ratio =
        report.input_count
            ? static_cast<double>(report.output_count) / static_cast<double>(report.input_count)
            : 1.0;
    return {std::move(out), report};
}

std::map<protocol_class, std::pair<std::uint64_t, double>> protocol_summary(
    const packet_trace& trace) {
    std::map<protocol_class, std::pair<std::uint64_t, double>> summary;
    for (const auto& rec : trace.records) ++summary[rec.protocol].first;
    const double total = static_cast<double>(trace.records.size());
    for (auto& [proto, entry] : summary) entry.second = static_cast<double>(entry.first) / total;
    return summary;
}

std::vector<size_token> tokenize(const packet_trace& trace) {
    std::vector<size_token> tokens;
    tokens.reserve(trace.records.size());
    for (const auto& rec : trace.records) {
        if (!rec.dir)
            throw contract_violation("record " + std::to_string(rec.index) +
                                     " has no direction; run apply_filter first");
        tokens.push_back(size_token{*rec.dir, rec.size});
    }
    return tokens;
}

}  // namespace trafsig
