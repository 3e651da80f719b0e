#include <doctest.h>

#include <random>

#include "support/synth.hpp"
#include "support/util.hpp"
#include "trafsig/error.hpp"
#include "trafsig/filter.hpp"

using namespace trafsig;
using testsupport::make_trace;
using testsupport::random_trace;

namespace {

filter_config config() {
    return testsupport::synth_config();
}

packet_record rec(protocol_class proto, std::uint32_t size, std::string src, std::string dst,
                  std::optional<direction> dir, std::optional<tcp_meta> tcp = {}) {
    return testsupport::make_record(proto, size, std::move(src), std::move(dst), dir, tcp);
}

std::uint64_t removed_total(const filter_report& r) {
    std::uint64_t sum = 0;
    for (const auto& [rule, n] : r.removed_by_rule) sum += n;
    return sum;
}

}  // namespace

TEST_CASE("empty trace filters to an empty report") {
    auto [out, report] = apply_filter(packet_trace{}, config());
    CHECK(out.records.empty());
    CHECK(report.input_count == 0);
    CHECK(report.output_count == 0);
    CHECK(removed_total(report) == 0);
}

TEST_CASE("five-record trace exercises the rule ladder") {
    // ARP and NTP fall to the protocol rule, AP DNS to ap_dns, and the
    // 45-byte probe to keepalive (the 176-byte device segment acks the
    // server's data up to 5000, the probe sits at 4999)
    tcp_meta data{9000, 5000, 100, static_cast<std::uint8_t>(tcp_meta::ack_flag | 0x08), 50000, 443};
    tcp_meta probe{4999, 9100, 1, tcp_meta::ack_flag, 443, 50000};
    auto trace = make_trace({
        rec(protocol_class::arp, 60, "bb:bb:bb:bb:bb:02", "ff:ff:ff:ff:ff:ff", {}),
        rec(protocol_class::dns, 120, "192.168.1.1", "8.8.8.8", {}),
        rec(protocol_class::ntp, 90, "2.2.2.2", "192.168.1.50", direction::to_device),
        rec(protocol_class::tls_over_tcp, 176, "192.168.1.50", "3.3.3.3", direction::from_device, data),
        rec(protocol_class::tls_over_tcp, 45, "3.3.3.3", "192.168.1.50", direction::to_device, probe),
    });
    auto [out, report] = apply_filter(trace, config());
    REQUIRE(out.records.size() == 1);
    CHECK(out.records[0].size == 176);
    CHECK(report.removed_by_rule.at(filter_rule::protocol) == 2);
    CHECK(report.removed_by_rule.at(filter_rule::ap_dns) == 1);
    CHECK(report.removed_by_rule.at(filter_rule::keepalive) == 1);
    CHECK(report.removed_by_rule.at(filter_rule::min_size) == 0);
    CHECK(report.removed_by_rule.at(filter_rule::not_device) == 0);
    CHECK(report.input_count == 5);
    CHECK(report.output_count == 1);
    CHECK(report.retention_ratio == doctest::Approx(0.2));
}

TEST_CASE("size threshold keeps 98 and drops 97") {
    auto trace = make_trace({
        rec(protocol_class::tls_over_tcp, 97, "192.168.1.50", "3.3.3.3", direction::from_device),
        rec(protocol_class::tls_over_tcp, 98, "192.168.1.50", "3.3.3.3", direction::from_device),
    });
    auto [out, report] = apply_filter(trace, config());
    REQUIRE(out.records.size() == 1);
    CHECK(out.records[0].size == 98);
    CHECK(report.removed_by_rule.at(filter_rule::min_size) == 1);
}

TEST_CASE("keep-alive pair is detected and both halves attributed to the rule") {
    const std::string dev = "192.168.1.50", srv = "3.3.3.3";
    tcp_meta d0{1000, 2000, 100, tcp_meta::ack_flag, 50000, 443};  // device data
    tcp_meta a1{2000, 1100, 0, tcp_meta::ack_flag, 443, 50000};    // server acks 1100
    tcp_meta p2{1099, 2000, 0, tcp_meta::ack_flag, 50000, 443};    // probe at 1100-1
    tcp_meta a3{2000, 1100, 0, tcp_meta::ack_flag, 443, 50000};    // answer for 1099+1
    auto trace = make_trace({
        rec(protocol_class::tls_over_tcp, 176, dev, srv, direction::from_device, d0),
        rec(protocol_class::tls_over_tcp, 100, srv, dev, direction::to_device, a1),
        rec(protocol_class::tls_over_tcp, 100, dev, srv, direction::from_device, p2),
        rec(protocol_class::tls_over_tcp, 100, srv, dev, direction::to_device, a3),
    });
    auto [out, report] = apply_filter(trace, config());
    CHECK(report.removed_by_rule.at(filter_rule::keepalive) == 2);
    REQUIRE(out.records.size() == 2);
    CHECK(out.records[0].tcp->seq == 1000);
    CHECK(out.records[1].tcp->seq == 2000);
}

TEST_CASE("keep-alive detection can be disabled") {
    // server segment acks device data up to 2000; device probe sits at 1999
    tcp_meta d0{5000, 2000, 100, tcp_meta::ack_flag, 443, 50000};
    tcp_meta p1{1999, 5100, 0, tcp_meta::ack_flag, 50000, 443};
    packet_trace trace = make_trace({
        rec(protocol_class::tls_over_tcp, 176, "3.3.3.3", "192.168.1.50", direction::to_device, d0),
        rec(protocol_class::tls_over_tcp, 100, "192.168.1.50", "3.3.3.3", direction::from_device, p1),
    });
    auto cfg = config();
    auto [out0, report0] = apply_filter(trace, cfg);
    CHECK(report0.removed_by_rule.at(filter_rule::keepalive) == 1);  // detected when enabled

    cfg.exclude_keepalive = false;
    auto [out, report] = apply_filter(trace, cfg);
    CHECK(report.removed_by_rule.at(filter_rule::keepalive) == 0);
    CHECK(out.records.size() == 2);
}

TEST_CASE("not-device frames are excluded and counted") {
    auto trace = make_trace({
        rec(protocol_class::tls_over_tcp, 200, "7.7.7.7", "8.8.8.8", {}),
        rec(protocol_class::tls_over_tcp, 200, "192.168.1.50", "8.8.8.8", direction::from_device),
    });
    auto [out, report] = apply_filter(trace, config());
    CHECK(out.records.size() == 1);
    CHECK(report.removed_by_rule.at(filter_rule::not_device) == 1);
}

TEST_CASE("filter properties on randomized traces") {
    std::mt19937 rng(7);
    for (int n = 0; n < 60; ++n) {
        auto trace = random_trace(rng, 1 + n % 80);
        auto cfg = config();
        cfg.min_size_bytes = (n % 3 == 0) ? 0 : (n % 3 == 1) ? 98 : 150;

        auto [out1, r1] = apply_filter(trace, cfg);
        // accounting identity
        REQUIRE(r1.input_count == r1.output_count + removed_total(r1));
        // idempotence
        auto [out2, r2] = apply_filter(out1, cfg);
        REQUIRE(out2.records.size() == out1.records.size());
        for (std::size_t i = 0; i < out1.records.size(); ++i)
            REQUIRE(out2.records[i].index == out1.records[i].index);
        REQUIRE(removed_total(r2) == 0);
        // output is an order-preserving subsequence
        std::size_t cursor = 0;
        for (const auto& kept : out1.records) {
            while (cursor < trace.records.size() && trace.records[cursor].index != kept.index)
                ++cursor;
            REQUIRE(cursor < trace.records.size());
            REQUIRE(trace.records[cursor].size == kept.size);
            ++cursor;
        }
        // monotone threshold
        auto higher = cfg;
        higher.min_size_bytes = cfg.min_size_bytes + 40;
        auto [out3, r3] = apply_filter(trace, higher);
        REQUIRE(r3.output_count <= r1.output_count);
    }
}

TEST_CASE("protocol summary counts and fractions") {
    CHECK(protocol_summary(packet_trace{}).empty());

    auto trace = make_trace({
        rec(protocol_class::dns, 100, "a", "b", {}),
        rec(protocol_class::dns, 100, "a", "b", {}),
        rec(protocol_class::tcp, 100, "a", "b", {}),
        rec(protocol_class::tcp, 100, "a", "b", {}),
    });
    auto summary = protocol_summary(trace);
    CHECK(summary.at(protocol_class::dns) == std::pair<std::uint64_t, double>{2, 0.5});
    CHECK(summary.at(protocol_class::tcp) == std::pair<std::uint64_t, double>{2, 0.5});

    auto one = protocol_summary(make_trace({rec(protocol_class::arp, 60, "a", "b", {})}));
    CHECK(one.at(protocol_class::arp) == std::pair<std::uint64_t, double>{1, 1.0});

    std::mt19937 rng(11);
    auto big = random_trace(rng, 200);
    double total = 0;
    std::uint64_t count = 0;
    for (const auto& [proto, entry] : protocol_summary(big)) {
        count += entry.first;
        total += entry.second;
    }
    CHECK(count == big.records.size());
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("tokenize maps records to direction-size tokens") {
    auto trace = make_trace({
        rec(protocol_class::tls_over_tcp, 289, "3.3.3.3", "192.168.1.50", direction::to_device),
        rec(protocol_class::tls_over_tcp, 316, "3.3.3.3", "192.168.1.50", direction::to_device),
        rec(protocol_class::tls_over_tcp, 176, "192.168.1.50", "3.3.3.3", direction::from_device),
    });
    CHECK(tokenize(trace) == testsupport::toks({"D289", "D316", "S176"}));

    auto bad = make_trace({rec(protocol_class::tcp, 200, "7.7.7.7", "8.8.8.8", {})});
    CHECK_THROWS_AS(tokenize(bad), contract_violation);
}
