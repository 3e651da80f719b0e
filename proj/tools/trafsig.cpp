#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trafsig/detect.hpp"
#include "trafsig/error.hpp"
#include "trafsig/filter.hpp"
#include "trafsig/manifest.hpp"
#include "trafsig/mining.hpp"
#include "trafsig/pcap.hpp"
#include "trafsig/serialize.hpp"
#include "trafsig/token_csv.hpp"

namespace {

using namespace trafsig;

int g_verbosity = 1;

void note(int level, const std::string& msg) {
    if (g_verbosity >= level) std::cerr << msg << "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot write '" + path + "'");
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

filter_config build_filter_config(const std::optional<std::string>& config_path,
                                  const std::vector<std::string>& device,
                                  const std::vector<std::string>& ap,
                                  std::optional<std::uint32_t> min_size) {
    filter_config config;
    if (config_path) config = filter_config_from_json(read_file(*config_path));
    config.profile.device_addresses.insert(device.begin(), device.end());
    config.profile.ap_addresses.insert(ap.begin(), ap.end());
    if (min_size) config.min_size_bytes = *min_size;
    config.profile.validate();
    return config;
}

struct ingest_opts {
    std::string pcap, out;
    std::vector<std::string> device, ap;
    std::optional<std::string> config_path;
    std::optional<std::uint32_t> min_size;
};

int cmd_ingest(const ingest_opts& opt) {
    auto config = build_filter_config(opt.config_path, opt.device, opt.ap, opt.min_size);
    auto parsed = parse_pcap_file(opt.pcap, config.profile);
    if (parsed.truncated_tail)
        note(1, "warning: capture ends mid-record; kept " +
                    std::to_string(parsed.trace.records.size()) + " records");
    if (parsed.malformed_frames)
        note(1, "warning: " + std::to_string(parsed.malformed_frames) + " malformed frame(s)");
    auto [filtered, report] = apply_filter(parsed.trace, config);
    write_token_csv_file(opt.out, tokenize(filtered));
    note(1, "wrote " + std::to_string(report.output_count) + " tokens to " + opt.out);
    std::cout << filter_report_to_json(report);
    return 0;
}

int cmd_filter(const ingest_opts& opt) {
    auto config = build_filter_config(opt.config_path, opt.device, opt.ap, opt.min_size);
    auto parsed = parse_pcap_file(opt.pcap, config.profile);
    auto [filtered, report] = apply_filter(parsed.trace, config);

    nlohmann::ordered_json j;
    nlohmann::ordered_json summary;
    for (const auto& [proto, entry] : protocol_summary(parsed.trace))
        summary[std::string(protocol_name(proto))] = {{"count", entry.first},
                                                      {"fraction", entry.second}};
    j["protocol_summary"] = summary;
    j["filter_report"] = nlohmann::ordered_json::parse(filter_report_to_json(report));
    std::cout << j.dump(2) << "\n";
    return 0;
}

struct mine_opts {
    std::string manifest_path, event, out;
    std::optional<std::string> min_support, min_confidence;
    std::optional<std::size_t> prefix;
};

int cmd_mine(const mine_opts& opt) {
    auto manifest = load_manifest(opt.manifest_path);
    mining_params params = manifest.default_mining.value_or(mining_params{});
    if (opt.min_support) params.min_support = ratio::parse_decimal(*opt.min_support);
    if (opt.min_confidence) params.min_confidence = ratio::parse_decimal(*opt.min_confidence);
    if (opt.prefix) params.prefix_len = *opt.prefix;
    params.verbosity = g_verbosity;

    event_class target = event_from_name(opt.event);
    auto traces = load_traces(manifest);

    std::map<event_class, std::vector<transaction>> tx_by_event;
    for (const auto& t : traces)
        tx_by_event[t.event].push_back(
            to_transaction(extract_prefix(t.tokens, params.prefix_len), t.id));

    auto target_it = tx_by_event.find(target);
    if (target_it == tx_by_event.end())
        throw data_error("manifest has no traces of event '" + opt.event + "'");
    if (target_it->second.size() < 2)
        throw data_error("mining needs at least 2 traces of event '" + opt.event + "', got " +
                         std::to_string(target_it->second.size()));

    std::map<event_class, signature> strict_by_event;
    for (const auto& [ev, txs] : tx_by_event) {
        if (txs.size() < 2) continue;
        try {
            strict_by_event.insert_or_assign(ev, derive_strict_signature(txs, ev, params));
        } catch (const data_error&) {
            if (ev == target) throw;  // other events without a signature just don't screen
        }
    }
    const signature& strict = strict_by_event.at(target);
    note(2, "strict signature for " + opt.event + ": " + std::to_string(strict.tokens.size()) +
                " tokens over " + std::to_string(target_it->second.size()) + " transactions");

    std::vector<signature> sigs{strict};
    for (auto& s : derive_less_strict_signatures(strict_by_event, tx_by_event, target))
        sigs.push_back(std::move(s));
    note(1, "mined 1 strict + " + std::to_string(sigs.size() - 1) +
                " less-strict signature(s) for " + opt.event);

    write_file(opt.out, signatures_to_json(sigs));
    return 0;
}

struct eval_opts {
    std::string signatures_path, manifest_path, out;
    bool audit = false;
};

int cmd_eval(const eval_opts& opt) {
    auto sigs = signatures_from_json(read_file(opt.signatures_path));
    auto manifest = load_manifest(opt.manifest_path);
    auto traces = load_traces(manifest);
    auto report = evaluate_dataset(sigs, traces);
    write_file(opt.out, eval_report_to_json(report, opt.audit));
    note(1, "evaluated " + std::to_string(sigs.size()) + " signature(s) against " +
                std::to_string(traces.size()) + " trace(s) -> " + opt.out);
    return 0;
}

struct indicator_opts {
    std::string pcap;
    std::vector<std::string> names;
};

int cmd_indicator(const indicator_opts& opt) {
    dns_indicator_config config;
    if (!opt.names.empty()) config.required_names = {opt.names.begin(), opt.names.end()};

    // direction is irrelevant here, so no device profile is required
    auto parsed = parse_pcap_file(opt.pcap, device_profile{});

    std::set<std::string> seen;
    for (const auto& rec : parsed.trace.records)
        if (rec.protocol == protocol_class::dns && rec.dns_query_name)
            seen.insert(*rec.dns_query_name);

    bool verdict = dns_cleaning_indicator(parsed.trace, config);
    std::cout << "cleaning-indicator: " << (verdict ? "true" : "false") << "\n";
    for (const auto& name : config.required_names) {
        bool hit = dns_cleaning_indicator(parsed.trace, dns_indicator_config{{name}});
        std::cout << (hit ? "  seen: " : "  missing: ") << name << "\n";
    }
    return 0;
}

int cmd_report(const std::string& report_path) {
    auto report = eval_report_from_json(read_file(report_path));

    std::vector<std::array<std::string, 9>> rows;
    rows.push_back({"EVENT", "STRICTNESS", "SIGNATURE", "TP", "FP", "FN", "P", "R", "F1"});
    for (const auto& row : report.rows) {
        std::string sig_text;
        for (const auto& t : row.sig.tokens) {
            if (!sig_text.empty()) sig_text += ' ';
            sig_text += to_string(t);
        }
        char p[16], r[16], f1[16];
        std::snprintf(p, sizeof(p), "%.3f", round3(row.scores.precision));
        std::snprintf(r, sizeof(r), "%.3f", round3(row.scores.recall));
        if (row.scores.f1)
            std::snprintf(f1, sizeof(f1), "%.3f", round3(*row.scores.f1));
        else
            std::snprintf(f1, sizeof(f1), "undefined");
        rows.push_back({std::string(event_name(row.sig.event)),
                        std::string(strictness_name(row.sig.level)), sig_text,
                        std::to_string(row.counts.tp), std::to_string(row.counts.fp),
                        std::to_string(row.counts.fn), p, r, f1});
    }

    std::array<std::size_t, 9> width{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << line << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trafsig: mine and evaluate smart-device event signatures from traffic metadata"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("--verbosity", g_verbosity, "log detail on stderr (0..2)")->capture_default_str();

    ingest_opts ingest;
    auto* c_ingest = app.add_subcommand("ingest", "parse a pcap, filter it, write a token CSV");
    c_ingest->add_option("--pcap", ingest.pcap, "classic pcap capture")->required();
    c_ingest->add_option("--device", ingest.device, "monitored device address (repeatable)");
    c_ingest->add_option("--ap", ingest.ap, "access point address (repeatable)");
    c_ingest->add_option("--out", ingest.out, "output token CSV path")->required();
    c_ingest->add_option("--config", ingest.config_path, "filter config JSON file");
    c_ingest->add_option("--min-size", ingest.min_size, "minimum retained frame size in bytes");

    ingest_opts filt;
    auto* c_filter = app.add_subcommand("filter", "filter diagnostics: protocol summary + report");
    c_filter->add_option("--pcap", filt.pcap, "classic pcap capture")->required();
    c_filter->add_option("--device", filt.device, "monitored device address (repeatable)");
    c_filter->add_option("--ap", filt.ap, "access point address (repeatable)");
    c_filter->add_option("--config", filt.config_path, "filter config JSON file");
    c_filter->add_option("--min-size", filt.min_size, "minimum retained frame size in bytes");

    mine_opts mine;
    auto* c_mine = app.add_subcommand("mine", "derive strict and less-strict signatures");
    c_mine->add_option("--manifest", mine.manifest_path, "dataset manifest JSON")->required();
    c_mine->add_option("--event", mine.event, "event class to mine")->required();
    c_mine->add_option("--min-support", mine.min_support, "minimum support (decimal, default 0.99)");
    c_mine->add_option("--min-confidence", mine.min_confidence,
                       "minimum confidence (decimal, default 1)");
    c_mine->add_option("--prefix", mine.prefix, "per-trace token prefix length (default 20)");
    c_mine->add_option("--out", mine.out, "output signature JSON path")->required();

    eval_opts eval;
    auto* c_eval = app.add_subcommand("eval", "evaluate signatures against a labeled dataset");
    c_eval->add_option("--signatures", eval.signatures_path, "signature JSON file")->required();
    c_eval->add_option("--manifest", eval.manifest_path, "dataset manifest JSON")->required();
    c_eval->add_option("--out", eval.out, "output report JSON path")->required();
    c_eval->add_flag("--audit", eval.audit, "include per-trace match details");

    indicator_opts indicator;
    auto* c_indicator =
        app.add_subcommand("indicator", "check the DNS cleaning-event indicator on a capture");
    c_indicator->add_option("--pcap", indicator.pcap, "classic pcap capture")->required();
    c_indicator->add_option("--name", indicator.names,
                            "required DNS response name (repeatable; defaults built in)");

    std::string report_path;
    auto* c_report = app.add_subcommand("report", "render an eval report JSON as a text table");
    c_report->add_option("--in", report_path, "eval report JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage errors are always status 1
    }

    try {
        if (c_ingest->parsed()) return cmd_ingest(ingest);
        if (c_filter->parsed()) return cmd_filter(filt);
        if (c_mine->parsed()) return cmd_mine(mine);
        if (c_eval->parsed()) return cmd_eval(eval);
        if (c_indicator->parsed()) return cmd_indicator(indicator);
        if (c_report->parsed()) return cmd_report(report_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;  // data errors
    }
    return 0;
}
