#include "trafsig/serialize.hpp"

#include <json.hpp>

#include "trafsig/error.hpp"

namespace trafsig {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json tokens_to_json(const std::vector<size_token>& tokens) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : token_set(tokens)) arr.push_back(to_string(t));
    return arr;
}

std::vector<size_token> tokens_from_json(const ordered_json& arr) {
    std::vector<size_token> tokens;
    for (const auto& t : arr) tokens.push_back(token_from_string(t.get<std::string>()));
    return token_set(std::move(tokens));
}

// Accepts a JSON number or string; numbers go through their shortest
// round-trip rendering so 0.99 becomes exactly 99/100.
ratio ratio_from_json(const ordered_json& v) {
    if (v.is_string()) return ratio::parse_decimal(v.get<std::string>());
    if (v.is_number()) return ratio::parse_decimal(v.dump());
    throw data_error("expected a number for a support/confidence threshold");
}

ordered_json signature_to_json(const signature& sig) {
    ordered_json j;
    j["event"] = std::string(event_name(sig.event));
    j["strictness"] = std::string(strictness_name(sig.level));
    j["tokens"] = tokens_to_json(sig.tokens);
    return j;
}

signature signature_from_json(const ordered_json& j) {
    signature sig;
    sig.event = event_from_name(j.at("event").get<std::string>());
    sig.level = strictness_from_name(j.at("strictness").get<std::string>());
    sig.tokens = tokens_from_json(j.at("tokens"));
    if (sig.tokens.empty()) throw data_error("signature with empty token set");
    return sig;
}

}  // namespace

std::string filter_config_to_json(const filter_config& config) {
    ordered_json j;
    ordered_json protos = ordered_json::array();
    for (auto p : config.excluded_protocols) protos.push_back(std::string(protocol_name(p)));
    j["excluded_protocols"] = protos;
    j["exclude_ap_dns"] = config.exclude_ap_dns;
    j["exclude_keepalive"] = config.exclude_keepalive;
    j["min_size_bytes"] = config.min_size_bytes;
    j["profile"]["device_addresses"] = config.profile.device_addresses;
    j["profile"]["ap_addresses"] = config.profile.ap_addresses;
    return j.dump(2) + "\n";
}

filter_config filter_config_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("bad filter config JSON: ") + e.what());
    }
    filter_config config;
    if (j.contains("excluded_protocols")) {
        config.excluded_protocols.clear();
        for (const auto& p : j["excluded_protocols"])
            config.excluded_protocols.insert(protocol_from_name(p.get<std::string>()));
    }
    if (j.contains("exclude_ap_dns")) config.exclude_ap_dns = j["exclude_ap_dns"].get<bool>();
    if (j.contains("exclude_keepalive"))
        config.exclude_keepalive = j["exclude_keepalive"].get<bool>();
    if (j.contains("min_size_bytes")) config.min_size_bytes = j["min_size_bytes"].get<std::uint32_t>();
    if (j.contains("profile")) {
        for (const auto& a : j["profile"].value("device_addresses", ordered_json::array()))
            config.profile.device_addresses.insert(a.get<std::string>());
        for (const auto& a : j["profile"].value("ap_addresses", ordered_json::array()))
            config.profile.ap_addresses.insert(a.get<std::string>());
    }
    return config;
}

std::string filter_report_to_json(const filter_report& report) {
    ordered_json j;
    j["input_count"] = report.input_count;
    j["output_count"] = report.output_count;
    j["removed_by_rule"] = report.removed_by_rule;
    j["retention_ratio"] = report.retention_ratio;
    return j.dump(2) + "\n";
}

std::string signatures_to_json(const std::vector<signature>& sigs) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : sigs) arr.push_back(signature_to_json(s));
    return arr.dump(2) + "\n";
}

std::vector<signature> signatures_from_json(const std::string& text) {
    ordered_json arr;
    try {
        arr = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("bad signature JSON: ") + e.what());
    }
    if (!arr.is_array()) throw data_error("signature file must be a JSON array");
    std::vector<signature> sigs;
    for (const auto& j : arr) sigs.push_back(signature_from_json(j));
    return sigs;
}

std::string eval_report_to_json(const eval_report& report, bool audit) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json j;
        j["signature"] = tokens_to_json(row.sig.tokens);
        j["event"] = std::string(event_name(row.sig.event));
        j["strictness"] = std::string(strictness_name(row.sig.level));
        j["tp"] = row.counts.tp;
        j["fp"] = row.counts.fp;
        j["fn"] = row.counts.fn;
        j["precision"] = round3(row.scores.precision);
        j["recall"] = round3(row.scores.recall);
        if (row.scores.f1)
            j["f1"] = round3(*row.scores.f1);
        else
            j["f1"] = "undefined";
        if (audit) {
            ordered_json a = ordered_json::array();
            for (const auto& m : row.audit) a.push_back({{"trace", m.trace_id}, {"matched", m.matched}});
            j["audit"] = a;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

eval_report eval_report_from_json(const std::string& text) {
    ordered_json arr;
    try {
        arr = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("bad eval report JSON: ") + e.what());
    }
    if (!arr.is_array()) throw data_error("eval report must be a JSON array");
    eval_report report;
    for (const auto& j : arr) {
        eval_row row;
        row.sig.tokens = tokens_from_json(j.at("signature"));
        row.sig.event = event_from_name(j.at("event").get<std::string>());
        row.sig.level = strictness_from_name(j.value("strictness", "strict"));
        row.counts.tp = j.at("tp").get<std::uint64_t>();
        row.counts.fp = j.at("fp").get<std::uint64_t>();
        row.counts.fn = j.at("fn").get<std::uint64_t>();
        row.scores.precision = j.at("precision").get<double>();
        row.scores.recall = j.at("recall").get<double>();
        if (j.at("f1").is_string()) {
            if (j.at("f1").get<std::string>() != "undefined")
                throw data_error("f1 must be a number or \"undefined\"");
        } else {
            row.scores.f1 = j.at("f1").get<double>();
        }
        if (j.contains("audit"))
            for (const auto& a : j["audit"])
                row.audit.push_back(
                    trace_match{a.at("trace").get<std::string>(), a.at("matched").get<bool>()});
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string mining_params_to_json(const mining_params& params) {
    ordered_json j;
    j["min_support"] = params.min_support.value();
    j["min_confidence"] = params.min_confidence.value();
    j["prefix_len"] = params.prefix_len;
    j["verbosity"] = params.verbosity;
    return j.dump(2) + "\n";
}

mining_params mining_params_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("bad mining params JSON: ") + e.what());
    }
    mining_params params;
    if (j.contains("min_support")) params.min_support = ratio_from_json(j["min_support"]);
    if (j.contains("min_confidence")) params.min_confidence = ratio_from_json(j["min_confidence"]);
    if (j.contains("prefix_len")) params.prefix_len = j["prefix_len"].get<std::size_t>();
    if (j.contains("verbosity")) params.verbosity = j["verbosity"].get<int>();
    return params;
}

}  // namespace trafsig
