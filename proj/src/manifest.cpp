#include "trafsig/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "trafsig/error.hpp"
#include "trafsig/pcap.hpp"
#include "trafsig/serialize.hpp"
#include "trafsig/token_csv.hpp"

namespace trafsig {

namespace fs = std::filesystem;

dataset_manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open manifest '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw data_error("bad manifest JSON in '" + path + "': " + e.what());
    }

    dataset_manifest manifest;
    manifest.base_dir = fs::path(path).parent_path().string();

    std::set<std::string> ids;
    for (const auto& e : j.at("entries")) {
        manifest_entry entry;
        entry.path = e.at("path").get<std::string>();
        entry.event = event_from_name(e.at("event").get<std::string>());
        entry.environment = e.at("environment").get<std::string>();
        entry.id = e.at("id").get<std::string>();
        if (entry.environment.empty()) throw data_error("manifest entry with empty environment");
        if (!ids.insert(entry.id).second)
            throw data_error("duplicate manifest id '" + entry.id + "'");
        manifest.entries.push_back(std::move(entry));
    }
    if (j.contains("defaults")) {
        const auto& d = j["defaults"];
        if (d.contains("filter")) manifest.default_filter = filter_config_from_json(d["filter"].dump());
        if (d.contains("mining")) manifest.default_mining = mining_params_from_json(d["mining"].dump());
    }
    return manifest;
}

std::vector<labeled_trace> load_traces(const dataset_manifest& manifest) {
    std::vector<labeled_trace> traces;
    traces.reserve(manifest.entries.size());
    for (const auto& entry : manifest.entries) {
        fs::path p(entry.path);
        if (p.is_relative()) p = fs::path(manifest.base_dir) / p;

        labeled_trace trace;
        trace.event = entry.event;
        trace.environment = entry.environment;
        trace.id = entry.id;
        if (p.extension() == ".pcap") {
            if (!manifest.default_filter)
                throw data_error("manifest entry '" + entry.id +
                                 "' is a pcap but the manifest has no defaults.filter");
            auto parsed = parse_pcap_file(p.string(), manifest.default_filter->profile);
            auto [filtered, report] = apply_filter(parsed.trace, *manifest.default_filter);
            trace.tokens = tokenize(filtered);
        } else {
            trace.tokens = read_token_csv_file(p.string());
        }
        traces.push_back(std::move(trace));
    }
    return traces;
}

}  // namespace trafsig
