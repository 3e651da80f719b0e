#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trafsig/detect.hpp"
#include "trafsig/event.hpp"
#include "trafsig/filter.hpp"
#include "trafsig/mining.hpp"

namespace trafsig {

// A labeled collection of traces (token CSVs or pcaps). Relative paths
// resolve against the manifest file's directory.
struct manifest_entry {
    std::string path;
    event_class event;
    std::string environment;
    std::string id;
};

struct dataset_manifest {
    std::vector<manifest_entry> entries;
    std::optional<filter_config> default_filter;   // used when entries point at pcaps
    std::optional<mining_params> default_mining;
    std::string base_dir;  // directory the manifest was loaded from
};

dataset_manifest load_manifest(const std::string& path);

// Loads every entry's tokens. Token CSVs are read as-is (they are already
// filtered); .pcap entries are parsed and run through the relevance filter,
// which requires default_filter to be present.
std::vector<labeled_trace> load_traces(const dataset_manifest& manifest);

}  // namespace trafsig
