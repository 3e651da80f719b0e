#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trafsig/event.hpp"
#include "trafsig/mining.hpp"
#include "trafsig/packet.hpp"
#include "trafsig/parallel.hpp"

namespace trafsig {

// A filtered token trace with its ground-truth label, the unit of
// cross-environment evaluation.
struct labeled_trace {
    std::vector<size_token> tokens;
    event_class event;
    std::string environment;
    std::string id;
};

struct eval_counts {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
};

// precision/recall use the 0-when-0/0 convention; f1 is genuinely undefined
// (not zero) when precision + recall == 0 and serializes as "undefined".
struct metrics {
    double precision = 0.0;
    double recall = 0.0;
    std::optional<double> f1;
};

struct dns_indicator_config {
    std::set<std::string> required_names = {"0550315.ingest.sentry.io", "s3.amazonaws.com"};
};

struct trace_match {
    std::string trace_id;
    bool matched = false;
};

struct eval_row {
    signature sig;
    eval_counts counts;
    metrics scores;
    std::vector<trace_match> audit;  // one entry per dataset trace, in dataset order
};

struct eval_report {
    std::vector<eval_row> rows;  // one per signature, in input order
};

// Subset containment over the trace's full token set; order and repetition
// of trace tokens are irrelevant. Throws data_error on an empty signature.
bool match_signature(const signature& sig, const std::vector<size_token>& tokens);

// True iff the trace holds a DNS response for every required name
// (case-insensitive, trailing dot ignored). Run this on a pre-filter trace:
// the relevance filter usually strips DNS.
bool dns_cleaning_indicator(const packet_trace& trace, const dns_indicator_config& config);

// tp/fn over traces labeled with the signature's event, fp over the rest.
// Throws data_error when the dataset holds no trace of that event.
eval_counts evaluate_signature(const signature& sig, const std::vector<labeled_trace>& dataset);

metrics metrics_of(const eval_counts& counts);

// One row per signature, in input order, with per-trace audit. Per-signature
// work parallelizes; results are identical across modes.
eval_report evaluate_dataset(const std::vector<signature>& signatures,
                             const std::vector<labeled_trace>& dataset,
                             exec_mode mode = exec_mode::parallel);

// Round half-up to three decimals; the serialization convention for metrics.
double round3(double v);

}  // namespace trafsig
