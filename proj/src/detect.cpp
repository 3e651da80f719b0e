#include "trafsig/detect.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "trafsig/error.hpp"

namespace trafsig {

bool match_signature(const signature& sig, const std::vector<size_token>& tokens) {
    if (sig.tokens.empty()) throw data_error("invalid signature: empty token set");
    auto trace_set = token_set(tokens);
    auto sig_set = token_set(sig.tokens);
    return std::includes(trace_set.begin(), trace_set.end(), sig_set.begin(), sig_set.end());
}

namespace {

std::string normalize_dns_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (!out.empty() && out.back() == '.') out.pop_back();
    return out;
}

}  // namespace

bool dns_cleaning_indicator(const packet_trace& trace, const dns_indicator_config& config) {
    std::set<std::string> wanted;
    for (const auto& n : config.required_names) wanted.insert(normalize_dns_name(n));
    for (const auto& rec : trace.records) {
        if (rec.protocol != protocol_class::dns || !rec.dns_query_name) continue;
        wanted.erase(normalize_dns_name(*rec.dns_query_name));
        if (wanted.empty()) return true;
    }
    return wanted.empty();
}

eval_counts evaluate_signature(const signature& sig, const std::vector<labeled_trace>& dataset) {
    bool event_present = false;
    eval_counts counts;
    for (const auto& trace : dataset) {
        bool same_event = trace.event == sig.event;
        event_present = event_present || same_event;
        bool matched = match_signature(sig, trace.tokens);
        if (same_event && matched) ++counts.tp;
        else if (same_event) ++counts.fn;
        else if (matched) ++counts.fp;
    }
    if (!event_present)
        throw data_error("cannot evaluate signature: no trace labeled '" +
                         std::string(event_name(sig.event)) + "' in the dataset");
    return counts;
}

metrics metrics_of(const eval_counts& counts) {
    metrics m;
    m.precision = counts.tp + counts.fp
                      ? static_cast<double>(counts.tp) / static_cast<double>(counts.tp + counts.fp)
                      : 0.0;
    m.recall = counts.tp + counts.fn
                   ? static_cast<double>(counts.tp) / static_cast<double>(counts.tp + counts.fn)
                   : 0.0;
    if (m.precision + m.recall > 0.0)
        m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    return m;
}

eval_report evaluate_dataset(const std::vector<signature>& signatures,
                             const std::vector<labeled_trace>& dataset, exec_mode mode) {
    eval_report report;
    report.rows.resize(signatures.size());

    // precompute trace token sets once; matching is then pure lookup
    std::vector<std::vector<size_token>> trace_sets(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) trace_sets[i] = token_set(dataset[i].tokens);

    std::string first_error;
    auto eval_one = [&](std::size_t s) {
        const signature& sig = signatures[s];
        if (sig.tokens.empty()) {
            return std::string("invalid signature: empty token set");
        }
        auto sig_set = token_set(sig.tokens);
        eval_row row;
        row.sig = sig;
        row.audit.reserve(dataset.size());
        bool event_present = false;
        for (std::size_t i = 0; i < dataset.size(); ++i) {
            bool matched = std::includes(trace_sets[i].begin(), trace_sets[i].end(),
                                         sig_set.begin(), sig_set.end());
            bool same_event = dataset[i].event == sig.event;
            event_present = event_present || same_event;
            if (same_event && matched) ++row.counts.tp;
            else if (same_event) ++row.counts.fn;
            else if (matched) ++row.counts.fp;
            row.audit.push_back(trace_match{dataset[i].id, matched});
        }
        if (!event_present)
            return "cannot evaluate signature: no trace labeled '" +
                   std::string(event_name(sig.event)) + "' in the dataset";
        row.scores = metrics_of(row.counts);
        report.rows[s] = std::move(row);
        return std::string();
    };

    if (mode == exec_mode::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(signatures.size()); ++s) {
            auto err = eval_one(static_cast<std::size_t>(s));
            if (!err.empty()) {
#pragma omp critical
                if (first_error.empty()) first_error = err;
            }
        }
    } else {
        for (std::size_t s = 0; s < signatures.size() && first_error.empty(); ++s)
            first_error = eval_one(s);
    }
    if (!first_error.empty()) throw data_error(first_error);
    return report;
}

double round3(double v) {
    return std::floor(v * 1000.0 + 0.5) / 1000.0;
}

}  // namespace trafsig
