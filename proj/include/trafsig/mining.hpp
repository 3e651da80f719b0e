#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trafsig/event.hpp"
#include "trafsig/parallel.hpp"
#include "trafsig/ratio.hpp"
#include "trafsig/token.hpp"

namespace trafsig {

// One event trace reduced to its distinct tokens; order and multiplicity
// are deliberately discarded.
struct transaction {
    std::vector<size_token> token_set;  // sorted, unique
    std::string origin;
};

struct mining_params {
    ratio min_support{99, 100};
    ratio min_confidence{1, 1};
    std::size_t prefix_len = 20;
    int verbosity = 1;  // log detail only; never changes outputs
};

// Exact support as a count over a transaction total.
struct support {
    std::uint64_t count = 0;
    std::uint64_t total = 0;
    double value() const { return total ? static_cast<double>(count) / static_cast<double>(total) : 0.0; }
};

struct itemset {
    std::vector<size_token> tokens;  // sorted canonical
    support supp;
};

struct association_rule {
    std::vector<size_token> antecedent;  // X, nonempty, disjoint from Y
    std::vector<size_token> consequent;  // Y
    support supp;        // support of X ∪ Y
    double confidence = 0.0;  // support(X ∪ Y) / support(X)
};

enum class strictness : std::uint8_t { strict, less_strict };

std::string_view strictness_name(strictness s);
strictness strictness_from_name(std::string_view name);

struct signature {
    std::vector<size_token> tokens;  // sorted canonical, nonempty
    event_class event;
    strictness level = strictness::strict;
};

struct count_stats {
    std::size_t n = 0;
    double mean = 0.0;
    std::optional<double> stddev;  // sample (n-1); absent when n < 2
};

// First min(n, length) tokens, order preserved.
std::vector<size_token> extract_prefix(const std::vector<size_token>& tokens, std::size_t n);

transaction to_transaction(const std::vector<size_token>& tokens, std::string origin);

// |{t : tokens ⊆ t.token_set}| / |transactions|. Throws data_error when
// the transaction list is empty (support is undefined).
support support_of(const std::vector<size_token>& tokens,
                   const std::vector<transaction>& transactions);

// Level-wise Apriori. Returns exactly the nonempty itemsets with
// support >= min_support, sorted by (size, canonical token order); the set
// is downward closed by construction. Output is independent of transaction
// order and of exec_mode.
std::vector<itemset> apriori_frequent_itemsets(const std::vector<transaction>& transactions,
                                               const ratio& min_support,
                                               exec_mode mode = exec_mode::parallel);

// Frequent itemsets with no frequent proper superset. Input must be
// downward closed (as produced by apriori_frequent_itemsets).
std::vector<itemset> maximal_itemsets(const std::vector<itemset>& frequent);

// Every bipartition X -> Y of every frequent itemset of size >= 2 whose
// confidence meets the threshold. Confidence is compared exactly
// (count ratios), not through doubles.
std::vector<association_rule> association_rules(const std::vector<itemset>& frequent,
                                                const ratio& min_confidence);

// Union of the maximal frequent itemsets at params.min_support (a single
// set whenever one maximal itemset exists). Throws data_error when nothing
// is frequent.
signature derive_strict_signature(const std::vector<transaction>& event_transactions,
                                  event_class event, const mining_params& params);

// Candidates are the (|strict|-1)-sized subsets of the strict signature,
// kept only if they are not a subset of another event's strict signature
// and match no transaction of any other event. Canonically ordered.
std::vector<signature> derive_less_strict_signatures(
    const std::map<event_class, signature>& strict_by_event,
    const std::map<event_class, std::vector<transaction>>& transactions_by_event,
    event_class target);

// Mean and sample standard deviation (divisor n-1) of per-trace packet
// counts. Throws data_error on an empty list; stddev is absent when n < 2.
count_stats packet_count_stats(const std::vector<std::uint64_t>& counts);

// Tokens seen in at least one transaction of an event and in none of any
// other event. Requires at least two event classes.
std::map<event_class, std::vector<size_token>> unique_packet_scan(
    const std::map<event_class, std::vector<transaction>>& transactions_by_event);

}  // namespace trafsig
