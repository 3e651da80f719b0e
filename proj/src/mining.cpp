#include "trafsig/mining.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "trafsig/error.hpp"

namespace trafsig {

std::string_view strictness_name(strictness s) {
    return s == strictness::strict ? "strict" : "less_strict";
}

strictness strictness_from_name(std::string_view name) {
    if (name == "strict") return strictness::strict;
    if (name == "less_strict") return strictness::less_strict;
    throw data_error("unknown strictness '" + std::string(name) + "'");
}

std::vector<size_token> extract_prefix(const std::vector<size_token>& tokens, std::size_t n) {
    return {tokens.begin(), tokens.begin() + std::min(n, tokens.size())};
}

transaction to_transaction(const std::vector<size_token>& tokens, std::string origin) {
    return transaction{token_set(tokens), std::move(origin)};
}

support support_of(const std::vector<size_token>& tokens,
                   const std::vector<transaction>& transactions) {
    if (transactions.empty()) throw data_error("support is undefined over an empty transaction list");
    auto query = token_set(tokens);
    support s{0, transactions.size()};
    for (const auto& t : transactions)
        if (std::includes(t.token_set.begin(), t.token_set.end(), query.begin(), query.end()))
            ++s.count;
    return s;
}

namespace {

// Transactions re-encoded over the sorted token universe as fixed-width
// bitsets; candidate support counting is then word-wise AND/compare.
struct bit_rows {
    std::size_t words = 0;
    std::vector<std::uint64_t> data;  // rows.size() = n_rows * words

    const std::uint64_t* row(std::size_t i) const { return data.data() + i * words; }
};

bool contains_all(const std::uint64_t* row, const std::uint64_t* mask, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w)
        if ((row[w] & mask[w]) != mask[w]) return false;
    return true;
}

// support of each candidate mask over all transaction rows; the parallel
// form writes only counts[i] per iteration, so results are bit-identical
// to the serial reference
std::vector<std::uint64_t> count_supports(const std::vector<std::uint64_t>& masks,
                                          std::size_t n_candidates, const bit_rows& rows,
                                          std::size_t n_rows, exec_mode mode) {
    std::vector<std::uint64_t> counts(n_candidates, 0);
    const std::size_t words = rows.words;
    auto count_one = [&](std::size_t c) {
        const std::uint64_t* mask = masks.data() + c * words;
        std::uint64_t n = 0;
        for (std::size_t r = 0; r < n_rows; ++r)
            if (contains_all(rows.row(r), mask, words)) ++n;
        return n;
    };
    if (mode == exec_mode::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(n_candidates); ++c)
            counts[static_cast<std::size_t>(c)] = count_one(static_cast<std::size_t>(c));
    } else {
        for (std::size_t c = 0; c < n_candidates; ++c) counts[c] = count_one(c);
    }
    return counts;
}

}  // namespace

std::vector<itemset> apriori_frequent_itemsets(const std::vector<transaction>& transactions,
                                               const ratio& min_support, exec_mode mode) {
    if (transactions.empty())
        throw data_error("support is undefined over an empty transaction list");

    // token universe in canonical order; item ids follow it, so sorting by
    // id vectors sorts by canonical token order
    std::vector<size_token> universe;
    for (const auto& t : transactions)
        universe.insert(universe.end(), t.token_set.begin(), t.token_set.end());
    universe = token_set(std::move(universe));

    const std::size_t n_rows = transactions.size();
    const std::size_t n_items = universe.size();
    bit_rows rows;
    rows.words = (n_items + 63) / 64;
    rows.data.assign(n_rows * std::max<std::size_t>(rows.words, 1), 0);
    for (std::size_t r = 0; r < n_rows; ++r) {
        std::uint64_t* row = rows.data.data() + r * rows.words;
        for (const auto& tok : transactions[r].token_set) {
            auto idx = static_cast<std::size_t>(
                std::lower_bound(universe.begin(), universe.end(), tok) - universe.begin());
            row[idx / 64] |= std::uint64_t{1} << (idx % 64);
        }
    }

    std::vector<itemset> result;
    using id_set = std::vector<std::uint32_t>;

    // L1
    std::vector<id_set> level;
    {
        std::vector<std::uint64_t> masks(n_items * rows.words, 0);
        for (std::size_t i = 0; i < n_items; ++i)
            masks[i * rows.words + i / 64] = std::uint64_t{1} << (i % 64);
        auto counts = count_supports(masks, n_items, rows, n_rows, mode);
        for (std::uint32_t i = 0; i < n_items; ++i) {
            if (!min_support.admits(counts[i], n_rows)) continue;
            level.push_back({i});
            result.push_back(itemset{{universe[i]}, support{counts[i], n_rows}});
        }
    }

    while (!level.empty()) {
        // join step: extend pairs sharing all but the last item
        std::vector<id_set> candidates;
        for (std::size_t a = 0; a < level.size(); ++a) {
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                if (!std::equal(level[a].begin(), level[a].end() - 1, level[b].begin(),
                                level[b].end() - 1))
                    break;  // level is sorted; prefixes only match in a contiguous run
                id_set cand = level[a];
                cand.push_back(level[b].back());
                candidates.push_back(std::move(cand));
            }
        }
        if (candidates.empty()) break;

        // prune step: every (k-1)-subset must be frequent
        std::set<id_set> prev(level.begin(), level.end());
        std::vector<id_set> pruned;
        for (auto& cand : candidates) {
            bool ok = true;
            for (std::size_t skip = 0; ok && skip < cand.size(); ++skip) {
                id_set s;
                s.reserve(cand.size() - 1);
                for (std::size_t j = 0; j < cand.size(); ++j)
                    if (j != skip) s.push_back(cand[j]);
                if (prev.find(s) == prev.end()) ok = false;
            }
            if (ok) pruned.push_back(std::move(cand));
        }
        if (pruned.empty()) break;

        std::vector<std::uint64_t> masks(pruned.size() * rows.words, 0);
        for (std::size_t c = 0; c < pruned.size(); ++c)
            for (auto id : pruned[c])
                masks[c * rows.words + id / 64] |= std::uint64_t{1} << (id % 64);
        auto counts = count_supports(masks, pruned.size(), rows, n_rows, mode);

        std::vector<id_set> next;
        for (std::size_t c = 0; c < pruned.size(); ++c) {
            if (!min_support.admits(counts[c], n_rows)) continue;
            std::vector<size_token> toks;
            toks.reserve(pruned[c].size());
            for (auto id : pruned[c]) toks.push_back(universe[id]);
            result.push_back(itemset{std::move(toks), support{counts[c], n_rows}});
            next.push_back(pruned[c]);
        }
        level = std::move(next);
    }

    std::sort(result.begin(), result.end(), [](const itemset& a, const itemset& b) {
        if (a.tokens.size() != b.tokens.size()) return a.tokens.size() < b.tokens.size();
        return a.tokens < b.tokens;
    });
    return result;
}

std::vector<itemset> maximal_itemsets(const std::vector<itemset>& frequent) {
    std::vector<itemset> maximal;
    for (const auto& a : frequent) {
        bool has_superset = false;
        for (const auto& b : frequent) {
            if (b.tokens.size() <= a.tokens.size()) continue;
            if (std::includes(b.tokens.begin(), b.tokens.end(), a.tokens.begin(), a.tokens.end())) {
                has_superset = true;
                break;
            }
        }
        if (!has_superset) maximal.push_back(a);
    }
    return maximal;
}

std::vector<association_rule> association_rules(const std::vector<itemset>& frequent,
                                                const ratio& min_confidence) {
    std::map<std::vector<size_token>, std::uint64_t> count_of;
    for (const auto& f : frequent) count_of[f.tokens] = f.supp.count;

    std::vector<association_rule> rules;
    for (const auto& z : frequent) {
        const std::size_t k = z.tokens.size();
        if (k < 2) continue;
        if (k > 24) throw data_error("itemset too large to enumerate rule bipartitions");
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
            std::vector<size_token> x, y;
            for (std::size_t i = 0; i < k; ++i)
                ((mask >> i) & 1 ? x : y).push_back(z.tokens[i]);
            auto it = count_of.find(x);
            if (it == count_of.end()) continue;  // unreachable for downward-closed input
            std::uint64_t cx = it->second;
            // support(Z)/support(X) >= min_confidence, exactly
            if (!min_confidence.admits(z.supp.count, cx)) continue;
            rules.push_back(association_rule{std::move(x), std::move(y), z.supp,
                                             static_cast<double>(z.supp.count) /
                                                 static_cast<double>(cx)});
        }
    }
    std::sort(rules.begin(), rules.end(), [](const association_rule& a, const association_rule& b) {
        if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
        return a.consequent < b.consequent;
    });
    return rules;
}

signature derive_strict_signature(const std::vector<transaction>& event_transactions,
                                  event_class event, const mining_params& params) {
    if (event_transactions.size() < 2)
        throw data_error("strict signature needs at least 2 transactions of '" +
                         std::string(event_name(event)) + "'");
    auto frequent = apriori_frequent_itemsets(event_transactions, params.min_support);
    if (frequent.empty())
        throw data_error("no signature: nothing is frequent at the requested support for '" +
                         std::string(event_name(event)) + "'");
    std::vector<size_token> tokens;
    for (const auto& m : maximal_itemsets(frequent))
        tokens.insert(tokens.end(), m.tokens.begin(), m.tokens.end());
    return signature{token_set(std::move(tokens)), event, strictness::strict};
}

std::vector<signature> derive_less_strict_signatures(
    const std::map<event_class, signature>& strict_by_event,
    const std::map<event_class, std::vector<transaction>>& transactions_by_event,
    event_class target) {
    auto it = strict_by_event.find(target);
    if (it == strict_by_event.end())
        throw data_error("no strict signature for '" + std::string(event_name(target)) + "'");
    const auto& strict = it->second.tokens;
    const std::size_t k = strict.size();
    std::vector<signature> out;
    if (k < 3) return out;  // no candidates of size >= 2 below a 2-token signature

    // dropping the last token first yields candidates in canonical order
    for (std::size_t drop = k; drop-- > 0;) {
        std::vector<size_token> cand;
        cand.reserve(k - 1);
        for (std::size_t j = 0; j < k; ++j)
            if (j != drop) cand.push_back(strict[j]);

        bool rejected = false;
        for (const auto& [ev, sig] : strict_by_event) {
            if (ev == target) continue;
            if (std::includes(sig.tokens.begin(), sig.tokens.end(), cand.begin(), cand.end())) {
                rejected = true;  // indistinguishable from another event's signature
                break;
            }
        }
        for (auto jt = transactions_by_event.begin();
             !rejected && jt != transactions_by_event.end(); ++jt) {
            if (jt->first == target) continue;
            for (const auto& t : jt->second) {
                if (std::includes(t.token_set.begin(), t.token_set.end(), cand.begin(),
                                  cand.end())) {
                    rejected = true;  // fires on another event's training traffic
                    break;
                }
            }
        }
        if (!rejected) out.push_back(signature{std::move(cand), target, strictness::less_strict});
    }
    return out;
}

count_stats packet_count_stats(const std::vector<std::uint64_t>& counts) {
    if (counts.empty()) throw data_error("packet count stats need at least one count");
    count_stats stats;
    stats.n = counts.size();
    long double sum = 0;
    for (auto c : counts) sum += static_cast<long double>(c);
    stats.mean = static_cast<double>(sum / static_cast<long double>(stats.n));
    if (stats.n >= 2) {
        long double ss = 0;
        for (auto c : counts) {
            long double d = static_cast<long double>(c) - static_cast<long double>(stats.mean);
            ss += d * d;
        }
        stats.stddev = static_cast<double>(std::sqrt(ss / static_cast<long double>(stats.n - 1)));
    }
    return stats;
}

std::map<event_class, std::vector<size_token>> unique_packet_scan(
    const std::map<event_class, std::vector<transaction>>& transactions_by_event) {
    if (transactions_by_event.size() < 2)
        throw data_error("unique packet scan needs at least two event classes");
    std::map<event_class, std::vector<size_token>> seen;
    for (const auto& [ev, transactions] : transactions_by_event) {
        std::vector<size_token> all;
        for (const auto& t : transactions)
            all.insert(all.end(), t.token_set.begin(), t.token_set.end());
        seen[ev] = token_set(std::move(all));
    }
    std::map<event_class, std::vector<size_token>> unique;
    for (const auto& [ev, mine] : seen) {
        std::vector<size_token> others;
        for (const auto& [other, toks] : seen) {
            if (other == ev) continue;
            others.insert(others.end(), toks.begin(), toks.end());
        }
        others = token_set(std::move(others));
        std::vector<size_token> only;
        std::set_difference(mine.begin(), mine.end(), others.begin(), others.end(),
                            std::back_inserter(only));
        unique[ev] = std::move(only);
    }
    return unique;
}

}  // namespace trafsig
