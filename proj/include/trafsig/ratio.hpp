#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace trafsig {

// Exact nonnegative rational for support/confidence thresholds. Decimal
// flags like "0.99" become 99/100, so threshold comparisons never go
// through floating point (9/10 must not pass a 0.99 cutoff).
struct ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static ratio parse_decimal(std::string_view text);  // throws data_error
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    // count/total >= num/den, in exact integer arithmetic
    bool admits(std::uint64_t count, std::uint64_t total) const;

    friend bool operator==(const ratio&, const ratio&) = default;
};

}  // namespace trafsig
