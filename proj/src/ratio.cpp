#include "trafsig/ratio.hpp"

#include <cctype>
#include <numeric>

#include "trafsig/error.hpp"

namespace trafsig {

ratio ratio::parse_decimal(std::string_view text) {
    if (text.empty()) throw data_error("empty number");
    std::size_t i = 0;
    if (text[0] == '+') i = 1;
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool any_digit = false;
    bool seen_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_dot) throw data_error("bad decimal '" + std::string(text) + "'");
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw data_error("bad decimal '" + std::string(text) + "'");
        if (num > (INT64_MAX - 9) / 10 || (seen_dot && den > INT64_MAX / 10))
            throw data_error("decimal out of range '" + std::string(text) + "'");
        num = num * 10 + (c - '0');
        if (seen_dot) den *= 10;
        any_digit = true;
    }
    if (!any_digit) throw data_error("bad decimal '" + std::string(text) + "'");
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return ratio{num, den};
}

bool ratio::admits(std::uint64_t count, std::uint64_t total) const {
    // count/total >= num/den  <=>  count*den >= num*total
    return static_cast<unsigned __int128>(count) * static_cast<std::uint64_t>(den) >=
           static_cast<unsigned __int128>(static_cast<std::uint64_t>(num)) * total;
}

}  // namespace trafsig
