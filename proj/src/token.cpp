#include "trafsig/token.hpp"

#include <algorithm>
#include <charconv>

#include "trafsig/error.hpp"

namespace trafsig {

char direction_letter(direction d) {
    return d == direction::to_device ? 'D' : 'S';
}

direction direction_from_letter(char c) {
    switch (c) {
        case 'D': return direction::to_device;
        case 'S': return direction::from_device;
        default: throw data_error(std::string("unknown direction letter '") + c + "'");
    }
}

std::string to_string(const size_token& t) {
    return direction_letter(t.dir) + std::to_string(t.size);
}

size_token token_from_string(std::string_view text) {
    if (text.size() < 2) throw data_error("token too short: '" + std::string(text) + "'");
    size_token t;
    t.dir = direction_from_letter(text[0]);
    std::uint32_t size = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), size);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw data_error("bad token size in '" + std::string(text) + "'");
    t.size = size;
    return t;
}

std::vector<size_token> token_set(std::vector<size_token> tokens) {
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    return tokens;
}

}  // namespace trafsig
