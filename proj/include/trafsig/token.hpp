#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace trafsig {

// Traffic direction relative to the monitored device. Rendered as a single
// letter: "D" when the device is the destination, "S" when it is the source.
enum class direction : std::uint8_t {
    to_device,    // "D"
    from_device,  // "S"
};

char direction_letter(direction d);
direction direction_from_letter(char c);  // throws data_error on anything but 'S'/'D'

// The atomic item of mining: a direction paired with an on-the-wire frame
// size in bytes. Canonical order puts S-tokens before D-tokens, sizes
// ascending, so serialized token lists are stable.
struct size_token {
    direction dir;
    std::uint32_t size = 0;

    friend bool operator==(const size_token&, const size_token&) = default;
    friend std::strong_ordering operator<=>(const size_token& a, const size_token& b) {
        bool ad = a.dir == direction::to_device;
        bool bd = b.dir == direction::to_device;
        if (ad != bd) return ad <=> bd;  // S (from_device) sorts first
        return a.size <=> b.size;
    }
};

// Text form is the letter immediately followed by the decimal size: "S176".
std::string to_string(const size_token& t);
size_token token_from_string(std::string_view text);  // throws data_error

// Sorted-unique view of a token sequence, i.e. set semantics.
std::vector<size_token> token_set(std::vector<size_token> tokens);

}  // namespace trafsig
