#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trafsig {

// Errors caused by malformed or unsupported input data. The CLI maps these
// to exit status 2; usage errors stay with the argument parser (status 1).
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unsupported capture container (bad magic, pcapng, non-Ethernet link type).
struct format_error : data_error {
    using data_error::data_error;
};

// Text input rejected at a specific line (token CSV, manifest).
struct parse_error : data_error {
    parse_error(const std::string& what, std::size_t line)
        : data_error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

// An operation was called outside its contract (e.g. tokenizing an
// unfiltered trace that still carries non-device records).
struct contract_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace trafsig
