#include "trafsig/token_csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "trafsig/error.hpp"

namespace trafsig {

namespace {

// strips a trailing CR so CRLF input reads like LF
std::string_view chomp(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

}  // namespace

std::vector<size_token> read_token_csv(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;

    if (!std::getline(in, raw)) throw parse_error("missing 'direction,size' header", 1);
    ++lineno;
    if (chomp(raw) != "direction,size")
        throw parse_error("expected header 'direction,size', got '" + std::string(chomp(raw)) + "'",
                          lineno);

    std::vector<size_token> tokens;
    bool seen_blank = false;
    std::size_t blank_line = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = chomp(raw);
        if (line.empty()) {  // permitted only as trailing blank(s)
            if (!seen_blank) blank_line = lineno;
            seen_blank = true;
            continue;
        }
        if (seen_blank) throw parse_error("blank line inside data", blank_line);

        auto comma = line.find(',');
        if (comma == std::string_view::npos) throw parse_error("missing comma", lineno);
        std::string_view dir_text = line.substr(0, comma);
        std::string_view size_text = line.substr(comma + 1);
        if (dir_text.size() != 1 || (dir_text[0] != 'S' && dir_text[0] != 'D'))
            throw parse_error("unknown direction '" + std::string(dir_text) + "'", lineno);
        if (size_text.empty() || size_text[0] == '-' || size_text[0] == '+')
            throw parse_error("size must be a nonnegative integer", lineno);
        std::uint32_t size = 0;
        auto [ptr, ec] = std::from_chars(size_text.data(), size_text.data() + size_text.size(), size);
        if (ec != std::errc{} || ptr != size_text.data() + size_text.size())
            throw parse_error("bad size '" + std::string(size_text) + "'", lineno);
        tokens.push_back(size_token{direction_from_letter(dir_text[0]), size});
    }
    return tokens;
}

std::vector<size_token> read_token_csv(const std::string& text) {
    std::istringstream in(text);
    return read_token_csv(in);
}

std::vector<size_token> read_token_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open token CSV '" + path + "'");
    try {
        return read_token_csv(in);
    } catch (const parse_error& e) {
        throw data_error(path + ": " + e.what());
    }
}

std::string write_token_csv(const std::vector<size_token>& tokens) {
    std::string out = "direction,size\n";
    for (const auto& t : tokens) {
        out += direction_letter(t.dir);
        out += ',';
        out += std::to_string(t.size);
        out += '\n';
    }
    return out;
}

void write_token_csv_file(const std::string& path, const std::vector<size_token>& tokens) {
    std::ofstream out(path, std::ios::binary);  // binary: keep LF endings everywhere
    if (!out) throw data_error("cannot write token CSV '" + path + "'");
    out << write_token_csv(tokens);
}

}  // namespace trafsig
