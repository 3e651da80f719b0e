#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trafsig/token.hpp"

namespace trafsig {

// Token CSV: UTF-8, header "direction,size", one "S,<int>"/"D,<int>" line
// per token. LF written; LF or CRLF accepted. Errors carry the line number.
std::vector<size_token> read_token_csv(std::istream& in);
std::vector<size_token> read_token_csv(const std::string& text);
std::vector<size_token> read_token_csv_file(const std::string& path);

std::string write_token_csv(const std::vector<size_token>& tokens);
void write_token_csv_file(const std::string& path, const std::vector<size_token>& tokens);

}  // namespace trafsig
