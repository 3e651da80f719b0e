#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "trafsig/mining.hpp"
#include "trafsig/token.hpp"

namespace testsupport {

inline trafsig::size_token tok(const std::string& text) {
    return trafsig::token_from_string(text);
}

inline std::vector<trafsig::size_token> toks(std::initializer_list<const char*> texts) {
    std::vector<trafsig::size_token> out;
    for (const char* t : texts) out.push_back(tok(t));
    return out;
}

inline std::vector<std::string> token_texts(const std::vector<trafsig::size_token>& tokens) {
    std::vector<std::string> out;
    for (const auto& t : tokens) out.push_back(trafsig::to_string(t));
    return out;
}

inline trafsig::transaction tx(std::initializer_list<const char*> texts,
                               std::string origin = "t") {
    return trafsig::to_transaction(toks(texts), std::move(origin));
}

inline std::string fixture_dir() {
    return TRAFSIG_FIXTURE_DIR;
}

}  // namespace testsupport
