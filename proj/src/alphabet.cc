// alphabet.cc -- letters as tokens, words as sequences of letter indices

#include "autstruct/alphabet.hh"

#include <algorithm>
#include <cctype>

#include "autstruct/error.hh"

namespace autstruct {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnknownLetter: return "UnknownLetter";
        case ErrorKind::UnknownState: return "UnknownState";
        case ErrorKind::NotInverseDeterministic: return "NotInverseDeterministic";
        case ErrorKind::ReservedTokenCollision: return "ReservedTokenCollision";
        case ErrorKind::InvalidToken: return "InvalidToken";
        case ErrorKind::NotDeterministic: return "NotDeterministic";
        case ErrorKind::ConfigBudgetExceeded: return "ConfigBudgetExceeded";
        case ErrorKind::MalformedDfa: return "MalformedDfa";
        case ErrorKind::MalformedMachine: return "MalformedMachine";
        case ErrorKind::NotGAutomaton: return "NotGAutomaton";
        case ErrorKind::SpaceBoundViolated: return "SpaceBoundViolated";
        case ErrorKind::LeftEdgeViolated: return "LeftEdgeViolated";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

bool is_valid_token(std::string_view token) {
    if (token.empty()) {
        return false;
    }
    return std::none_of(token.begin(), token.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '%';
    });
}

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> result;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (i > start) {
            result.emplace_back(text.substr(start, i - start));
        }
    }
    return result;
}

std::string join_tokens(std::span<const std::string> tokens, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += tokens[i];
    }
    return out;
}

Alphabet::Alphabet(std::vector<std::string> tokens) {
    for (auto& token : tokens) {
        if (!is_valid_token(token) || token.front() == '~') {
            throw Error(ErrorKind::InvalidToken, "invalid letter token '" + token + "'");
        }
        if (index_.contains(token)) {
            throw Error(ErrorKind::InvalidToken, "duplicate letter '" + token + "'");
        }
        index_.emplace(token, static_cast<LetterId>(tokens_.size()));
        tokens_.push_back(std::move(token));
    }
    rebuild_lex_order();
}

std::optional<LetterId> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

LetterId Alphabet::at(std::string_view token) const {
    if (auto id = find(token)) {
        return *id;
    }
    throw Error(ErrorKind::UnknownLetter, "unknown letter '" + std::string(token) + "'");
}

LetterId Alphabet::insert(const std::string& token) {
    if (auto id = find(token)) {
        return *id;
    }
    if (!is_valid_token(token) || token.front() == '~') {
        throw Error(ErrorKind::InvalidToken, "invalid letter token '" + token + "'");
    }
    auto id = static_cast<LetterId>(tokens_.size());
    index_.emplace(token, id);
    tokens_.push_back(token);
    rebuild_lex_order();
    return id;
}

void Alphabet::rebuild_lex_order() {
    lex_order_.resize(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        lex_order_[i] = static_cast<LetterId>(i);
    }
    std::sort(lex_order_.begin(), lex_order_.end(),
              [this](LetterId a, LetterId b) { return tokens_[a] < tokens_[b]; });
}

Word Alphabet::parse_word(std::span<const std::string> tokens) const {
    Word word;
    word.reserve(tokens.size());
    for (const auto& token : tokens) {
        word.push_back(at(token));
    }
    return word;
}

Word Alphabet::parse_word(std::string_view text) const {
    auto tokens = split_tokens(text);
    return parse_word(tokens);
}

std::vector<std::string> Alphabet::tokens_of(const Word& word) const {
    std::vector<std::string> result;
    result.reserve(word.size());
    for (LetterId letter : word) {
        result.push_back(token(letter));
    }
    return result;
}

std::string Alphabet::format(const Word& word) const {
    auto tokens = tokens_of(word);
    return join_tokens(tokens);
}

Word Alphabet::translate(const Word& word, const Alphabet& target) const {
    Word result;
    result.reserve(word.size());
    for (LetterId letter : word) {
        result.push_back(target.at(token(letter)));
    }
    return result;
}

} // namespace autstruct
