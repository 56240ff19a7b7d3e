// alphabet.hh -- letters as tokens, words as sequences of letter indices

#ifndef AUTSTRUCT_ALPHABET_HH
#define AUTSTRUCT_ALPHABET_HH

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace autstruct {

using LetterId = std::uint32_t;
using StateId = std::uint32_t;

/// A word is a sequence of letter indices relative to some Alphabet.
using Word = std::vector<LetterId>;

/// True iff `token` is a non-empty run of non-whitespace characters that does
/// not contain the comment character '%'.
bool is_valid_token(std::string_view token);

/// Splits on whitespace.
std::vector<std::string> split_tokens(std::string_view text);

std::string join_tokens(std::span<const std::string> tokens, std::string_view sep = " ");

/// Finite ordered set of letter tokens. Letter ids follow declaration order;
/// lex_order() gives the order by token bytes, which is the order used for
/// exploration and tie-breaking everywhere.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const noexcept { return tokens_.size(); }
    bool empty() const noexcept { return tokens_.empty(); }

    const std::string& token(LetterId letter) const { return tokens_.at(letter); }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }

    std::optional<LetterId> find(std::string_view token) const;
    bool contains(std::string_view token) const { return find(token).has_value(); }
    /// Throws UnknownLetter.
    LetterId at(std::string_view token) const;

    /// Adds a letter if absent; returns its id either way.
    LetterId insert(const std::string& token);

    const std::vector<LetterId>& lex_order() const noexcept { return lex_order_; }

    Word parse_word(std::span<const std::string> tokens) const;
    Word parse_word(std::string_view text) const;
    std::vector<std::string> tokens_of(const Word& word) const;
    std::string format(const Word& word) const;

    /// Re-expresses `word` (over this alphabet) over `target`; throws UnknownLetter
    /// when a letter has no counterpart.
    Word translate(const Word& word, const Alphabet& target) const;

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

private:
    void rebuild_lex_order();

    std::vector<std::string> tokens_;
    std::unordered_map<std::string, LetterId> index_;
    std::vector<LetterId> lex_order_;
};

} // namespace autstruct

#endif
